#pragma once

#include <string>

#include <json.hpp>

#include "dtriple/pell.hpp"
#include "dtriple/tuples.hpp"

namespace dtriple {

using Record = nlohmann::ordered_json;

// Integers render as decimal strings; Gaussian integers as {"re", "im"}.
Record element_record(const Int& v);
Record element_record(const GInt& v);

// Inverse of element_record; throws std::invalid_argument on malformed input.
Int int_from_record(const Record& r);
GInt gint_from_record(const Record& r);

template <class Ring>
Record certificate_record(const DnCertificate<Ring>& cert);

// {"ring", "provenance", "elements", "certificates"} in that order.
template <class Ring>
Record family_record(const FamilyRecord<Ring>& rec);

// One-line human readable form, certificates indented beneath.
template <class Ring>
std::string family_text(const FamilyRecord<Ring>& rec);

Record pell_unit_record(const PellUnit& unit);
Record pell_context_record(const PellContext& ctx);
Record pell_solution_record(std::size_t t, const PellPair& sol);

}  // namespace dtriple
