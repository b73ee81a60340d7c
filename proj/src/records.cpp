#include "dtriple/records.hpp"

#include <stdexcept>

namespace dtriple {

Record element_record(const Int& v) { return v.str(); }

Record element_record(const GInt& v) {
  Record r;
  r["re"] = v.re.str();
  r["im"] = v.im.str();
  return r;
}

Int int_from_record(const Record& r) {
  if (!r.is_string()) throw std::invalid_argument("integer record must be a decimal string");
  return Int::parse(r.get<std::string>());
}

GInt gint_from_record(const Record& r) {
  if (!r.is_object() || !r.contains("re") || !r.contains("im")) {
    throw std::invalid_argument("Gaussian record must be an object with re and im");
  }
  return GInt(int_from_record(r.at("re")), int_from_record(r.at("im")));
}

template <class Ring>
Record certificate_record(const DnCertificate<Ring>& cert) {
  Record out;
  out["n"] = element_record(cert.n);
  Record roots = Record::array();
  for (const auto& pr : cert.roots) {
    Record entry;
    entry["pair"] = Record::array({pr.i, pr.j});
    entry["root"] = element_record(pr.root);
    roots.push_back(std::move(entry));
  }
  out["roots"] = std::move(roots);
  return out;
}

template <class Ring>
Record family_record(const FamilyRecord<Ring>& rec) {
  Record out;
  out["ring"] = std::string(ring_name(Ring::tag));
  out["provenance"] = std::string(provenance_name(rec.provenance));
  Record elems = Record::array();
  for (const auto& e : rec.triple.elements()) elems.push_back(element_record(e));
  out["elements"] = std::move(elems);
  Record certs = Record::array();
  for (const auto& c : rec.certificates) certs.push_back(certificate_record(c));
  out["certificates"] = std::move(certs);
  return out;
}

template <class Ring>
std::string family_text(const FamilyRecord<Ring>& rec) {
  std::string out = "{";
  const auto& elems = rec.triple.elements();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (k) out += ", ";
    out += Ring::str(elems[k]);
  }
  out += "} over ";
  out += Ring::tag == RingTag::integers ? "Z" : "Z[i]";
  out += " [";
  out += provenance_name(rec.provenance);
  out += "]\n";
  for (const auto& c : rec.certificates) {
    out += "  D(" + Ring::str(c.n) + "):";
    for (const auto& pr : c.roots) {
      out += " a" + std::to_string(pr.i + 1) + "a" + std::to_string(pr.j + 1) + "+n = (" + Ring::str(pr.root) + ")^2";
      if (&pr != &c.roots.back()) out += ",";
    }
    out += "\n";
  }
  return out;
}

Record pell_unit_record(const PellUnit& unit) {
  Record out;
  out["d"] = unit.d.str();
  out["x1"] = unit.x1.str();
  out["y1"] = unit.y1.str();
  return out;
}

Record pell_context_record(const PellContext& ctx) {
  Record out;
  out["d"] = ctx.d().str();
  out["n"] = ctx.n().str();
  out["base"] = Record::array({ctx.base().z.str(), ctx.base().y.str()});
  out["unit"] = Record::array({ctx.unit().x1.str(), ctx.unit().y1.str()});
  out["step"] = ctx.step();
  out["unit_parity_as_assumed"] = ctx.unit_parity_as_assumed();
  return out;
}

Record pell_solution_record(std::size_t t, const PellPair& sol) {
  Record out;
  out["t"] = t;
  out["z"] = sol.z.str();
  out["y"] = sol.y.str();
  return out;
}

template Record certificate_record(const DnCertificate<IntegerRing>&);
template Record certificate_record(const DnCertificate<GaussianRing>&);
template Record family_record(const FamilyRecord<IntegerRing>&);
template Record family_record(const FamilyRecord<GaussianRing>&);
template std::string family_text(const FamilyRecord<IntegerRing>&);
template std::string family_text(const FamilyRecord<GaussianRing>&);

}  // namespace dtriple
