#include "dtriple/cli.hpp"

#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "dtriple/records.hpp"

namespace dtriple::cli {

namespace {

enum class Format { records, text };

// Raised when a command finishes normally but the checked claim is false.
struct Refuted {
  std::string message;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

template <class Ring>
std::vector<typename Ring::Elem> parse_list(const std::string& text) {
  std::vector<typename Ring::Elem> out;
  for (const auto& item : split_list(text)) out.push_back(Ring::parse(item));
  return out;
}

class Emitter {
 public:
  Emitter(std::ostream& out, Format fmt) : out_(out), fmt_(fmt) {}

  // Re-verifies before printing; an uncertified record never reaches out_.
  template <class Ring>
  void family(const FamilyRecord<Ring>& rec, const std::optional<Record>& extra = std::nullopt,
              const char* extra_key = nullptr) {
    if (!check_record(rec)) {
      throw ClaimFailure("record failed re-verification before output", "verified certificates",
                         family_record(rec).dump());
    }
    if (fmt_ == Format::text) {
      out_ << family_text(rec);
      if (extra) out_ << "  " << extra_key << ": " << extra->dump() << "\n";
      return;
    }
    Record r = family_record(rec);
    if (extra) r[extra_key] = *extra;
    out_ << r.dump() << "\n";
  }

  void record(const Record& r, const std::string& text) {
    if (fmt_ == Format::text) {
      out_ << text << "\n";
    } else {
      out_ << r.dump() << "\n";
    }
  }

 private:
  std::ostream& out_;
  Format fmt_;
};

struct Options {
  std::string format = "records";
  std::string ring = "z";
  std::string triple;
  std::string n;
  std::string x;
  std::string m;
  std::string bound;
  std::string grid_norm = "1000000";
  std::string d;
  std::string base;
  std::string a, na, b, nb;
  std::size_t count = 1;
  unsigned workers = 1;
  int step = 1;
};

template <class Ring>
std::string pair_failure(const DTuple<Ring>& t, const typename Ring::Elem& n) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const auto v = t[i] * t[j] + n;
      if (!Ring::sqrt(v)) {
        return "a" + std::to_string(i + 1) + "*a" + std::to_string(j + 1) + " + n = " + Ring::str(v) +
               " is not a square";
      }
    }
  }
  return "";
}

template <class Ring>
void cmd_verify(const Options& o, Emitter& emit) {
  DTuple<Ring> t(parse_list<Ring>(o.triple));
  const auto n = Ring::parse(o.n);
  auto cert = verify_dn(t, n);
  if (!cert) throw Refuted{"not D(" + Ring::str(n) + "): " + pair_failure(t, n)};
  emit.family(FamilyRecord<Ring>{t, {std::move(*cert)}, Provenance::manual});
}

template <class Ring>
void cmd_second(const Options& o, Emitter& emit) {
  DTuple<Ring> t(parse_list<Ring>(o.triple));
  if (t.size() != 3) throw std::invalid_argument("--triple needs exactly three elements");
  const auto n = Ring::parse(o.n);
  auto first = verify_dn(t, n);
  if (!first) throw Refuted{"not D(" + Ring::str(n) + "): " + pair_failure(t, n)};
  auto second = second_property(t, n);
  if (!second) {
    throw Refuted{"second-property hypotheses fail (a+b+c not even, c = a+b+-2sqrt(ab+n), or x(2P) not in the ring)"};
  }
  emit.family(FamilyRecord<Ring>{t, {std::move(*first), std::move(*second)}, Provenance::manual});
}

template <class Ring>
void cmd_extend(const Options& o, Emitter& emit) {
  DTuple<Ring> t(parse_list<Ring>(o.triple));
  if (t.size() != 3) throw std::invalid_argument("--triple needs exactly three elements");
  FamilyRecord<Ring> rec{t, {}, Provenance::manual};
  for (const auto& n : parse_list<Ring>(o.n)) {
    if (rec.certifies(n)) continue;
    auto cert = verify_dn(t, n);
    if (!cert) throw Refuted{"seed not D(" + Ring::str(n) + "): " + pair_failure(t, n)};
    rec.certificates.push_back(std::move(*cert));
  }
  emit.family(four_n_extend(rec, ExtendOptions{Int::parse(o.grid_norm)}));
}

template <class Ring>
void cmd_spectrum(const Options& o, Emitter& emit) {
  DTuple<Ring> t(parse_list<Ring>(o.triple));
  if (t.size() != 3) throw std::invalid_argument("--triple needs exactly three elements");
  FamilyRecord<Ring> rec{t, n_spectrum(t, Int::parse(o.bound), o.workers), Provenance::manual};
  emit.family(rec);
}

template <class Ring>
void cmd_equiv(const Options& o, Emitter& emit) {
  DTuple<Ring> a(parse_list<Ring>(o.a));
  DTuple<Ring> b(parse_list<Ring>(o.b));
  const auto na = Ring::parse(o.na);
  const auto nb = Ring::parse(o.nb);
  auto u = is_equivalent(a, na, b, nb);
  if (!u) throw Refuted{"not equivalent"};
  Record r;
  r["ring"] = std::string(ring_name(Ring::tag));
  r["u"] = element_record(*u);
  emit.record(r, "equivalent with u = " + Ring::str(*u));
}

void cmd_theorem1(const Options& o, Emitter& emit) {
  Theorem1Family family(Int::parse(o.n), Int::parse(o.x));
  for (std::size_t k = 0; k < o.count; ++k) {
    Theorem1Step step = family.next();
    emit.family(step.record, pell_solution_record(step.pell_index, step.solution), "pell");
  }
}

void cmd_pell(const Options& o, Emitter& emit) {
  const Int d = Int::parse(o.d);
  if (o.n.empty()) {
    const PellUnit u = fundamental_unit(d);
    emit.record(pell_unit_record(u), "x1 = " + u.x1.str() + ", y1 = " + u.y1.str() + " (D = " + d.str() + ")");
    return;
  }
  const auto base = split_list(o.base);
  if (base.size() != 2) throw std::invalid_argument("--base expects z,y");
  const PellContext ctx(d, Int::parse(o.n), PellPair{Int::parse(base[0]), Int::parse(base[1])}, o.step);
  emit.record(pell_context_record(ctx), "context " + pell_context_record(ctx).dump());
  PellSolutions stream(ctx);
  for (std::size_t k = 0; k < o.count; ++k) {
    const PellPair s = stream.next();
    emit.record(pell_solution_record(stream.index(), s),
                "t = " + std::to_string(stream.index()) + ": z = " + s.z.str() + ", y = " + s.y.str());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diophantine triples with the D(n) property for several n"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"records", "text"}));

  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "Ring: z or zi")->check(CLI::IsMember({"z", "zi"}));
  };

  auto* verify = app.add_subcommand("verify", "Certify that a tuple has the property D(n)");
  add_ring(verify);
  verify->add_option("--triple", o.triple, "Comma-separated elements")->required();
  verify->add_option("--n", o.n, "n")->required();

  auto* second = app.add_subcommand("second", "Derive D(x(2P)) from a D(n) triple");
  add_ring(second);
  second->add_option("--triple", o.triple)->required();
  second->add_option("--n", o.n)->required();

  auto* theorem1 = app.add_subcommand("theorem1", "Triples {1, x^2-n, c} that are D(n) and D(x(2P))");
  theorem1->add_option("--n", o.n)->required();
  theorem1->add_option("--x", o.x)->required();
  theorem1->add_option("--count", o.count);

  auto* corollary = app.add_subcommand("corollary", "Regular-quadruple family in Z[i] at parameter m");
  corollary->add_option("--m", o.m)->required();

  auto* gexample = app.add_subcommand("gaussian-example", "The {2m(m+i), ...} family in Z[i]");
  gexample->add_option("--m", o.m)->required();

  auto* extend = app.add_subcommand("extend", "Search the induced curve for further n");
  add_ring(extend);
  extend->add_option("--triple", o.triple)->required();
  extend->add_option("--n", o.n, "Comma-separated seed values")->required();
  extend->add_option("--grid-norm", o.grid_norm, "Norm bound for auxiliary x-coordinates");

  auto* spectrum = app.add_subcommand("spectrum", "Enumerate n with bounded root of ab + n");
  add_ring(spectrum);
  spectrum->add_option("--triple", o.triple)->required();
  spectrum->add_option("--bound", o.bound)->required();
  spectrum->add_option("--workers", o.workers)->check(CLI::Range(1u, 256u));

  auto* pell = app.add_subcommand("pell", "Fundamental unit and solution classes of z^2 - D y^2 = N");
  pell->add_option("--d", o.d)->required();
  auto* pell_n = pell->add_option("--n", o.n);
  pell->add_option("--base", o.base, "z,y")->needs(pell_n);
  pell_n->needs(pell->get_option("--base"));
  pell->add_option("--step", o.step)->check(CLI::IsMember({1, 2}));
  pell->add_option("--count", o.count);

  auto* equiv = app.add_subcommand("equiv", "Find u with A = uB and nA = u^2 nB");
  add_ring(equiv);
  equiv->add_option("--a", o.a)->required();
  equiv->add_option("--na", o.na)->required();
  equiv->add_option("--b", o.b)->required();
  equiv->add_option("--nb", o.nb)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Emitter emit(out, o.format == "text" ? Format::text : Format::records);
  const bool gaussian = o.ring == "zi";
  try {
    if (verify->parsed()) {
      gaussian ? cmd_verify<GaussianRing>(o, emit) : cmd_verify<IntegerRing>(o, emit);
    } else if (second->parsed()) {
      gaussian ? cmd_second<GaussianRing>(o, emit) : cmd_second<IntegerRing>(o, emit);
    } else if (theorem1->parsed()) {
      cmd_theorem1(o, emit);
    } else if (corollary->parsed()) {
      const auto rec = corollary_family(GInt::parse(o.m));
      emit.family(rec);
    } else if (gexample->parsed()) {
      const auto rec = gaussian_example_family(GInt::parse(o.m));
      emit.family(rec);
    } else if (extend->parsed()) {
      gaussian ? cmd_extend<GaussianRing>(o, emit) : cmd_extend<IntegerRing>(o, emit);
    } else if (spectrum->parsed()) {
      gaussian ? cmd_spectrum<GaussianRing>(o, emit) : cmd_spectrum<IntegerRing>(o, emit);
    } else if (pell->parsed()) {
      cmd_pell(o, emit);
    } else if (equiv->parsed()) {
      gaussian ? cmd_equiv<GaussianRing>(o, emit) : cmd_equiv<IntegerRing>(o, emit);
    }
  } catch (const Refuted& r) {
    err << "failed: " << r.message << "\n";
    return kExitFailed;
  } catch (const ClaimFailure& f) {
    err << "failed: " << f.what() << "\n"
        << "  expected: " << f.expected() << "\n"
        << "  computed: " << f.computed() << "\n";
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace dtriple::cli
