#pragma once

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/examples.hpp"
#include "hopfkit/expr.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/order.hpp"
#include "hopfkit/presentation_io.hpp"
#include "hopfkit/report.hpp"
#include "hopfkit/structure.hpp"

namespace hopfkit::cli {

/// Exit codes: every check passed / some check failed / bad input.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  std::string file;
  std::string family;
  std::string n;
  std::string p;
  std::string q;
  std::optional<unsigned> bound;
  std::uint64_t cutoff = kDefaultCutoff;
  bool json = false;
  std::string x = "1";
  std::string y = "1";
};

/// "7", "2,3,5" or "2..12".
inline std::vector<std::uint64_t> parse_int_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error("expected a non-negative integer, got '" + s + "'");
    return std::stoull(s);
  };
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::uint64_t lo = number(text.substr(0, dots)), hi = number(text.substr(dots + 2));
    if (lo > hi) throw Error("empty range '" + text + "'");
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(number(item));
  if (out.empty()) throw Error("empty list");
  return out;
}

inline std::optional<std::uint64_t> single(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  const auto v = parse_int_list(text);
  if (v.size() != 1) throw Error(std::string("--") + flag + " takes a single value for this command");
  return v.front();
}

/// A presentation to operate on, with the builder parameters when it came
/// from a family.
struct Target {
  HopfPresentation H;
  std::optional<examples::ExampleSpec> spec;
  std::string label;
};

inline examples::ExampleSpec family_spec(const Options& o, std::optional<std::uint64_t> n,
                                         std::optional<std::uint64_t> p) {
  using examples::ExampleSpec;
  const std::string& f = o.family;
  if (f == "uq-borel") {
    if (p) {
      if (o.q.empty()) throw Error("uq-borel over GF(p) needs --q");
      const Field field = FieldDescriptor::prime_field(*p);
      return ExampleSpec::uq_borel(field, parse_scalar(o.q, field));
    }
    if (n) {
      ExampleSpec s = ExampleSpec::uq_borel_cyclotomic(static_cast<unsigned>(*n));
      if (!o.q.empty()) s.q = parse_scalar(o.q, s.field);
      return s;
    }
    ExampleSpec s = ExampleSpec::uq_borel_generic();
    if (!o.q.empty()) s.q = parse_scalar(o.q, s.field);
    return s;
  }
  if (f == "taft-wilson") {
    if (!p) throw Error("taft-wilson needs --p");
    return ExampleSpec::taft_wilson(*p);
  }
  const Field field = p ? FieldDescriptor::prime_field(*p) : FieldDescriptor::rationals();
  if (f == "group-cyclic") {
    if (!n) throw Error("group-cyclic needs --n");
    return ExampleSpec::group_cyclic(static_cast<unsigned>(*n), field);
  }
  if (f == "group-laurent") return ExampleSpec::group_laurent(field);
  throw Error("unknown family '" + f + "'; expected uq-borel, taft-wilson, group-cyclic or group-laurent");
}

inline Target load_target(const Options& o, std::optional<std::uint64_t> n, std::optional<std::uint64_t> p) {
  if (!o.file.empty() && !o.family.empty()) throw Error("give either --file or --family, not both");
  if (!o.file.empty()) {
    HopfPresentation H = io::read_presentation_file(o.file);
    std::string label = H.info().name.empty() ? o.file : H.info().name;
    return {std::move(H), std::nullopt, std::move(label)};
  }
  if (o.family.empty()) throw Error("give --file or --family");
  const examples::ExampleSpec spec = family_spec(o, n, p);
  return {examples::build(spec), spec, spec.label()};
}

inline Target load_target(const Options& o) { return load_target(o, single(o.n, "n"), single(o.p, "p")); }

/// Collects reports and renders them as text or JSON.
class Output {
 public:
  Output(std::string command, const Options& o) : json_(o.json) { doc_["command"] = std::move(command); }

  void presentation(const Target& t) {
    doc_["presentation"] = t.label;
    if (!json_) text_ << "presentation: " << t.label << "\n";
  }
  void report(const CheckReport& r) {
    ok_ = ok_ && r.passed;
    reports_.push_back(r.to_json());
    if (!json_) text_ << r.to_text();
  }
  void line(const std::string& s) {
    if (!json_) text_ << s << "\n";
  }
  void set(const std::string& key, Json value) { doc_[key] = std::move(value); }
  void fail() { ok_ = false; }
  bool ok() const noexcept { return ok_; }

  int finish(std::ostream& out) {
    if (json_) {
      if (!reports_.empty()) doc_["reports"] = reports_;
      doc_["status"] = ok_ ? "pass" : "fail";
      out << doc_.dump(2) << "\n";
    } else {
      out << text_.str() << (ok_ ? "status: pass\n" : "status: fail\n");
    }
    return ok_ ? kExitPass : kExitFail;
  }

 private:
  bool json_;
  bool ok_ = true;
  Json doc_ = Json::object();
  Json reports_ = Json::array();
  std::ostringstream text_;
};

/// Runs the axiom checks and reports them; returns whether H is TRUSTED.
inline bool ensure_trusted(Target& t, Output& out, bool always_report) {
  if (t.H.trusted() && !always_report) return true;
  for (const auto& r : t.H.verify())
    if (always_report || !r.passed) out.report(r);
  return t.H.trusted();
}

inline std::string mh_text(const MhResult& m) {
  switch (m.value.kind) {
    case OrderValue::Kind::Finite:
      return (m.lower_bound ? "m_H >= " : "m_H = ") + std::to_string(m.value.value) + (m.lower_bound ? " (LOWER-BOUND)" : "");
    case OrderValue::Kind::InfiniteCertified: return "m_H = infinity (InfiniteCertified)";
    case OrderValue::Kind::UnknownBeyond: return "m_H unknown beyond cutoff " + std::to_string(m.value.value);
  }
  return {};
}

inline Json mh_json(const HopfPresentation& H, const MhResult& m) {
  Json j;
  j["m_H"] = m.value.str();
  if (m.value.is_finite()) j["value"] = m.value.value;
  j["lower_bound"] = m.lower_bound;
  Json per = Json::array();
  for (const auto& [x, a] : m.per_representative) {
    Json e;
    e["x"] = H.alphabet().format(x);
    e["a_x"] = a.str();
    per.push_back(e);
  }
  j["representatives"] = per;
  return j;
}

/// Compares a computed OrderValue with an expected value (nullopt = infinite).
inline bool matches(const OrderValue& v, const std::optional<std::uint64_t>& expected) {
  if (!expected) return v.is_infinite();
  return v.is_finite() && v.value == *expected;
}

inline int cmd_verify(const Options& o, std::ostream& os) {
  Output out("verify", o);
  Target t = load_target(o);
  out.presentation(t);
  ensure_trusted(t, out, true);
  const auto pairs = t.H.rules().confluence_report(t.H.confluence_depth());
  out.set("confluent", pairs.empty());
  out.line(std::string("confluence: ") + (pairs.empty() ? "no unresolved overlaps" : std::to_string(pairs.size()) + " unresolved overlaps") +
           " up to length " + std::to_string(t.H.confluence_depth()));
  out.set("trusted", t.H.trusted());
  out.line(std::string("trusted: ") + (t.H.trusted() ? "yes" : "no"));
  return out.finish(os);
}

inline int cmd_mh(const Options& o, std::ostream& os) {
  Output out("mh", o);
  Target t = load_target(o);
  out.presentation(t);
  if (!ensure_trusted(t, out, false)) return out.finish(os);
  WindowSpec ws = t.H.info().window;
  if (o.bound) ws.bound = *o.bound;
  const MhResult m = m_H(t.H, t.H.info().representatives, BasisWindow(t.H, ws), o.cutoff,
                         t.H.info().exhaustive_representatives);
  for (const auto& [x, a] : m.per_representative) out.line("  a_" + t.H.alphabet().format(x) + " = " + a.str());
  out.line(mh_text(m));
  out.set("result", mh_json(t.H, m));
  if (t.spec) {
    const auto e = examples::expected_results(*t.spec);
    const bool ok = matches(m.value, e.m_h);
    out.set("expected", e.m_h ? Json(*e.m_h) : Json("infinity"));
    out.line(std::string(ok ? "matches" : "DIFFERS FROM") + " expected m_H = " + (e.m_h ? std::to_string(*e.m_h) : "infinity"));
    if (!ok) out.fail();
  }
  return out.finish(os);
}

inline std::string expected_name(const Target& t, std::optional<std::uint64_t> m) {
  const auto& spec = t.spec;
  if (!spec) {
    const FieldDescriptor& f = *t.H.field();
    return f.kind() == FieldKind::Cyclotomic && m && *m == f.cyclotomic_index() ? "2n" : "2*m_H";
  }
  switch (spec->family) {
    case examples::Family::UqBorel: return spec->field->kind() == FieldKind::Cyclotomic && !spec->q ? "2n" : "2*m_H";
    case examples::Family::TaftWilsonR: return "2p";
    default: return "|S|";
  }
}

inline int cmd_order(const Options& o, std::ostream& os) {
  Output out("order", o);
  Target t = load_target(o);
  out.presentation(t);
  if (!ensure_trusted(t, out, false)) return out.finish(os);
  const OrderResult r = antipode_order(t.H, o.cutoff);
  out.set("result", r.to_json());
  for (const auto& w : r.warnings) out.line("warning: " + w);

  std::optional<std::uint64_t> expected;
  bool have_expectation = true;
  std::optional<std::uint64_t> m_value;
  std::string pending;
  if (t.spec) {
    expected = examples::expected_results(*t.spec).order;
  } else if (characteristic(*t.H.field()) != 0) {
    // In characteristic p only the bound 2 m_H p^l is predicted.
    have_expectation = false;
    const MhResult m = m_H(t.H, o.cutoff);
    if (m.value.is_finite() && !m.lower_bound && t.H.info().generation_degree && r.is_finite()) {
      const CheckReport b = check_char_p_bound(t.H, m.value.value, *t.H.info().generation_degree, r);
      out.report(b);
      pending = std::string(b.passed ? ", divides" : ", DOES NOT divide") + " the bound 2*m_H*p^l = " +
                std::to_string(b.details.value("bound", std::uint64_t{0}));
    }
  } else {
    const MhResult m = m_H(t.H, o.cutoff);
    if (m.value.is_finite() && !m.lower_bound) {
      m_value = m.value.value;
      expected = 2 * m.value.value;
    } else if (!m.value.is_infinite()) {
      have_expectation = false;
    }
  }
  std::string line = r.str();
  if (r.certificate) {
    const CheckReport c = verify_certificate(t.H, *r.certificate);
    out.report(c);
  }
  if (have_expectation) {
    bool ok = matches(r.value, expected);
    // S = id is the other branch of the dichotomy.
    if (!ok && !t.spec && r.is_finite() && r.value.value == 1) ok = true;
    const std::string name = expected_name(t, m_value);
    line += std::string(ok ? ", matches expected " : ", DIFFERS FROM expected ") +
            (expected ? name + " = " + std::to_string(*expected) : "infinite order");
    out.set("expected", expected ? Json(*expected) : Json("infinity"));
    if (!ok) out.fail();
  }
  if (r.is_finite()) out.report(check_order_parity(t.H, r));
  out.line(line + pending);
  return out.finish(os);
}

inline Word parse_word(const HopfPresentation& H, const std::string& text, const char* flag) {
  const NcPoly p = H.rules().normalize(parse_poly(text, H.field(), H.alphabet_ptr()));
  if (p.size() != 1 || !p.terms().begin()->second.is_one())
    throw Error(std::string("--") + flag + " must be a single word, got '" + text + "'");
  return p.leading_word();
}

inline int cmd_skewprim(const Options& o, std::ostream& os) {
  Output out("skewprim", o);
  Target t = load_target(o);
  out.presentation(t);
  if (!ensure_trusted(t, out, false)) return out.finish(os);
  const Word x = parse_word(t.H, o.x, "x"), y = parse_word(t.H, o.y, "y");
  WindowSpec ws = t.H.info().window;
  if (o.bound) ws.bound = *o.bound;
  const BasisWindow window(t.H, ws);
  const SkewPrimitiveSpace s = skew_primitives(t.H, x, y, window);
  const Alphabet& a = t.H.alphabet();
  out.line("P_{" + a.format(x) + "," + a.format(y) + "} within " + std::to_string(window.size()) + " words of " +
           weight_name(ws.weight) + " <= " + std::to_string(ws.bound) + ": dimension " + std::to_string(s.basis.size()));
  Json basis = Json::array(), prime = Json::array();
  for (const auto& b : s.basis) {
    basis.push_back(b.str());
    out.line("  " + b.str());
  }
  for (const auto& b : s.prime_basis) prime.push_back(b.str());
  out.line(std::string("contains x - y: ") + (s.contains_x_minus_y ? "yes" : "no"));
  out.line("complement of k(x - y): dimension " + std::to_string(s.prime_basis.size()));
  Json r;
  r["x"] = a.format(x);
  r["y"] = a.format(y);
  r["window_size"] = window.size();
  r["basis"] = basis;
  r["contains_x_minus_y"] = s.contains_x_minus_y;
  r["prime_basis"] = prime;
  out.set("result", r);
  return out.finish(os);
}

inline int cmd_tw_check(const Options& o, std::ostream& os) {
  Output out("tw-check", o);
  Options po = o;
  const auto n = single(o.n, "n").value_or(2);
  po.n.clear();
  Target t = load_target(po, std::nullopt, single(o.p, "p"));
  out.presentation(t);
  if (!ensure_trusted(t, out, false)) return out.finish(os);
  WindowSpec ws = t.H.info().window;
  ws.weight = Weight::Filtration;
  ws.bound = o.bound.value_or(static_cast<unsigned>(n));
  const BasisWindow window(t.H, ws);
  const MhResult m = m_H(t.H, t.H.info().representatives, window, o.cutoff, t.H.info().exhaustive_representatives);
  out.line(mh_text(m));
  out.set("m_H", mh_json(t.H, m));
  if (!m.value.is_finite()) {
    out.line("m_H is not finite; the filtration statements do not apply");
    out.fail();
    return out.finish(os);
  }
  const auto deg = static_cast<unsigned>(n);
  out.report(filtration_step_check(t.H, deg, window));
  for (unsigned d = 1; d <= deg; ++d) out.report(check_taft_wilson_step(t.H, m.value.value, d, window));
  out.report(check_nilpotence(t.H, m.value.value, deg, window));
  return out.finish(os);
}

inline int cmd_charp_check(const Options& o, std::ostream& os) {
  Output out("charp-check", o);
  Options po = o;
  po.n.clear();
  const bool group_cyclic = o.family == "group-cyclic";
  Target t = group_cyclic ? load_target(o) : load_target(po, std::nullopt, single(o.p, "p"));
  out.presentation(t);
  if (!ensure_trusted(t, out, false)) return out.finish(os);
  const std::uint64_t p = characteristic(*t.H.field());
  if (p == 0) throw Error("charp-check needs a field of positive characteristic");
  std::optional<unsigned> n = t.H.info().generation_degree;
  if (!group_cyclic && !o.n.empty()) n = static_cast<unsigned>(*single(o.n, "n"));
  if (!n) throw Error("generation degree unknown; pass --n");
  const MhResult m = m_H(t.H, o.cutoff);
  out.line(mh_text(m));
  out.set("m_H", mh_json(t.H, m));
  if (!m.value.is_finite()) {
    out.fail();
    return out.finish(os);
  }
  const OrderResult r = antipode_order(t.H, o.cutoff);
  out.report(check_char_p_bound(t.H, m.value.value, *n, r));
  const unsigned l = char_p_exponent(p, *n);
  std::uint64_t pl = 1;
  for (unsigned i = 0; i < l; ++i) pl *= p;
  WindowSpec ws = t.H.info().window;
  if (o.bound) ws.bound = *o.bound;
  const BasisWindow window(t.H, ws);
  CheckReport binom("(S^{2m_H} - id)^{p^l} = S^{2m_H p^l} - id on window words");
  for (const Word& w : window.words()) {
    const CheckReport r1 = check_binomial_identity(t.H, t.H.word(w), m.value.value, pl);
    if (!r1.passed) binom.fail(t.H.alphabet().format(w));
  }
  binom.details["words_checked"] = window.size();
  out.report(binom);
  return out.finish(os);
}

inline std::string sweep_param_name(const std::string& family) {
  return family == "taft-wilson" ? "p" : "n";
}

inline int cmd_sweep(const Options& o, std::ostream& os) {
  Output out("sweep", o);
  if (o.family.empty()) throw Error("sweep needs --family");
  const bool by_p = o.family == "taft-wilson";
  std::vector<std::optional<std::uint64_t>> params;
  if (by_p) {
    for (auto v : parse_int_list(o.p.empty() ? "3,5,7" : o.p)) params.emplace_back(v);
  } else if (o.family == "group-laurent") {
    params.emplace_back(std::nullopt);
  } else {
    for (auto v : parse_int_list(o.n.empty() ? "2..12" : o.n)) params.emplace_back(v);
  }
  out.set("family", o.family);
  std::ostringstream table;
  table << std::left << std::setw(8) << "param" << std::setw(10) << "m_H" << std::setw(10) << "|S|" << std::setw(8)
        << "bound" << "ok\n";
  Json rows = Json::array();
  for (const auto& param : params) {
    std::optional<std::uint64_t> n, p;
    if (by_p) {
      p = param;
    } else {
      n = param;
      p = single(o.p, "p");
    }
    const examples::ExampleSpec spec = family_spec(o, n, p);
    const HopfPresentation H = examples::build(spec);
    const auto e = examples::expected_results(spec);
    std::uint64_t cutoff = o.cutoff;
    const std::uint64_t ch = characteristic(*spec.field);
    if (e.m_h && ch) cutoff = std::min(cutoff, std::max<std::uint64_t>(4 * *e.m_h * ch * ch, 2));
    const MhResult m = m_H(H, cutoff);
    const OrderResult r = antipode_order(H, cutoff);
    bool ok = matches(m.value, e.m_h) && matches(r.value, e.order);
    std::string bound = "-";
    if (ch) {
      const CheckReport b = check_char_p_bound(H, m.value.is_finite() ? m.value.value : 1, *H.info().generation_degree, r);
      ok = ok && b.passed;
      bound = std::to_string(b.details.value("bound", std::uint64_t{0}));
    }
    const std::string label = param ? sweep_param_name(o.family) + "=" + std::to_string(*param) : "-";
    auto show = [](const OrderValue& v) { return v.is_finite() ? std::to_string(v.value) : v.is_infinite() ? "inf" : "?"; };
    table << std::setw(8) << label << std::setw(10) << show(m.value) << std::setw(10) << show(r.value) << std::setw(8)
          << bound << (ok ? "✓" : "✗") << "\n";
    Json row;
    row["param"] = label;
    row["field"] = spec.field->name();
    row["m_H"] = m.value.str();
    row["order"] = r.str();
    row["bound"] = bound;
    row["ok"] = ok;
    rows.push_back(row);
    if (!ok) out.fail();
  }
  out.set("rows", rows);
  std::string text = table.str();
  text.pop_back();
  out.line(text);
  return out.finish(os);
}

inline int cmd_export(const Options& o, std::ostream& os) {
  Target t = load_target(o);
  os << io::write_presentation(t.H).dump(2) << "\n";
  return kExitPass;
}

/// Entry point shared by the binary and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic checks for finitely presented pointed Hopf algebras", "hopfkit"};
  app.require_subcommand(1);
  Options o;
  std::string chosen;
  auto common = [&](CLI::App* sub, bool with_xy = false) {
    sub->add_option("--file", o.file, "presentation document (JSON)");
    sub->add_option("--family", o.family, "uq-borel, taft-wilson, group-cyclic or group-laurent");
    sub->add_option("--n", o.n, "cyclotomic index, group order or degree; ranges like 2..12 or lists 2,3,5");
    sub->add_option("--p", o.p, "prime characteristic; lists allowed for sweep");
    sub->add_option("--q", o.q, "value of q as an expression in the field");
    sub->add_option("--bound", o.bound, "window bound");
    sub->add_option("--cutoff", o.cutoff, "iteration cutoff for order searches");
    sub->add_flag("--json", o.json, "deterministic JSON output");
    if (with_xy) {
      sub->add_option("--x", o.x, "group-like x");
      sub->add_option("--y", o.y, "group-like y");
    }
    sub->callback([&chosen, sub] { chosen = sub->get_name(); });
  };
  common(app.add_subcommand("verify", "check the Hopf algebra axioms"));
  common(app.add_subcommand("mh", "compute m_H"));
  common(app.add_subcommand("order", "determine the order of the antipode"));
  common(app.add_subcommand("skewprim", "solve for (x,y)-skew-primitive elements"), true);
  common(app.add_subcommand("tw-check", "filtration statements for (S^{2m_H} - id)"));
  common(app.add_subcommand("charp-check", "characteristic-p bound on the antipode order"));
  common(app.add_subcommand("sweep", "tabulate m_H and |S| over a family"));
  common(app.add_subcommand("export", "print a presentation document"));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }
  try {
    if (chosen == "verify") return cmd_verify(o, out);
    if (chosen == "mh") return cmd_mh(o, out);
    if (chosen == "order") return cmd_order(o, out);
    if (chosen == "skewprim") return cmd_skewprim(o, out);
    if (chosen == "tw-check") return cmd_tw_check(o, out);
    if (chosen == "charp-check") return cmd_charp_check(o, out);
    if (chosen == "sweep") return cmd_sweep(o, out);
    if (chosen == "export") return cmd_export(o, out);
  } catch (const ParityViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hopfkit::cli
