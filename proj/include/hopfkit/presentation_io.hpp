#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/error.hpp"
#include "hopfkit/expr.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit::io {

namespace detail {

/// The raw document, used to turn offsets into line/column pairs.
class Source {
 public:
  explicit Source(std::string text) : text_(std::move(text)) {}
  const std::string& text() const noexcept { return text_; }

  std::pair<std::size_t, std::size_t> position(std::size_t offset) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return {line, column};
  }

  /// Offset of the opening quote of the first string literal equal to `s`.
  std::optional<std::size_t> find_literal(const std::string& s) const {
    const std::size_t at = text_.find(Json(s).dump());
    if (at == std::string::npos) return std::nullopt;
    return at;
  }

  /// Position of character `column` (1-based) inside the literal `s`.
  std::pair<std::size_t, std::size_t> inside(const std::string& s, std::size_t column) const {
    if (auto at = find_literal(s)) return position(*at + column);
    return {1, 1};
  }

 private:
  std::string text_;
};

[[noreturn]] inline void fail_at(const Source& src, const std::string& key, const std::string& what) {
  const auto [line, column] = src.inside(key, 0);
  throw SyntaxError(what, line, column);
}

inline void check_keys(const Source& src, const Json& obj, const std::string& where,
                       const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) fail_at(src, key, "unknown field '" + key + "' in " + where);
}

inline const Json& require(const Source& src, const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) {
    const auto [line, column] = src.position(0);
    throw SyntaxError("missing field '" + key + "' in " + where, line, column);
  }
  return obj.at(key);
}

inline unsigned as_unsigned(const Source& src, const Json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail_at(src, key, "field '" + key + "' must be a non-negative integer");
  return v.get<unsigned>();
}

inline std::string as_string(const Source& src, const Json& v, const std::string& key) {
  if (!v.is_string()) fail_at(src, key, "field '" + key + "' must be a string");
  return v.get<std::string>();
}

/// Runs `parse` on `expr` (a substring of a string literal starting at
/// `offset`) and re-throws positional errors with file coordinates.
template <class F>
auto located(const Source& src, const std::string& literal, std::size_t offset, const std::string& context, F&& parse) {
  try {
    return parse();
  } catch (const SyntaxError& e) {
    const auto [line, column] = src.inside(literal, offset + e.column());
    throw SyntaxError(context + ": " + e.message(), line, column);
  } catch (const UnknownSymbol& e) {
    const auto [line, column] = src.inside(literal, offset + e.column());
    throw UnknownSymbol(e.name(), column, line, context);
  }
}

inline Field read_field(const Source& src, const Json& j) {
  if (!j.is_object()) fail_at(src, "field", "field 'field' must be an object");
  check_keys(src, j, "field", {"kind", "p", "n", "variable"});
  const std::string kind = as_string(src, require(src, j, "kind", "field"), "kind");
  const std::string var = j.contains("variable") ? as_string(src, j.at("variable"), "variable") : "q";
  if (kind == "rationals") return FieldDescriptor::rationals();
  if (kind == "prime") return FieldDescriptor::prime_field(as_unsigned(src, require(src, j, "p", "field"), "p"));
  if (kind == "rational_functions") return FieldDescriptor::rational_functions(var);
  if (kind == "cyclotomic") return FieldDescriptor::cyclotomic(as_unsigned(src, require(src, j, "n", "field"), "n"), var);
  fail_at(src, kind, "unknown field kind '" + kind + "'; expected rationals, prime, rational_functions or cyclotomic");
}

inline Json write_field(const FieldDescriptor& f) {
  Json j;
  switch (f.kind()) {
    case FieldKind::Rationals: j["kind"] = "rationals"; break;
    case FieldKind::PrimeField:
      j["kind"] = "prime";
      j["p"] = f.prime();
      break;
    case FieldKind::RationalFunctions:
      j["kind"] = "rational_functions";
      j["variable"] = f.variable();
      break;
    case FieldKind::Cyclotomic:
      j["kind"] = "cyclotomic";
      j["n"] = f.cyclotomic_index();
      j["variable"] = f.variable();
      break;
  }
  return j;
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

inline Weight read_weight(const Source& src, const std::string& name) {
  if (name == "grade") return Weight::Grade;
  if (name == "filtration") return Weight::Filtration;
  if (name == "length") return Weight::Length;
  fail_at(src, name, "unknown window weight '" + name + "'; expected grade, filtration or length");
}

}  // namespace detail

/// Reads a presentation document. The result is not yet verified.
inline HopfPresentation read_presentation(const std::string& text) {
  using namespace detail;
  const Source src(text);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, column] = src.position(e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto colon = what.rfind(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw SyntaxError("malformed document: " + what, line, column);
  }
  if (!doc.is_object()) throw SyntaxError("document must be an object", 1, 1);
  check_keys(src, doc, "document",
             {"name", "description", "field", "generators", "relations", "coproduct", "counit", "antipode",
              "group_likes", "generation_degree", "representatives", "exhaustive_representatives", "window"});

  const Field field = read_field(src, require(src, doc, "field", "document"));

  auto alphabet = std::make_shared<Alphabet>();
  bool grading = false, filtration = false;
  const Json& gens = require(src, doc, "generators", "document");
  if (!gens.is_array() || gens.empty()) fail_at(src, "generators", "field 'generators' must be a non-empty array");
  for (const Json& g : gens) {
    if (!g.is_object()) fail_at(src, "generators", "each generator must be an object");
    check_keys(src, g, "generator", {"name", "inverse", "grade", "filtration"});
    const std::string name = as_string(src, require(src, g, "name", "generator"), "name");
    if (!is_identifier(name) || name == field->variable()) fail_at(src, name, "invalid generator name '" + name + "'");
    const unsigned grade = g.contains("grade") ? as_unsigned(src, g.at("grade"), "grade") : 0;
    const unsigned filt = g.contains("filtration") ? as_unsigned(src, g.at("filtration"), "filtration") : 0;
    grading = grading || g.contains("grade");
    filtration = filtration || g.contains("filtration");
    try {
      if (g.contains("inverse")) {
        const std::string inv = as_string(src, g.at("inverse"), "inverse");
        if (!is_identifier(inv) || inv == field->variable()) fail_at(src, inv, "invalid generator name '" + inv + "'");
        const auto [s, si] = alphabet->add_invertible(name, inv);
        (void)si;
        alphabet->set_weights(s, grade, filt);
      } else {
        alphabet->add(name, grade, filt);
      }
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      fail_at(src, name, e.what());
    }
  }
  const AlphabetPtr a = alphabet;

  auto poly = [&](const std::string& literal, std::size_t offset, const std::string& expr, const std::string& ctx) {
    return located(src, literal, offset, ctx, [&] { return parse_poly(expr, field, a); });
  };

  RuleSet rules(field, a);
  const Json& rels = require(src, doc, "relations", "document");
  if (!rels.is_array()) fail_at(src, "relations", "field 'relations' must be an array");
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const std::string ctx = "relations[" + std::to_string(i) + "]";
    if (!rels[i].is_string()) fail_at(src, "relations", ctx + " must be a string");
    const std::string rel = rels[i].get<std::string>();
    const std::size_t eq = rel.find('=');
    if (eq == std::string::npos || rel.find('=', eq + 1) != std::string::npos) {
      const auto [line, column] = src.inside(rel, 1);
      throw SyntaxError(ctx + ": a relation has the form 'lhs = rhs'", line, column);
    }
    const NcPoly lhs = poly(rel, 0, rel.substr(0, eq), ctx);
    const NcPoly rhs = poly(rel, eq + 1, rel.substr(eq + 1), ctx);
    if (lhs.size() != 1 || lhs.leading_word().empty()) {
      const auto [line, column] = src.inside(rel, 1);
      throw SyntaxError(ctx + ": the left side must be a single word", line, column);
    }
    const Word lw = lhs.leading_word();
    try {
      rules.add(lw, rhs.scaled(lhs.coeff(lw).inverse()));
    } catch (const TerminationOrderViolation& e) {
      const auto [line, column] = src.inside(rel, 1);
      throw TerminationOrderViolation(ctx + " (line " + std::to_string(line) + ", column " + std::to_string(column) +
                                      "): " + e.what());
    }
  }

  HopfPresentation H(std::move(rules));

  auto per_generator = [&](const char* key, auto&& set) {
    const Json& m = require(src, doc, key, "document");
    if (!m.is_object()) fail_at(src, key, std::string("field '") + key + "' must be an object");
    for (const auto& [name, value] : m.items()) {
      const auto s = a->find(name);
      if (!s) {
        const auto [line, column] = src.inside(name, 1);
        throw UnknownSymbol(name, column, line, key);
      }
      if (!value.is_string()) fail_at(src, name, std::string(key) + " of '" + name + "' must be a string");
      set(*s, value.template get<std::string>(), std::string(key) + "[" + name + "]");
    }
    for (Symbol s = 0; s < a->size(); ++s)
      if (!m.contains(a->name(s))) fail_at(src, key, std::string(key) + " missing for generator '" + a->name(s) + "'");
  };
  per_generator("coproduct", [&](Symbol s, const std::string& e, const std::string& ctx) {
    H.set_coproduct(s, located(src, e, 0, ctx, [&] { return parse_tensor(e, field, a); }));
  });
  per_generator("counit", [&](Symbol s, const std::string& e, const std::string& ctx) {
    const NcPoly c = poly(e, 0, e, ctx);
    if (!(c.is_zero() || (c.size() == 1 && c.leading_word().empty()))) fail_at(src, e, ctx + ": counit must be a scalar");
    H.set_counit(s, c.coeff(Word{}));
  });
  per_generator("antipode", [&](Symbol s, const std::string& e, const std::string& ctx) { H.set_antipode(s, poly(e, 0, e, ctx)); });

  auto word_list = [&](const char* key) {
    std::vector<Word> out;
    if (!doc.contains(key)) return out;
    const Json& l = doc.at(key);
    if (!l.is_array()) fail_at(src, key, std::string("field '") + key + "' must be an array");
    for (std::size_t i = 0; i < l.size(); ++i) {
      const std::string ctx = std::string(key) + "[" + std::to_string(i) + "]";
      if (!l[i].is_string()) fail_at(src, key, ctx + " must be a string");
      const std::string e = l[i].get<std::string>();
      const NcPoly p = H.rules().normalize(poly(e, 0, e, ctx));
      if (p.size() != 1 || !p.terms().begin()->second.is_one()) fail_at(src, e, ctx + ": expected a single word");
      out.push_back(p.leading_word());
    }
    return out;
  };
  for (Word& g : word_list("group_likes")) H.add_group_like(std::move(g));

  auto& info = H.info();
  if (doc.contains("name")) info.name = as_string(src, doc.at("name"), "name");
  if (doc.contains("description")) info.description = as_string(src, doc.at("description"), "description");
  if (doc.contains("generation_degree"))
    info.generation_degree = as_unsigned(src, doc.at("generation_degree"), "generation_degree");
  info.representatives = word_list("representatives");
  if (doc.contains("exhaustive_representatives")) {
    const Json& e = doc.at("exhaustive_representatives");
    if (!e.is_boolean()) fail_at(src, "exhaustive_representatives", "field 'exhaustive_representatives' must be a boolean");
    info.exhaustive_representatives = e.get<bool>();
  }
  info.grading_declared = grading;
  info.filtration_declared = filtration;
  if (doc.contains("window")) {
    const Json& w = doc.at("window");
    if (!w.is_object()) fail_at(src, "window", "field 'window' must be an object");
    check_keys(src, w, "window", {"weight", "bound", "length_cap"});
    info.window.weight = read_weight(src, as_string(src, require(src, w, "weight", "window"), "weight"));
    info.window.bound = as_unsigned(src, require(src, w, "bound", "window"), "bound");
    if (w.contains("length_cap")) info.window.length_cap = as_unsigned(src, w.at("length_cap"), "length_cap");
  }
  return H;
}

inline HopfPresentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_presentation(buf.str());
}

/// The document `read_presentation` accepts, with keys in a fixed order.
inline Json write_presentation(const HopfPresentation& H) {
  const Alphabet& a = H.alphabet();
  const auto& info = H.info();
  Json doc;
  doc["name"] = info.name;
  doc["description"] = info.description;
  doc["field"] = detail::write_field(*H.field());
  Json gens = Json::array();
  for (Symbol s = 0; s < a.size(); ++s) {
    const SymbolInfo& si = a.info(s);
    if (si.formal_inverse) continue;
    Json g;
    g["name"] = si.name;
    if (si.inverse) g["inverse"] = a.name(*si.inverse);
    g["grade"] = si.grade;
    g["filtration"] = si.filtration;
    gens.push_back(g);
  }
  doc["generators"] = gens;
  Json rels = Json::array();
  for (const auto& r : H.rules().rules()) rels.push_back(a.format(r.lhs) + " = " + r.rhs.str());
  doc["relations"] = rels;
  Json cop = Json::object(), cou = Json::object(), ant = Json::object();
  for (Symbol s = 0; s < a.size(); ++s) {
    if (const auto& d = H.coproduct(s)) cop[a.name(s)] = d->str();
    if (const auto& c = H.counit_of(s)) cou[a.name(s)] = c->str();
    if (const auto& p = H.antipode_of(s)) ant[a.name(s)] = p->str();
  }
  doc["coproduct"] = cop;
  doc["counit"] = cou;
  doc["antipode"] = ant;
  Json gl = Json::array();
  for (const Word& w : H.group_likes()) gl.push_back(a.format(w));
  doc["group_likes"] = gl;
  if (info.generation_degree) doc["generation_degree"] = *info.generation_degree;
  Json reps = Json::array();
  for (const Word& w : info.representatives) reps.push_back(a.format(w));
  doc["representatives"] = reps;
  doc["exhaustive_representatives"] = info.exhaustive_representatives;
  Json win;
  win["weight"] = weight_name(info.window.weight);
  win["bound"] = info.window.bound;
  if (info.window.length_cap) win["length_cap"] = *info.window.length_cap;
  doc["window"] = win;
  return doc;
}

}  // namespace hopfkit::io
