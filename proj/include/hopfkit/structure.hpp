#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/error.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/linalg.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

inline constexpr std::uint64_t kDefaultCutoff = 10000;

/// Finite set of normal words standing in for a truncation of H, with a
/// coordinate map. Kernels computed over a window are exact for span(window).
class BasisWindow {
 public:
  BasisWindow(const RuleSet& rules, WindowSpec spec) : spec_(spec) {
    words_ = rules.word_basis(spec.bound, spec.weight, spec.length_cap);
    for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
  }
  BasisWindow(const HopfPresentation& H, WindowSpec spec) : BasisWindow(H.rules(), spec) {}
  explicit BasisWindow(const HopfPresentation& H) : BasisWindow(H.rules(), H.info().window) {}

  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  const WindowSpec& spec() const noexcept { return spec_; }
  std::optional<std::size_t> index(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Word& w) const { return index_.count(w) != 0; }

 private:
  WindowSpec spec_;
  std::vector<Word> words_;
  std::map<Word, std::size_t> index_;
};

/// Solved basis of P_{x,y}(H) within a window.
struct SkewPrimitiveSpace {
  Word x;
  Word y;
  std::vector<NcPoly> basis;
  bool contains_x_minus_y = false;
  /// Complement of k(x - y) inside span(basis).
  std::vector<NcPoly> prime_basis;
};

/// Order-type verdict shared by a_x, m_H and the antipode order.
struct OrderValue {
  enum class Kind { Finite, InfiniteCertified, UnknownBeyond };
  Kind kind = Kind::Finite;
  /// The order for Finite, the cutoff for UnknownBeyond.
  std::uint64_t value = 1;

  static OrderValue finite(std::uint64_t m) { return {Kind::Finite, m}; }
  static OrderValue infinite() { return {Kind::InfiniteCertified, 0}; }
  static OrderValue unknown(std::uint64_t cutoff) { return {Kind::UnknownBeyond, cutoff}; }
  bool is_finite() const noexcept { return kind == Kind::Finite; }
  bool is_infinite() const noexcept { return kind == Kind::InfiniteCertified; }
  friend bool operator==(const OrderValue&, const OrderValue&) = default;

  std::string str() const {
    switch (kind) {
      case Kind::Finite: return "Finite(" + std::to_string(value) + ")";
      case Kind::InfiniteCertified: return "InfiniteCertified";
      case Kind::UnknownBeyond: return "UnknownBeyond(" + std::to_string(value) + ")";
    }
    return {};
  }
};

struct MhResult {
  OrderValue value;
  /// Set unless the representative list was asserted exhaustive.
  bool lower_bound = true;
  std::vector<std::pair<Word, OrderValue>> per_representative;
};

namespace detail {

inline std::vector<Scalar> coordinates(const NcPoly& p, const std::map<Word, std::size_t>& index, const Field& f) {
  std::vector<Scalar> v(index.size(), Scalar::zero(f));
  for (const auto& [w, c] : p.terms()) v.at(index.at(w)) = c;
  return v;
}

/// Index over every word occurring in the given polynomials.
inline std::map<Word, std::size_t> word_index(const std::vector<const NcPoly*>& polys) {
  std::map<Word, std::size_t> index;
  for (const NcPoly* p : polys)
    for (const auto& [w, c] : p->terms()) index.emplace(w, 0);
  std::size_t i = 0;
  for (auto& [w, k] : index) k = i++;
  return index;
}

inline std::size_t rank_of(const std::vector<NcPoly>& polys, const Field& f) {
  if (polys.empty()) return 0;
  std::vector<const NcPoly*> ptrs;
  for (const auto& p : polys) ptrs.push_back(&p);
  const auto index = word_index(ptrs);
  Matrix m(f, polys.size(), index.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto v = coordinates(polys[i], index, f);
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[j];
  }
  return m.rank();
}

/// Words built only from symbols with Delta(s) = s (x) s, plus the declared
/// group-likes, span a subspace of kG(H).
inline bool is_group_like_word(const HopfPresentation& H, const Word& w) {
  for (const Word& g : H.group_likes())
    if (g == w) return true;
  for (Symbol s : w) {
    const auto& d = H.coproduct(s);
    const NcPoly sp = H.word({s});
    if (!d || !(*d == H.tensor(sp, sp))) return false;
  }
  return true;
}

}  // namespace detail

/// P_{x,y}(H) within span(window): the exact kernel of
/// h -> Delta(h) - h (x) x - y (x) h, in reduced echelon form with leading
/// words first.
inline SkewPrimitiveSpace skew_primitives(const HopfPresentation& H, const Word& x, const Word& y,
                                          const BasisWindow& window) {
  H.require_trusted();
  const Field& f = H.field();
  const NcPoly xp = H.word(x), yp = H.word(y);
  const std::size_t n = window.size();

  // Columns run over the window in descending monomial order.
  std::vector<TensorPoly> images;
  images.reserve(n);
  std::map<TensorKey<2>, std::size_t, TensorOrder<2>> rows{TensorOrder<2>(H.alphabet_ptr())};
  for (std::size_t j = 0; j < n; ++j) {
    const Word& w = window.words()[n - 1 - j];
    const NcPoly wp = H.word(w);
    TensorPoly img = H.delta_word(w) - H.tensor(wp, xp) - H.tensor(yp, wp);
    for (const auto& [k, c] : img.terms()) rows.emplace(k, rows.size());
    images.push_back(std::move(img));
  }
  Matrix m(f, rows.size(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [k, c] : images[j].terms()) m(rows.at(k), j) = c;

  const auto kernel = m.kernel();
  Matrix echelon(f, kernel.size(), n);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) echelon(i, j) = kernel[i][j];
  const std::size_t dim = echelon.rref().size();

  SkewPrimitiveSpace space{x, y, {}, false, {}};
  for (std::size_t i = 0; i < dim; ++i) {
    NcPoly h = H.zero();
    for (std::size_t j = 0; j < n; ++j) h.add_term(window.words()[n - 1 - j], echelon(i, j));
    if (!(H.delta(h) == H.tensor(h, xp) + H.tensor(yp, h)))
      throw Error("internal: solved element " + h.str() + " is not skew-primitive");
    space.basis.push_back(std::move(h));
  }

  const NcPoly diff = xp - yp;
  std::vector<NcPoly> spanning;
  if (!diff.is_zero()) {
    spanning.push_back(diff);
    std::vector<NcPoly> with = space.basis;
    const std::size_t r0 = detail::rank_of(space.basis, f);
    with.push_back(diff);
    space.contains_x_minus_y = detail::rank_of(with, f) == r0;
  }
  for (const NcPoly& b : space.basis) {
    std::vector<NcPoly> trial = spanning;
    trial.push_back(b);
    if (detail::rank_of(trial, f) > detail::rank_of(spanning, f)) {
      spanning.push_back(b);
      space.prime_basis.push_back(b);
    }
  }
  return space;
}

/// Matrix of h -> x h x^-1 on P_{x,1} in the space's basis (column j is the
/// image of basis element j). Throws NotInvariant when the image leaves the
/// span, which means the window is too small.
inline Matrix conjugation_matrix(const HopfPresentation& H, const Word& x, const SkewPrimitiveSpace& space) {
  H.require_trusted();
  const NcPoly one = H.one();
  if (!(H.word(space.y) == one)) throw Error("conjugation matrix needs a P_{x,1} space");
  const auto xinv = H.inverse_of(x);
  if (!xinv) throw Error("group-like " + H.alphabet().format(x) + " has no inverse");
  const Field& f = H.field();
  const std::size_t d = space.basis.size();
  Matrix m(f, d, d);
  const NcPoly xp = H.word(x), xip = H.word(*xinv);
  for (std::size_t j = 0; j < d; ++j) {
    const NcPoly image = H.mul(H.mul(xp, space.basis[j]), xip);
    std::vector<const NcPoly*> ptrs{&image};
    for (const auto& b : space.basis) ptrs.push_back(&b);
    const auto index = detail::word_index(ptrs);
    std::vector<std::vector<Scalar>> vectors;
    for (const auto& b : space.basis) vectors.push_back(detail::coordinates(b, index, f));
    const auto sol = solve_in_span(f, vectors, detail::coordinates(image, index, f));
    if (!sol)
      throw NotInvariant("conjugation by " + H.alphabet().format(x) + " maps " + space.basis[j].str() + " to " +
                         image.str() + ", outside the solved space; enlarge the window");
    for (std::size_t i = 0; i < d; ++i) m(i, j) = (*sol)[i];
  }
  return m;
}

/// Minimal m >= 1 with M^m = I for the conjugation action of x on P_{x,1}.
inline OrderValue action_order(const Matrix& m, std::uint64_t cutoff = kDefaultCutoff) {
  const std::size_t d = m.rows();
  if (d == 0) return OrderValue::finite(1);
  if (m.is_diagonal()) {
    std::uint64_t l = 1;
    for (std::size_t i = 0; i < d; ++i) {
      const MultOrder o = mult_order(m(i, i));
      if (!o.is_finite()) return OrderValue::infinite();
      l = std::lcm(l, o.order);
    }
    return OrderValue::finite(l);
  }
  const Matrix id = Matrix::identity(m.field(), d);
  Matrix p = m;
  for (std::uint64_t k = 1; k <= cutoff; ++k) {
    if (p == id) return OrderValue::finite(k);
    p = p * m;
  }
  return OrderValue::unknown(cutoff);
}

/// a_x = |<x> : C_<x>(P_{x,1}(H))|, computed within the window.
inline OrderValue a_x(const HopfPresentation& H, const Word& x, const BasisWindow& window,
                      std::uint64_t cutoff = kDefaultCutoff) {
  const SkewPrimitiveSpace space = skew_primitives(H, x, Word{}, window);
  return action_order(conjugation_matrix(H, x, space), cutoff);
}

/// lcm of a_x over the representatives.
inline MhResult m_H(const HopfPresentation& H, const std::vector<Word>& representatives, const BasisWindow& window,
                    std::uint64_t cutoff = kDefaultCutoff, bool exhaustive = false) {
  H.require_trusted();
  MhResult result{OrderValue::finite(1), !exhaustive, {}};
  bool unknown = false;
  bool infinite = false;
  std::uint64_t l = 1;
  for (const Word& x : representatives) {
    const OrderValue a = a_x(H, x, window, cutoff);
    result.per_representative.emplace_back(x, a);
    if (a.is_infinite()) infinite = true;
    if (a.kind == OrderValue::Kind::UnknownBeyond) unknown = true;
    if (a.is_finite()) l = std::lcm(l, a.value);
  }
  if (infinite) {
    result.value = OrderValue::infinite();
  } else if (unknown) {
    result.value = OrderValue::unknown(cutoff);
  } else {
    result.value = OrderValue::finite(l);
  }
  return result;
}

/// m_H with the presentation's own representatives and window.
inline MhResult m_H(const HopfPresentation& H, std::uint64_t cutoff = kDefaultCutoff) {
  return m_H(H, H.info().representatives, BasisWindow(H), cutoff, H.info().exhaustive_representatives);
}

/// Checks that kG + sum of P'_{x,y} is direct within the window and reports
/// its dimension.
inline CheckReport h1_decomposition_check(const HopfPresentation& H, const BasisWindow& window,
                                          std::vector<Word> group_likes = {}) {
  H.require_trusted();
  if (group_likes.empty()) group_likes = H.group_likes();
  if (std::find(group_likes.begin(), group_likes.end(), Word{}) == group_likes.end())
    group_likes.insert(group_likes.begin(), Word{});
  CheckReport report("H_1 contains kG(H) + sum over x,y of P_{x,y}(H)' as a direct sum (within the window)");
  const Field& f = H.field();
  std::vector<NcPoly> all;
  for (const Word& g : group_likes) {
    if (!detail::is_group_like_word(H, g) && !(H.delta(H.word(g)) == H.tensor(H.word(g), H.word(g))))
      report.fail(H.alphabet().format(g) + " is not group-like");
    all.push_back(H.word(g));
  }
  const std::size_t group_dim = detail::rank_of(all, f);
  if (group_dim != group_likes.size()) report.fail("group-like list contains repeated elements");
  std::size_t prime_dim = 0;
  Json parts = Json::array();
  for (const Word& x : group_likes) {
    for (const Word& y : group_likes) {
      const SkewPrimitiveSpace s = skew_primitives(H, x, y, window);
      prime_dim += s.prime_basis.size();
      for (const auto& b : s.prime_basis) {
        all.push_back(b);
        parts.push_back("P'(" + H.alphabet().format(x) + ", " + H.alphabet().format(y) + ") ∋ " + b.str());
      }
    }
  }
  const std::size_t total = detail::rank_of(all, f);
  report.details["group_likes"] = group_likes.size();
  report.details["prime_parts"] = prime_dim;
  report.details["dimension"] = total;
  report.details["components"] = parts;
  if (total != group_dim + prime_dim)
    report.fail("sum is not direct: rank " + std::to_string(total) + " < " + std::to_string(group_dim + prime_dim));
  return report;
}

/// Checks Delta(b) in H (x) H_{d-1} + H_0 (x) H for every window word b of
/// filtration degree d <= n, where H_d is spanned by words of degree <= d and
/// H_0 by group-like words.
inline CheckReport filtration_step_check(const HopfPresentation& H, unsigned n, const BasisWindow& window) {
  H.require_trusted();
  CheckReport report("declared filtration satisfies Delta(H_d) ⊆ H ⊗ H_{d-1} + H_0 ⊗ H for d <= " +
                     std::to_string(n));
  if (!H.info().filtration_declared) report.warn("no filtration declared; all weights treated as given");
  const Alphabet& a = H.alphabet();
  std::size_t checked = 0;
  for (const Word& b : window.words()) {
    const unsigned d = a.weight(b, Weight::Filtration);
    if (d > n) continue;
    ++checked;
    const TensorPoly d_b = H.delta_word(b);
    for (const auto& [k, c] : d_b.terms()) {
      const bool right_low = d > 0 && a.weight(k[1], Weight::Filtration) + 1 <= d;
      if (right_low || detail::is_group_like_word(H, k[0])) continue;
      report.fail(a.format(b) + " (degree " + std::to_string(d) + "): term " + a.format(k[0]) + "@" + a.format(k[1]) +
                  " lies outside H ⊗ H_" + std::to_string(static_cast<int>(d) - 1) + " + H_0 ⊗ H");
    }
  }
  report.details["words_checked"] = checked;
  return report;
}

}  // namespace hopfkit
