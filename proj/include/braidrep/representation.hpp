#pragma once

// The representation a_{ijk} -> rho_{ijk} on the free module with basis
// x_{pq} (p != q), its composite with the braid homomorphism on pure braids,
// rational specialization, symbolic relation checks, and the Burau baseline.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/error.hpp"
#include "braidrep/gn3.hpp"
#include "braidrep/laurent.hpp"
#include "braidrep/matrix.hpp"

namespace braidrep {

using RepMatrix = SparseMatrix<LaurentPoly>;
using NumericMatrix = SparseMatrix<Rational>;

// Basis vector x_{pq}. Enumerated lexicographically: (1,2),(1,3),..,(1,n),(2,1),..
struct BasisIndex {
  std::size_t p = 1, q = 2;

  auto operator<=>(const BasisIndex&) const = default;

  std::string label() const { return "x_" + std::to_string(p) + "_" + std::to_string(q); }

  std::size_t position(std::size_t n) const {
    if (p < 1 || p > n || q < 1 || q > n || p == q) throw DomainError("invalid basis pair " + label());
    return (p - 1) * (n - 1) + (q < p ? q - 1 : q - 2);
  }

  static BasisIndex at(std::size_t n, std::size_t position) {
    if (position >= n * (n - 1)) throw DomainError("basis position out of range");
    const std::size_t p = position / (n - 1) + 1;
    std::size_t q = position % (n - 1) + 1;
    if (q >= p) ++q;
    return {p, q};
  }

  // "x_1_2", "x12" (single-digit indices only) or "1,2".
  static BasisIndex parse(std::string_view text, std::size_t n) {
    std::string s(text);
    std::vector<std::size_t> parts;
    std::string digits;
    auto flush = [&] {
      if (!digits.empty()) {
        parts.push_back(std::stoul(digits));
        digits.clear();
      }
    };
    std::size_t start = (s.size() >= 1 && s[0] == 'x') ? 1 : 0;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        if (digits.size() > 6) throw ParseError("basis index too large in '" + s + "'");
        digits += s[i];
      } else if (s[i] == '_' || s[i] == ',') {
        flush();
      } else {
        throw ParseError("invalid basis label '" + s + "'", i);
      }
    }
    flush();
    if (parts.size() == 1 && start == 1 && s.find('_') == std::string::npos && s.size() == 3) {
      parts = {static_cast<std::size_t>(s[1] - '0'), static_cast<std::size_t>(s[2] - '0')};
    }
    if (parts.size() != 2) throw ParseError("invalid basis label '" + s + "'");
    BasisIndex b{parts[0], parts[1]};
    b.position(n);
    return b;
  }
};

inline std::size_t module_rank(std::size_t n) { return n * (n - 1); }

inline std::vector<BasisIndex> basis(std::size_t n) {
  std::vector<BasisIndex> out;
  out.reserve(module_rank(n));
  for (std::size_t pos = 0; pos < module_rank(n); ++pos) out.push_back(BasisIndex::at(n, pos));
  return out;
}

// Whether rep_of_word multiplies generator matrices in word order
// (a homomorphism) or in reverse word order.
enum class ProductOrder { homomorphism, anti_homomorphism };

inline std::string to_string(ProductOrder o) { return o == ProductOrder::homomorphism ? "hom" : "anti"; }

inline ProductOrder parse_product_order(std::string_view s) {
  if (s == "hom") return ProductOrder::homomorphism;
  if (s == "anti") return ProductOrder::anti_homomorphism;
  throw ParseError("unknown product order '" + std::string(s) + "'");
}

// Scalars of the symbolic ring A.
class SymbolicScalars {
 public:
  using value_type = LaurentPoly;

  explicit SymbolicScalars(std::size_t n) : n_(n) {}

  std::size_t strands() const noexcept { return n_; }
  LaurentPoly zero() const { return LaurentPoly::zero(n_); }
  LaurentPoly one() const { return LaurentPoly::one(n_); }
  LaurentPoly t(std::size_t i, int power) const { return LaurentPoly::variable(n_, {VariableKind::t, i}, power); }
  LaurentPoly s(std::size_t i, int power) const { return LaurentPoly::variable(n_, {VariableKind::s, i}, power); }

 private:
  std::size_t n_;
};

// Scalars after specializing every variable to a nonzero rational.
class NumericScalars {
 public:
  using value_type = Rational;

  explicit NumericScalars(const Assignment& a) : n_(a.strands()), values_(a.resolve()) {}

  std::size_t strands() const noexcept { return n_; }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational t(std::size_t i, int power) const { return rational_pow(values_.at(i - 1), power); }
  Rational s(std::size_t i, int power) const { return rational_pow(values_.at(n_ + i - 1), power); }

 private:
  std::size_t n_;
  std::vector<Rational> values_;
};

// rho_{ijk}: columns hold images of basis vectors.
//   x_ij -> t_i x_ij + (1 - t_i) x_ik
//   x_kj -> t_k^-1 x_kj + (1 - t_k^-1) x_ki
//   x_jk -> s_j x_jk
//   x_ji -> s_j^-1 x_ji
// and every other basis vector is fixed. The inverse letter uses rho_{kji}.
template <class Scalars>
SparseMatrix<typename Scalars::value_type> rho_generator(const Scalars& ring, GnGenerator g, int exponent = 1) {
  using V = typename Scalars::value_type;
  const std::size_t n = ring.strands();
  GnWord(n).push_back({g, 1});  // validates the indices
  if (exponent < 0) g = g.reversed();
  const auto [i, j, k] = g;
  auto pos = [n](std::size_t p, std::size_t q) { return BasisIndex{p, q}.position(n); };

  auto m = SparseMatrix<V>::identity(module_rank(n), ring.one(), ring.zero());
  const V ti = ring.t(i, 1);
  const V tk_inv = ring.t(k, -1);
  m.set_column(pos(i, j), {{pos(i, j), ti}, {pos(i, k), ring.one() - ti}});
  m.set_column(pos(k, j), {{pos(k, j), tk_inv}, {pos(k, i), ring.one() - tk_inv}});
  m.set_column(pos(j, k), {{pos(j, k), ring.s(j, 1)}});
  m.set_column(pos(j, i), {{pos(j, i), ring.s(j, -1)}});
  return m;
}

inline RepMatrix rho_generator(std::size_t n, std::size_t i, std::size_t j, std::size_t k, int exponent = 1) {
  return rho_generator(SymbolicScalars(n), GnGenerator{i, j, k}, exponent);
}

template <class Scalars>
SparseMatrix<typename Scalars::value_type> rep_of_word(const Scalars& ring, const GnWord& w,
                                                       ProductOrder order = ProductOrder::homomorphism) {
  using V = typename Scalars::value_type;
  if (w.strands() != ring.strands()) throw DomainError("word and ring have different n");
  std::map<std::pair<GnGenerator, int>, SparseMatrix<V>> cache;
  auto m = SparseMatrix<V>::identity(module_rank(ring.strands()), ring.one(), ring.zero());
  for (const GnLetter& l : w.letters()) {
    auto key = std::make_pair(l.gen, l.exponent);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, rho_generator(ring, l.gen, l.exponent)).first;
    m = order == ProductOrder::homomorphism ? m * it->second : it->second * m;
  }
  return m;
}

inline RepMatrix rep_of_word(const GnWord& w, ProductOrder order = ProductOrder::homomorphism) {
  return rep_of_word(SymbolicScalars(w.strands()), w, order);
}

// Specializes every generator before multiplying.
inline NumericMatrix rep_of_word(const GnWord& w, const Assignment& a, ProductOrder order = ProductOrder::homomorphism) {
  if (a.strands() != w.strands()) throw DomainError("assignment and word have different n");
  return rep_of_word(NumericScalars(a), w, order);
}

inline RepMatrix rep_of_pure_braid(const BraidWord& b, ProductOrder order = ProductOrder::homomorphism) {
  return rep_of_word(phi_pure(b), order);
}

inline NumericMatrix rep_of_pure_braid(const BraidWord& b, const Assignment& a,
                                       ProductOrder order = ProductOrder::homomorphism) {
  return rep_of_word(phi_pure(b), a, order);
}

inline NumericMatrix specialize(const RepMatrix& m, const Assignment& a) {
  Evaluator eval(a);
  if (m.rows() > 0 && m.zero().strands() != a.strands()) throw DomainError("assignment and matrix have different n");
  return m.map([&](const LaurentPoly& p) { return eval(p); }, Rational(0));
}

// Coefficient of `row` in the image of `col`.
template <class T>
T corner_entry(const SparseMatrix<T>& m, std::size_t n, BasisIndex row, BasisIndex col) {
  if (m.rows() != module_rank(n)) throw DomainError("matrix dimension does not match n");
  return m.at(row.position(n), col.position(n));
}

struct RelationCheck {
  std::string relation;  // "R1", "R2", "R3", "artin", "far"
  std::string instance;
  bool passed = false;
};

struct RelationReport {
  std::size_t n = 0;
  std::vector<RelationCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  std::size_t count(std::string_view relation) const {
    std::size_t k = 0;
    for (const auto& c : checks) k += c.relation == relation;
    return k;
  }

  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& c : checks) k += !c.passed;
    return k;
  }
};

namespace detail {

inline std::vector<GnGenerator> all_generators(std::size_t n) {
  std::vector<GnGenerator> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        if (i != j && j != k && i != k) out.push_back({i, j, k});
  return out;
}

inline std::string gen_name(const GnGenerator& g) {
  return "a(" + std::to_string(g.i) + "," + std::to_string(g.j) + "," + std::to_string(g.k) + ")";
}

class GeneratorCache {
 public:
  explicit GeneratorCache(std::size_t n) : ring_(n) {}
  const RepMatrix& operator()(const GnGenerator& g) {
    auto it = cache_.find(g);
    if (it == cache_.end()) it = cache_.emplace(g, rho_generator(ring_, g, 1)).first;
    return it->second;
  }

 private:
  SymbolicScalars ring_;
  std::map<GnGenerator, RepMatrix> cache_;
};

}  // namespace detail

// Symbolic check of the defining relations:
//   R1  rho(a_ijk) rho(a_kji) = 1 for every triple,
//   R2  rho(a_ijk), rho(a_pqr) commute when the two triples span >= 5 indices,
//   R3  rho(a_ijk a_ijl a_ikl a_jkl) = rho(a_jkl a_ikl a_ijl a_ijk) for every
//       ordered quadruple of distinct indices.
inline RelationReport check_relations(std::size_t n) {
  if (n < 4) throw DomainError("relation checks need n >= 4");
  RelationReport report{n, {}};
  detail::GeneratorCache rho(n);
  const auto gens = detail::all_generators(n);

  for (const auto& g : gens) {
    const bool ok = (rho(g) * rho(g.reversed())).is_identity();
    report.checks.push_back({"R1", detail::gen_name(g) + "*" + detail::gen_name(g.reversed()), ok});
  }

  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const auto& g = gens[a];
      const auto& h = gens[b];
      std::vector<std::size_t> idx{g.i, g.j, g.k, h.i, h.j, h.k};
      std::sort(idx.begin(), idx.end());
      const auto distinct = static_cast<std::size_t>(std::unique(idx.begin(), idx.end()) - idx.begin());
      if (distinct < 5) continue;
      const bool ok = rho(g) * rho(h) == rho(h) * rho(g);
      report.checks.push_back({"R2", detail::gen_name(g) + "," + detail::gen_name(h), ok});
    }
  }

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          const GnGenerator ijk{i, j, k}, ijl{i, j, l}, ikl{i, k, l}, jkl{j, k, l};
          const bool ok = rho(ijk) * rho(ijl) * rho(ikl) * rho(jkl) == rho(jkl) * rho(ikl) * rho(ijl) * rho(ijk);
          report.checks.push_back({"R3", "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                                             "," + std::to_string(l) + ")",
                                   ok});
        }
  return report;
}

// Matrix-level check that the images of both sides of every braid relation
// agree: the Artin relations s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} and far
// commutativity s_i s_j = s_j s_i for |i - j| > 1. Both sides carry the same
// permutation, so the comparison is on the word components.
inline RelationReport check_braid_relations(std::size_t n, ProductOrder order = ProductOrder::homomorphism) {
  if (n < 3) throw DomainError("braid relation checks need n >= 3");
  RelationReport report{n, {}};
  auto compare = [&](const std::string& relation, const std::string& instance, const BraidWord& lhs, const BraidWord& rhs) {
    const SemidirectElement a = phi(lhs);
    const SemidirectElement b = phi(rhs);
    const bool ok = a.perm == b.perm && rep_of_word(a.word, order) == rep_of_word(b.word, order);
    report.checks.push_back({relation, instance, ok});
  };
  for (std::size_t i = 1; i + 1 < n; ++i) {
    BraidWord lhs(n, {{i, 1}, {i + 1, 1}, {i, 1}});
    BraidWord rhs(n, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
    compare("artin", "i=" + std::to_string(i), lhs, rhs);
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      BraidWord lhs(n, {{i, 1}, {j, 1}});
      BraidWord rhs(n, {{j, 1}, {i, 1}});
      compare("far", "(" + std::to_string(i) + "," + std::to_string(j) + ")", lhs, rhs);
    }
  }
  return report;
}

// Burau matrices live over Z[t^±], realised as the n = 1 Laurent ring whose
// variable t1 plays the role of t.
using BurauMatrix = SparseMatrix<LaurentPoly>;

namespace detail {

inline LaurentPoly burau_t(int power) { return LaurentPoly::variable(1, {VariableKind::t, 1}, power); }
inline LaurentPoly burau_c(long c) { return LaurentPoly::constant(1, Integer(c)); }

}  // namespace detail

// Unreduced Burau: s_i acts by the block [[1 - t, t], [1, 0]] on rows and
// columns i, i+1; words multiply left to right.
inline BurauMatrix burau_unreduced(const BraidWord& w) {
  using detail::burau_c;
  using detail::burau_t;
  const std::size_t n = w.strands();
  BurauMatrix m = BurauMatrix::identity(n, burau_c(1), burau_c(0));
  for (const BraidLetter& l : w.letters()) {
    BurauMatrix g = BurauMatrix::identity(n, burau_c(1), burau_c(0));
    const std::size_t a = l.generator - 1, b = l.generator;
    if (l.exponent > 0) {
      g.set(a, a, burau_c(1) - burau_t(1));
      g.set(a, b, burau_t(1));
      g.set(b, a, burau_c(1));
      g.set(b, b, burau_c(0));
    } else {
      g.set(a, a, burau_c(0));
      g.set(a, b, burau_c(1));
      g.set(b, a, burau_t(-1));
      g.set(b, b, burau_c(1) - burau_t(-1));
    }
    m = m * g;
  }
  return m;
}

// Reduced Burau, (n-1) x (n-1): row i of s_i is (.., t, -t, 1, ..) at columns
// i-1, i, i+1 (entries falling outside the matrix dropped); all other rows are
// identity rows. The inverse has row (.., 1, -t^-1, t^-1, ..).
inline BurauMatrix burau_reduced(const BraidWord& w) {
  using detail::burau_c;
  using detail::burau_t;
  const std::size_t n = w.strands();
  const std::size_t d = n - 1;
  BurauMatrix m = BurauMatrix::identity(d, burau_c(1), burau_c(0));
  for (const BraidLetter& l : w.letters()) {
    BurauMatrix g = BurauMatrix::identity(d, burau_c(1), burau_c(0));
    const std::size_t r = l.generator - 1;
    const bool pos = l.exponent > 0;
    if (r >= 1) g.set(r, r - 1, pos ? burau_t(1) : burau_c(1));
    g.set(r, r, pos ? -burau_t(1) : -burau_t(-1));
    if (r + 1 < d) g.set(r, r + 1, pos ? burau_c(1) : burau_t(-1));
    m = m * g;
  }
  return m;
}

}  // namespace braidrep
