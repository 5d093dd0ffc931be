#pragma once

// Words in the group generated by a_{ijk} (i, j, k distinct) modulo
// a_{kji} = a_{ijk}^-1, the renumbering action of permutations on them, the
// semidirect product with the symmetric group, and the braid homomorphism.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/error.hpp"
#include "braidrep/permutation.hpp"

namespace braidrep {

struct GnGenerator {
  std::size_t i = 1, j = 2, k = 3;

  auto operator<=>(const GnGenerator&) const = default;

  GnGenerator reversed() const { return {k, j, i}; }
};

struct GnLetter {
  GnGenerator gen;
  int exponent = 1;

  friend bool operator==(const GnLetter&, const GnLetter&) = default;

  // Representative of the letter modulo a_{kji} = a_{ijk}^-1, with i < k.
  GnLetter canonical() const {
    if (gen.i > gen.k) return {gen.reversed(), -exponent};
    return *this;
  }

  GnLetter inverse() const { return {gen, -exponent}; }

  bool cancels(const GnLetter& other) const {
    const GnLetter a = canonical();
    const GnLetter b = other.canonical();
    return a.gen == b.gen && a.exponent == -b.exponent;
  }

  std::string to_string() const {
    std::string s = "a(" + std::to_string(gen.i) + "," + std::to_string(gen.j) + "," + std::to_string(gen.k) + ")";
    if (exponent == -1) s += "^-1";
    return s;
  }
};

class GnWord {
 public:
  explicit GnWord(std::size_t n = 3) : n_(n) {}

  GnWord(std::size_t n, std::vector<GnLetter> letters) : n_(n) {
    letters_.reserve(letters.size());
    for (const GnLetter& l : letters) push_back(l);
  }

  std::size_t strands() const noexcept { return n_; }
  const std::vector<GnLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(const GnLetter& l) {
    const auto& g = l.gen;
    auto in_range = [&](std::size_t x) { return x >= 1 && x <= n_; };
    if (!in_range(g.i) || !in_range(g.j) || !in_range(g.k)) throw DomainError("generator index out of range in " + l.to_string());
    if (g.i == g.j || g.j == g.k || g.i == g.k) throw DomainError("generator indices must be distinct in " + l.to_string());
    if (l.exponent != 1 && l.exponent != -1) throw DomainError("letter exponent must be +1 or -1");
    letters_.push_back(l);
  }

  GnWord inverse() const {
    GnWord r(n_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
    return r;
  }

  GnWord& operator*=(const GnWord& other) {
    if (other.n_ != n_) throw DomainError("words over different n");
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }

  friend GnWord operator*(GnWord a, const GnWord& b) { return a *= b; }
  friend bool operator==(const GnWord&, const GnWord&) = default;

  std::string to_string() const {
    std::string out;
    for (const GnLetter& l : letters_) {
      if (!out.empty()) out += ' ';
      out += l.to_string();
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<GnLetter> letters_;
};

// Free reduction modulo a_{kji} = a_{ijk}^-1. Letters keep their written form.
inline GnWord free_reduce(const GnWord& w) {
  std::vector<GnLetter> stack;
  stack.reserve(w.length());
  for (const GnLetter& l : w.letters()) {
    if (!stack.empty() && stack.back().cancels(l)) stack.pop_back();
    else stack.push_back(l);
  }
  GnWord r(w.strands());
  for (const GnLetter& l : stack) r.push_back(l);
  return r;
}

// Reduced word with every letter rewritten to its i < k representative. Two
// words are equal modulo relation 1 iff their canonical forms coincide.
inline GnWord canonical(const GnWord& w) {
  const GnWord reduced = free_reduce(w);
  GnWord r(w.strands());
  for (const GnLetter& l : reduced.letters()) r.push_back(l.canonical());
  return r;
}

inline bool free_equal(const GnWord& a, const GnWord& b) {
  return a.strands() == b.strands() && canonical(a) == canonical(b);
}

// tau(a_{ijk}) = a_{tau(i) tau(j) tau(k)}, letter order preserved.
inline GnWord permute(const Permutation& tau, const GnWord& w) {
  if (tau.size() != w.strands()) throw DomainError("permutation and word sizes differ");
  GnWord r(w.strands());
  for (const GnLetter& l : w.letters()) r.push_back({{tau(l.gen.i), tau(l.gen.j), tau(l.gen.k)}, l.exponent});
  return r;
}

// Element (perm, word) of the semidirect product.
struct SemidirectElement {
  Permutation perm;
  GnWord word;

  static SemidirectElement identity(std::size_t n) { return {Permutation::identity(n), GnWord(n)}; }

  bool is_identity() const { return perm.is_identity() && free_reduce(word).empty(); }

  // Structural equality of the written words.
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

inline bool free_equal(const SemidirectElement& a, const SemidirectElement& b) {
  return a.perm == b.perm && free_equal(a.word, b.word);
}

// (s1, w1)(s2, w2) = (s1 s2, s2(w1) w2), freely reduced.
inline SemidirectElement operator*(const SemidirectElement& a, const SemidirectElement& b) {
  if (a.perm.size() != b.perm.size() || a.word.strands() != b.word.strands()) {
    throw DomainError("semidirect elements over different n");
  }
  return {a.perm * b.perm, free_reduce(permute(b.perm, a.word) * b.word)};
}

inline SemidirectElement inverse(const SemidirectElement& a) {
  const Permutation inv = a.perm.inverse();
  return {inv, free_reduce(permute(inv, a.word.inverse()))};
}

// phi(s_i) = ((i i+1), a_{i-1,i+1,i} ... a_{1,i+1,i} a_{n,i+1,i} ... a_{i+2,i+1,i});
// phi(s_i^-1) is its group inverse.
inline SemidirectElement phi_generator(std::size_t n, std::size_t i, int exponent = 1) {
  if (n < 2 || i < 1 || i >= n) throw DomainError("phi generator index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
  GnWord w(n);
  for (std::size_t p = i - 1; p >= 1; --p) w.push_back({{p, i + 1, i}, 1});
  for (std::size_t p = n; p >= i + 2; --p) w.push_back({{p, i + 1, i}, 1});
  SemidirectElement g{Permutation::transposition(n, i), std::move(w)};
  return exponent >= 0 ? g : inverse(g);
}

inline SemidirectElement phi(const BraidWord& w) {
  SemidirectElement acc = SemidirectElement::identity(w.strands());
  for (const BraidLetter& l : w.letters()) acc = acc * phi_generator(w.strands(), l.generator, l.exponent);
  return acc;
}

// Word component of phi for a pure braid.
inline GnWord phi_pure(const BraidWord& w) {
  SemidirectElement e = phi(w);
  if (!e.perm.is_identity()) throw NotPureError("braid is not pure: permutation " + e.perm.cycle_notation());
  return std::move(e.word);
}

}  // namespace braidrep
