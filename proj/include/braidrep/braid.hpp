#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "braidrep/error.hpp"
#include "braidrep/permutation.hpp"

namespace braidrep {

// sigma_generator^exponent with exponent = +1 or -1.
struct BraidLetter {
  std::size_t generator = 1;
  int exponent = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  explicit BraidWord(std::size_t n = 2) : n_(n) {
    if (n < 2) throw DomainError("braid words need at least 2 strands");
  }

  BraidWord(std::size_t n, std::vector<BraidLetter> letters) : BraidWord(n) {
    for (const BraidLetter& l : letters) push_back(l);
  }

  std::size_t strands() const noexcept { return n_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(BraidLetter l) {
    if (l.generator < 1 || l.generator >= n_) {
      throw DomainError("generator s" + std::to_string(l.generator) + " out of range 1.." + std::to_string(n_ - 1));
    }
    if (l.exponent != 1 && l.exponent != -1) throw DomainError("braid letter exponent must be +1 or -1");
    letters_.push_back(l);
  }

  // Appends sigma_i^power as |power| unit letters.
  void push_power(std::size_t generator, long power) {
    for (long k = 0; k < (power < 0 ? -power : power); ++k) push_back({generator, power < 0 ? -1 : 1});
  }

  BraidWord inverse() const {
    BraidWord r(n_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back({it->generator, -it->exponent});
    return r;
  }

  BraidWord& operator*=(const BraidWord& other) {
    if (other.n_ != n_) throw DomainError("braid words on different strand counts");
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }

  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  // Same letters on a different strand count.
  BraidWord with_strands(std::size_t n) const { return BraidWord(n, letters_); }

  // "s1 s2^-1" form with runs of equal letters collapsed into powers.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size();) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      long power = static_cast<long>(j - i) * letters_[i].exponent;
      if (!out.empty()) out += ' ';
      out += 's' + std::to_string(letters_[i].generator);
      if (power != 1) out += '^' + std::to_string(power);
      i = j;
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<BraidLetter> letters_;
};

inline BraidWord concat(const BraidWord& a, const BraidWord& b) { return a * b; }

// Cancels adjacent s_i s_i^-1 pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  stack.reserve(w.length());
  for (const BraidLetter& l : w.letters()) {
    if (!stack.empty() && stack.back().generator == l.generator && stack.back().exponent == -l.exponent) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

// Image under s_i -> (i i+1), multiplied left to right.
inline Permutation braid_permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (const BraidLetter& l : w.letters()) p = p * Permutation::transposition(w.strands(), l.generator);
  return p;
}

inline bool is_pure(const BraidWord& w) { return braid_permutation(w).is_identity(); }

enum class CommutatorConvention {
  aba_inv_b_inv,  // [a,b] = a b a^-1 b^-1
  a_inv_b_inv_ab,  // [a,b] = a^-1 b^-1 a b
};

inline std::string to_string(CommutatorConvention c) {
  return c == CommutatorConvention::aba_inv_b_inv ? "aba-b-" : "a-b-ab";
}

inline CommutatorConvention parse_commutator_convention(std::string_view s) {
  if (s == "aba-b-") return CommutatorConvention::aba_inv_b_inv;
  if (s == "a-b-ab") return CommutatorConvention::a_inv_b_inv_ab;
  throw ParseError("unknown commutator convention '" + std::string(s) + "'");
}

inline BraidWord commutator(const BraidWord& a, const BraidWord& b,
                            CommutatorConvention convention = CommutatorConvention::aba_inv_b_inv) {
  if (convention == CommutatorConvention::aba_inv_b_inv) return a * b * a.inverse() * b.inverse();
  return a.inverse() * b.inverse() * a * b;
}

// Accepts "s1 s2^-1 s3^2" or the signed-integer list form "1 -2 3 3".
inline BraidWord parse_braid(std::string_view text, std::size_t n) {
  BraidWord w(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) -> long {
    std::size_t start = pos;
    bool neg = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) throw ParseError("expected an integer", start);
    if (pos - digits_start > 9) throw ParseError("integer too large", start);
    long v = std::stol(std::string(text.substr(digits_start, pos - digits_start)));
    return neg ? -v : v;
  };
  skip_ws();
  while (pos < text.size()) {
    std::size_t item_start = pos;
    long generator = 0;
    long power = 1;
    if (text[pos] == 's' || text[pos] == 'S') {
      ++pos;
      generator = read_int(false);
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        power = read_int(true);
      }
    } else if (text[pos] == '-' || text[pos] == '+' || std::isdigit(static_cast<unsigned char>(text[pos]))) {
      long v = read_int(true);
      if (v == 0) throw ParseError("generator index 0 is not valid", item_start);
      generator = v < 0 ? -v : v;
      power = v < 0 ? -1 : 1;
    } else {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    }
    if (generator < 1 || static_cast<std::size_t>(generator) >= n) {
      throw DomainError("generator s" + std::to_string(generator) + " out of range 1.." + std::to_string(n - 1));
    }
    w.push_power(static_cast<std::size_t>(generator), power);
    skip_ws();
  }
  return w;
}

// The Burau-kernel braid on 5 strands built from
//   psi1 = s3^-1 s2 s1^2 s2 s4^3 s3 s2
//   psi2 = s4^-1 s3 s2 s1^-2 s2 s1^2 s2^2 s1 s4^5
//   beta = [psi1^-1 s4 psi1, psi2^-1 s4 s3 s2 s1^2 s2 s3 s4 psi2].
// For n = 6 the same letters are read on 6 strands.
inline BraidWord bigelow_psi1(std::size_t n = 5) { return parse_braid("s3^-1 s2 s1^2 s2 s4^3 s3 s2", n); }
inline BraidWord bigelow_psi2(std::size_t n = 5) { return parse_braid("s4^-1 s3 s2 s1^-2 s2 s1^2 s2^2 s1 s4^5", n); }

inline BraidWord bigelow_beta(std::size_t n = 5, CommutatorConvention convention = CommutatorConvention::aba_inv_b_inv) {
  if (n != 5 && n != 6) throw DomainError("the built-in kernel braid is defined for n = 5 or 6");
  const BraidWord psi1 = bigelow_psi1(n);
  const BraidWord psi2 = bigelow_psi2(n);
  const BraidWord a = psi1.inverse() * parse_braid("s4", n) * psi1;
  const BraidWord b = psi2.inverse() * parse_braid("s4 s3 s2 s1^2 s2 s3 s4", n) * psi2;
  return commutator(a, b, convention);
}

}  // namespace braidrep
