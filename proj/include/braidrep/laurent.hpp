#pragma once

// Exact sparse multivariate Laurent polynomials over Z in the variables
// t_1..t_n, s_1..s_n, with evaluation into exact rationals.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braidrep/error.hpp"

namespace braidrep {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// x^e for a nonzero (when e < 0) rational.
inline Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0 && is_zero(base)) throw DomainError("zero raised to a negative power");
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0 || is_zero(Rational(r.get_den()))) {
    throw ParseError("invalid rational '" + s + "'");
  }
  r.canonicalize();
  return r;
}

inline std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

enum class VariableKind { t, s };

struct Variable {
  VariableKind kind = VariableKind::t;
  std::size_t index = 1;  // 1-based

  auto operator<=>(const Variable&) const = default;

  std::string name() const {
    return (kind == VariableKind::t ? "t" : "s") + std::to_string(index);
  }

  // Position in an exponent vector of length 2n.
  std::size_t slot(std::size_t n) const {
    return (kind == VariableKind::t ? 0 : n) + index - 1;
  }

  static Variable parse(std::string_view text, std::size_t n) {
    if (text.size() < 2 || (text[0] != 't' && text[0] != 's')) {
      throw ParseError("invalid variable '" + std::string(text) + "'");
    }
    std::size_t index = 0;
    for (char c : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("invalid variable '" + std::string(text) + "'");
      }
      index = index * 10 + static_cast<std::size_t>(c - '0');
      if (index > 1000000) throw DomainError("variable index too large in '" + std::string(text) + "'");
    }
    if (index < 1 || index > n) {
      throw DomainError("variable " + std::string(text) + " out of range 1.." + std::to_string(n));
    }
    return {text[0] == 't' ? VariableKind::t : VariableKind::s, index};
  }
};

using Exponents = std::vector<std::int32_t>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int32_t x : e) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Element of A = Z[t_1^±..t_n^±, s_1^±..s_n^±]. Zero coefficients are never
// stored. Exponent vectors have length 2n: t_1..t_n then s_1..s_n.
class LaurentPoly {
 public:
  using TermMap = std::unordered_map<Exponents, Integer, ExponentsHash>;

  explicit LaurentPoly(std::size_t n = 1) : n_(n) {}

  static LaurentPoly zero(std::size_t n) { return LaurentPoly(n); }
  static LaurentPoly one(std::size_t n) { return constant(n, Integer(1)); }

  static LaurentPoly constant(std::size_t n, const Integer& c) {
    return monomial(n, Exponents(2 * n, 0), c);
  }

  static LaurentPoly monomial(std::size_t n, Exponents exps, const Integer& c) {
    if (exps.size() != 2 * n) throw DomainError("exponent vector length does not match 2n");
    LaurentPoly p(n);
    if (!::braidrep::is_zero(c)) p.terms_.emplace(std::move(exps), c);
    return p;
  }

  static LaurentPoly variable(std::size_t n, Variable v, std::int32_t power = 1) {
    if (v.index < 1 || v.index > n) throw DomainError("variable " + v.name() + " out of range");
    Exponents e(2 * n, 0);
    e[v.slot(n)] = power;
    return monomial(n, std::move(e), Integer(1));
  }

  std::size_t strands() const noexcept { return n_; }
  std::size_t num_variables() const noexcept { return 2 * n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
  }

  Integer coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  // Units of A are exactly ±monomials.
  bool is_unit() const {
    if (terms_.size() != 1) return false;
    const Integer& c = terms_.begin()->second;
    return c == 1 || c == -1;
  }

  LaurentPoly unit_inverse() const {
    if (!is_unit()) throw DomainError("only monomials with coefficient ±1 are invertible");
    const auto& [e, c] = *terms_.begin();
    Exponents inv(e.size());
    std::transform(e.begin(), e.end(), inv.begin(), [](std::int32_t x) { return -x; });
    return monomial(n_, std::move(inv), c);
  }

  // Terms in canonical order: descending lexicographic on exponent vectors.
  std::vector<std::pair<Exponents, Integer>> sorted_terms() const {
    std::vector<std::pair<Exponents, Integer>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    check_same_ring(other);
    for (const auto& [e, c] : other.terms_) accumulate(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& other) {
    check_same_ring(other);
    for (const auto& [e, c] : other.terms_) accumulate(e, -c);
    return *this;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_ring(b);
    LaurentPoly r(a.n_);
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    Exponents sum(2 * a.n_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = ea[v] + eb[v];
        r.accumulate(sum, ca * cb);
      }
    }
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }

  // a += b * c without materializing the product.
  void add_product(const LaurentPoly& b, const LaurentPoly& c) {
    check_same_ring(b);
    check_same_ring(c);
    Exponents sum(2 * n_);
    for (const auto& [eb, cb] : b.terms_) {
      for (const auto& [ec, cc] : c.terms_) {
        for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = eb[v] + ec[v];
        accumulate(sum, cb * cc);
      }
    }
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_ring(const LaurentPoly& other) const {
    if (n_ != other.n_) {
      throw DomainError("Laurent polynomials over different rings (n=" + std::to_string(n_) +
                        " vs n=" + std::to_string(other.n_) + ")");
    }
  }

  void accumulate(const Exponents& e, const Integer& c) {
    if (::braidrep::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (::braidrep::is_zero(it->second)) terms_.erase(it);
    }
  }

  std::size_t n_;
  TermMap terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

// Assignment of nonzero rationals to the variables of A. `rest` fills every
// variable not assigned explicitly.
class Assignment {
 public:
  explicit Assignment(std::size_t n) : n_(n) {}

  std::size_t strands() const noexcept { return n_; }

  Assignment& set(Variable v, const Rational& value) {
    if (v.index < 1 || v.index > n_) throw DomainError("variable " + v.name() + " out of range");
    values_[v] = value;
    return *this;
  }

  Assignment& set(std::string_view name, const Rational& value) { return set(Variable::parse(name, n_), value); }

  Assignment& set_rest(const Rational& value) {
    rest_ = value;
    return *this;
  }

  static Assignment all(std::size_t n, const Rational& value) { return Assignment(n).set_rest(value); }

  const Rational& value(Variable v) const {
    auto it = values_.find(v);
    if (it != values_.end()) return it->second;
    if (rest_) return *rest_;
    throw DomainError("no value assigned to " + v.name());
  }

  // Values indexed by exponent slot; throws on missing or zero values.
  std::vector<Rational> resolve() const {
    std::vector<Rational> out;
    out.reserve(2 * n_);
    for (VariableKind kind : {VariableKind::t, VariableKind::s}) {
      for (std::size_t i = 1; i <= n_; ++i) {
        const Rational& r = value({kind, i});
        if (is_zero(r)) throw DomainError("variable " + Variable{kind, i}.name() + " assigned zero; variables are units");
        out.push_back(r);
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::map<Variable, Rational> values_;
  std::optional<Rational> rest_;
};

// Ring homomorphism A -> Q determined by resolved slot values.
class Evaluator {
 public:
  explicit Evaluator(const Assignment& a) : n_(a.strands()), values_(a.resolve()) {}

  Rational operator()(const LaurentPoly& p) const {
    if (p.strands() != n_) throw DomainError("assignment and polynomial have different n");
    Rational total(0);
    for (const auto& [e, c] : p.terms()) {
      Rational term(c);
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] != 0) term *= power(v, e[v]);
      }
      total += term;
    }
    return total;
  }

 private:
  const Rational& power(std::size_t slot, std::int32_t e) const {
    auto key = std::make_pair(slot, e);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, rational_pow(values_[slot], e)).first;
    return it->second;
  }

  std::size_t n_;
  std::vector<Rational> values_;
  mutable std::map<std::pair<std::size_t, std::int32_t>, Rational> cache_;
};

inline Rational evaluate(const LaurentPoly& p, const Assignment& a) { return Evaluator(a)(p); }

// Canonical text: terms in descending lexicographic exponent order joined by
// " + "; the coefficient is printed when it is not ±1 or the term is constant.
inline std::string format(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const std::size_t n = p.strands();
  std::string out;
  bool first_term = true;
  for (const auto& [e, c] : p.sorted_terms()) {
    if (!first_term) out += " + ";
    first_term = false;
    std::string factors;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += (v < n ? 't' : 's');
      factors += std::to_string(v < n ? v + 1 : v - n + 1);
      if (e[v] != 1) factors += '^' + std::to_string(e[v]);
    }
    if (factors.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += factors;
    } else if (c == -1) {
      out += '-' + factors;
    } else {
      out += c.get_str() + '*' + factors;
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  LaurentPoly parse() {
    LaurentPoly result(n_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negate = false;
    while (true) {
      LaurentPoly term = parse_term();
      result += negate ? -term : term;
      skip_ws();
      if (at_end()) break;
      char op = text_[pos_];
      if (op != '+' && op != '-') throw ParseError(std::string("expected '+' or '-' but found '") + op + "'", pos_);
      negate = (op == '-');
      ++pos_;
      skip_ws();
    }
    return result;
  }

 private:
  LaurentPoly parse_term() {
    skip_ws();
    bool negative = false;
    while (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      if (text_[pos_] == '-') negative = !negative;
      ++pos_;
      skip_ws();
    }
    if (at_end()) throw ParseError("expected a term", pos_);
    Integer coeff(1);
    Exponents e(2 * n_, 0);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = Integer(read_digits());
      skip_ws();
      if (at_end() || text_[pos_] != '*') need_factor = false;
      else {
        ++pos_;
        skip_ws();
      }
    }
    while (need_factor) {
      parse_factor(e);
      skip_ws();
      if (!at_end() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
      } else {
        need_factor = false;
      }
    }
    if (negative) coeff = -coeff;
    return LaurentPoly::monomial(n_, std::move(e), coeff);
  }

  void parse_factor(Exponents& e) {
    if (at_end() || (text_[pos_] != 't' && text_[pos_] != 's')) {
      throw ParseError("expected variable t<i> or s<i>", pos_);
    }
    std::size_t start = pos_;
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected variable index", pos_);
    }
    read_digits();
    Variable v = Variable::parse(text_.substr(start, pos_ - start), n_);
    std::int64_t power = 1;
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      bool neg = false;
      if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        neg = text_[pos_] == '-';
        ++pos_;
      }
      std::size_t at = pos_;
      std::string digits = read_digits();
      if (digits.size() > 9) throw ParseError("exponent too large", at);
      power = std::stoll(digits);
      if (neg) power = -power;
    }
    e[v.slot(n_)] += static_cast<std::int32_t>(power);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Accepts the canonical grammar plus "-" as a term separator and a leading
// sign on any term.
inline LaurentPoly parse_poly(std::string_view text, std::size_t n) { return detail::PolyParser(text, n).parse(); }

}  // namespace braidrep
