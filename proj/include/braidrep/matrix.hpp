#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidrep/error.hpp"
#include "braidrep/laurent.hpp"

namespace braidrep {

// acc += a * b, specialised where the ring has a cheaper fused form.
template <class T>
inline void multiply_add(T& acc, const T& a, const T& b) {
  acc += a * b;
}

inline void multiply_add(LaurentPoly& acc, const LaurentPoly& a, const LaurentPoly& b) { acc.add_product(a, b); }

inline void multiply_add(Rational& acc, const Rational& a, const Rational& b) {
  mpq_t tmp;
  mpq_init(tmp);
  mpq_mul(tmp, a.get_mpq_t(), b.get_mpq_t());
  mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp);
  mpq_clear(tmp);
}

// Row-compressed sparse matrix over a commutative ring T. Absent entries are
// zero; stored entries are never zero. `zero` is kept as a prototype because
// some rings (Laurent polynomials) carry their ambient size in the value.
template <class T>
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, T>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, T zero = T{}) : cols_(cols), rows_(rows), zero_(std::move(zero)) {}

  static SparseMatrix identity(std::size_t dim, const T& one, T zero = T{}) {
    SparseMatrix m(dim, dim, std::move(zero));
    for (std::size_t i = 0; i < dim; ++i) m.rows_[i].emplace_back(i, one);
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const T& zero() const noexcept { return zero_; }
  const Row& row(std::size_t r) const { return rows_.at(r); }

  std::size_t nonzeros() const noexcept {
    std::size_t k = 0;
    for (const Row& r : rows_) k += r.size();
    return k;
  }

  double density() const noexcept {
    const double cells = static_cast<double>(rows()) * static_cast<double>(cols_);
    return cells == 0 ? 0.0 : static_cast<double>(nonzeros()) / cells;
  }

  const T* find(std::size_t r, std::size_t c) const {
    check_index(r, c);
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  }

  T at(std::size_t r, std::size_t c) const {
    const T* v = find(r, c);
    return v ? *v : zero_;
  }

  void set(std::size_t r, std::size_t c, T value) {
    check_index(r, c);
    Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    const bool present = it != row.end() && it->first == c;
    if (is_zero(value)) {
      if (present) row.erase(it);
    } else if (present) {
      it->second = std::move(value);
    } else {
      row.insert(it, Entry(c, std::move(value)));
    }
  }

  // Replaces column c by the given (row, value) pairs.
  void set_column(std::size_t c, const std::vector<std::pair<std::size_t, T>>& entries) {
    for (std::size_t r = 0; r < rows(); ++r) set(r, c, zero_);
    for (const auto& [r, v] : entries) {
      T sum = at(r, c);
      sum += v;
      set(r, c, std::move(sum));
    }
  }

  bool is_identity() const {
    if (rows() != cols_) return false;
    for (std::size_t r = 0; r < rows(); ++r) {
      const Row& row = rows_[r];
      if (row.size() != 1 || row[0].first != r) return false;
      T diff = row[0].second;
      diff -= one_like(row[0].second);
      if (!is_zero(diff)) return false;
    }
    return true;
  }

  template <class F>
  auto map(F&& f, decltype(f(std::declval<const T&>())) zero) const {
    using U = decltype(f(std::declval<const T&>()));
    SparseMatrix<U> out(rows(), cols_, std::move(zero));
    for (std::size_t r = 0; r < rows(); ++r) {
      for (const auto& [c, v] : rows_[r]) out.set(r, c, f(v));
    }
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  // Gustavson row-by-row product. A row whose potential fill exceeds half of
  // the columns accumulates into a dense buffer, otherwise into an ordered map.
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) {
      throw DomainError("matrix shapes do not compose: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols_) +
                        " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols_));
    }
    SparseMatrix out(a.rows(), b.cols_, a.zero_);
    std::vector<T> dense;
    std::vector<bool> touched;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const Row& arow = a.rows_[r];
      std::size_t potential = 0;
      for (const auto& [k, _] : arow) potential += b.rows_[k].size();
      Row& orow = out.rows_[r];
      if (2 * std::min(potential, b.cols_) > b.cols_) {
        if (dense.empty()) {
          dense.assign(b.cols_, a.zero_);
          touched.assign(b.cols_, false);
        }
        for (const auto& [k, av] : arow) {
          for (const auto& [c, bv] : b.rows_[k]) {
            multiply_add(dense[c], av, bv);
            touched[c] = true;
          }
        }
        for (std::size_t c = 0; c < b.cols_; ++c) {
          if (!touched[c]) continue;
          touched[c] = false;
          if (!is_zero(dense[c])) orow.emplace_back(c, std::move(dense[c]));
          dense[c] = a.zero_;
        }
      } else {
        std::map<std::size_t, T> acc;
        for (const auto& [k, av] : arow) {
          for (const auto& [c, bv] : b.rows_[k]) {
            auto it = acc.try_emplace(c, a.zero_).first;
            multiply_add(it->second, av, bv);
          }
        }
        for (auto& [c, v] : acc) {
          if (!is_zero(v)) orow.emplace_back(c, std::move(v));
        }
      }
    }
    return out;
  }

  SparseMatrix& operator*=(const SparseMatrix& other) { return *this = *this * other; }

 private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows() || c >= cols_) throw DomainError("matrix index out of range");
  }

  static T one_like(const T& sample) {
    if constexpr (std::is_same_v<T, LaurentPoly>) {
      return LaurentPoly::one(sample.strands());
    } else {
      (void)sample;
      return T(1);
    }
  }

  std::size_t cols_ = 0;
  std::vector<Row> rows_;
  T zero_{};
};

}  // namespace braidrep
