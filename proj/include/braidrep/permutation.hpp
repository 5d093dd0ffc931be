#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "braidrep/error.hpp"

namespace braidrep {

// Bijection of {1..n}. Products are read left to right: (a * b)(i) = b(a(i)),
// so a * b applies a first. This is the order under which the renumbering
// action on words makes the semidirect product associative.
class Permutation {
 public:
  explicit Permutation(std::size_t n = 0) : images_(n) { std::iota(images_.begin(), images_.end(), std::size_t{1}); }

  // images[i - 1] is the image of i.
  static Permutation from_images(std::vector<std::size_t> images) {
    const std::size_t n = images.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t x : images) {
      if (x < 1 || x > n || seen[x]) throw DomainError("image list is not a permutation");
      seen[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  static Permutation identity(std::size_t n) { return Permutation(n); }

  // Swaps i and i + 1.
  static Permutation transposition(std::size_t n, std::size_t i) {
    if (i < 1 || i + 1 > n) throw DomainError("transposition index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
    Permutation p(n);
    std::swap(p.images_[i - 1], p.images_[i]);
    return p;
  }

  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  std::size_t operator()(std::size_t i) const {
    if (i < 1 || i > images_.size()) throw DomainError("point " + std::to_string(i) + " out of range");
    return images_[i - 1];
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i + 1) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation r(size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i] - 1] = i + 1;
    return r;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw DomainError("permutation sizes differ");
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.images_[i] = b.images_[a.images_[i] - 1];
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  // Disjoint cycles, fixed points omitted; "()" for the identity.
  std::string cycle_notation() const {
    std::string out;
    std::vector<bool> done(size() + 1, false);
    for (std::size_t start = 1; start <= size(); ++start) {
      if (done[start] || images_[start - 1] == start) continue;
      out += '(';
      std::size_t x = start;
      bool first = true;
      while (!done[x]) {
        done[x] = true;
        if (!first) out += ' ';
        first = false;
        out += std::to_string(x);
        x = images_[x - 1];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  // Order of the permutation (lcm of cycle lengths).
  std::size_t order() const {
    std::size_t result = 1;
    std::vector<bool> done(size() + 1, false);
    for (std::size_t start = 1; start <= size(); ++start) {
      if (done[start]) continue;
      std::size_t len = 0;
      for (std::size_t x = start; !done[x]; x = images_[x - 1]) {
        done[x] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

 private:
  std::vector<std::size_t> images_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

}  // namespace braidrep
