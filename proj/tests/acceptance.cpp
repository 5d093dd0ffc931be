// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <vector>
#include <string>

#include "braidrep/braidrep.hpp"
#include "support/generators.hpp"

namespace {

using namespace braidrep;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool ok, const std::string& what, double seconds) {
  std::printf("[%s] AC%d %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, what.c_str(), seconds);
  std::fflush(stdout);
  failures += !ok;
}

void criterion(int id, const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = Clock::now();
  bool ok = false;
  std::string what;
  try {
    std::tie(ok, what) = body();
  } catch (const std::exception& e) {
    what = std::string("threw: ") + e.what();
  }
  report(id, ok, what, std::chrono::duration<double>(Clock::now() - start).count());
}

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Combo {
  CommutatorConvention conv;
  ProductOrder order;
};

std::string combo_name(const Combo& c) { return to_string(c.conv) + "/" + to_string(c.order); }

Assignment kernel_assignment(std::size_t n) {
  Assignment a(n);
  a.set("t1", -1);
  if (n == 6) a.set("s1", -1);
  a.set_rest(1);
  return a;
}

// Default combination first; the first one giving -399 is kept for n = 6.
std::optional<Combo> calibrated;

std::pair<bool, std::string> kernel_entry(std::size_t n) {
  const auto start = Clock::now();
  std::vector<Combo> combos;
  if (calibrated) {
    combos.push_back(*calibrated);
  } else {
    for (auto conv : {CommutatorConvention::aba_inv_b_inv, CommutatorConvention::a_inv_b_inv_ab})
      for (auto order : {ProductOrder::homomorphism, ProductOrder::anti_homomorphism}) combos.push_back({conv, order});
  }
  std::string detail;
  std::optional<Combo> passing;
  for (const Combo& c : combos) {
    const NumericMatrix m = rep_of_pure_braid(bigelow_beta(n, c.conv), kernel_assignment(n), c.order);
    const Rational v = corner_entry(m, n, {1, 2}, {1, 2});
    detail += " " + combo_name(c) + "=" + format_rational(v) + (m.is_identity() ? "(identity)" : "");
    if (!passing && v == -399 && !m.is_identity()) passing = c;
  }
  const bool fast = since(start) < 10.0;
  if (!calibrated) calibrated = passing;
  const std::string dim = std::to_string(module_rank(n));
  std::string what = "n=" + std::to_string(n) + " " + dim + "x" + dim + " entry(x12,x12) = -399, not identity, < 10s;" + detail;
  what += passing ? "; convention " + combo_name(*passing) : "; no convention reproduces -399";
  return {passing.has_value() && fast, what};
}

}  // namespace

int main() {
  criterion(1, [] { return kernel_entry(5); });
  criterion(2, [] { return kernel_entry(6); });

  criterion(3, [] {
    const auto start = Clock::now();
    bool ok = true;
    for (std::size_t n : {5u, 6u}) ok = ok && burau_reduced(bigelow_beta(n)).is_identity();
    return std::make_pair(ok && since(start) < 1.0, std::string("reduced Burau of beta is the identity at n=5,6, < 1s"));
  });

  criterion(4, [] {
    bool ok = true;
    for (std::size_t n : {5u, 6u}) {
      for (auto conv : {CommutatorConvention::aba_inv_b_inv, CommutatorConvention::a_inv_b_inv_ab}) {
        const BraidWord b = bigelow_beta(n, conv);
        ok = ok && braid_permutation(b).is_identity() && phi(b).perm.is_identity();
      }
    }
    return std::make_pair(ok, std::string("beta is pure at n=5,6 under both commutator conventions"));
  });

  criterion(5, [] {
    const auto start = Clock::now();
    const RelationReport r4 = check_relations(4);
    const RelationReport r5 = check_relations(5);
    bool cited = false;
    for (const auto& c : r4.checks) cited = cited || (c.relation == "R3" && c.instance == "(1,2,3,4)" && c.passed);
    const bool ok = r4.all_passed() && r5.all_passed() && cited && r5.count("R2") > 0 && since(start) < 30.0;
    return std::make_pair(ok, "relations hold symbolically: n=4 R1 " + std::to_string(r4.count("R1")) + ", R3 " +
                                  std::to_string(r4.count("R3")) + " (incl. (1,2,3,4)); n=5 R1 " + std::to_string(r5.count("R1")) +
                                  ", R2 " + std::to_string(r5.count("R2")) + ", R3 " + std::to_string(r5.count("R3")) + "; < 30s");
  });

  criterion(6, [] {
    bool ok = true;
    for (std::size_t n = 3; n <= 5; ++n) ok = ok && check_braid_relations(n).all_passed();
    return std::make_pair(ok, std::string("braid relations hold under phi then rho for n=3..5"));
  });

  criterion(7, [] {
    testing::Rng rng(2024);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 3, 6));
      const auto a = testing::random_semidirect(rng, n, 6);
      const auto b = testing::random_semidirect(rng, n, 6);
      const auto c = testing::random_semidirect(rng, n, 6);
      ok = free_equal((a * b) * c, a * (b * c));
    }
    for (int trial = 0; trial < 200 && ok; ++trial) {
      const GnWord u = testing::random_gn_word(rng, 4, 6), v = testing::random_gn_word(rng, 4, 6);
      const RepMatrix ru = rep_of_word(u);
      ok = rep_of_word(u * v) == ru * rep_of_word(v) && rep_of_word(free_reduce(u * u.inverse() * v * v)) == rep_of_word(v * v) &&
           rep_of_word(free_reduce(u)) == ru;
    }
    return std::make_pair(ok, std::string("semidirect product associative on 1000 triples; rho multiplicative and "
                                          "free-reduction invariant on 200 random words at n=4"));
  });

  criterion(8, [] {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 3; n <= 6; ++n) {
      const CalibrationReport r = calibrate_against_phi(n);
      for (const auto& e : r.entries) ok = ok && e.status == CalibrationStatus::exact && e.events == n - 2;
      detail += " n=" + std::to_string(n) + ":" + (r.all_exact() ? "exact" : "mismatch");
    }
    return std::make_pair(ok, "collinearity words equal phi(sigma_i) with n-2 events;" + detail);
  });

  criterion(9, [] {
    testing::Rng rng(99);
    bool ok = true;
    int tried = 0;
    for (std::size_t n : {4u, 5u}) {
      const Assignment ones = Assignment(n).set_rest(1);
      for (int trial = 0; trial < 50; ++trial, ++tried) {
        const BraidWord b = testing::random_pure_braid(rng, n);
        ok = ok && rep_of_pure_braid(b, ones).is_identity();
      }
    }
    return std::make_pair(ok, "all-ones specialization is the identity on " + std::to_string(tried) + " random pure braids (n=4,5)");
  });

  return failures == 0 ? 0 : 1;
}
