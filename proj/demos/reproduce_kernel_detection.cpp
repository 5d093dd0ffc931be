// Evaluates the 5- and 6-strand Burau-kernel braid under the representation
// and under the reduced Burau representation.

#include <iostream>

#include "braidrep/braidrep.hpp"

using namespace braidrep;

int main() {
  const BraidWord beta5 = bigelow_beta(5);
  std::cout << "beta has " << beta5.length() << " letters, pure: " << std::boolalpha << is_pure(beta5) << "\n";
  std::cout << "reduced Burau image is identity: " << burau_reduced(beta5).is_identity() << "\n";

  const NumericMatrix m5 = rep_of_pure_braid(beta5, Assignment(5).set("t1", -1).set_rest(1));
  std::cout << "n=5, t1=-1: <x12|M|x12> = " << format_rational(corner_entry(m5, 5, {1, 2}, {1, 2}))
            << ", identity: " << m5.is_identity() << "\n";

  const BraidWord beta6 = bigelow_beta(6);
  const NumericMatrix m6 = rep_of_pure_braid(beta6, Assignment(6).set("t1", -1).set("s1", -1).set_rest(1));
  std::cout << "n=6, t1=s1=-1: <x12|M|x12> = " << format_rational(corner_entry(m6, 6, {1, 2}, {1, 2}))
            << ", identity: " << m6.is_identity() << "\n";
  return 0;
}
