// Lists the permutation binomials x^35 (x^24 + a) of F_73 and compares the count with
// the closed form.
#include <iostream>

#include "permbinom/permbinom.hpp"

int main() {
  using namespace permbinom;
  const FieldSpec spec = make_field(73, 1);
  const auto admissible = enumerate_perm_binomials(spec, 35, 3, Method::kCriterion);
  std::cout << "a values:";
  for (FieldElement a : admissible) std::cout << ' ' << a.code();
  std::cout << "\ncount " << admissible.size() << ", closed form " << closed_count_r3(73, 1, 35)
            << ", kappa_73 = " << compute_kappa(73).kappa << '\n';
  return 0;
}
