#ifndef QEXT_GROUP_HPP
#define QEXT_GROUP_HPP

#include <string>
#include <vector>

#include "qext/errors.hpp"

namespace qext {

enum class family { orthogonal, symplectic };

// Group-dependent index data: conjugation i -> i' = N+1-i, the exponents
// rho_i (stored doubled so the B series stays integral), and the signs eps_i.
struct group_spec {
  family fam = family::orthogonal;
  int n = 0;
  int eps = 1;                 // +1 orthogonal, -1 symplectic
  std::vector<int> two_rho;    // 2*rho_i, i = 1..N
  std::vector<int> eps_i;      // +-1, i = 1..N

  int iprime(int i) const { return n + 1 - i; }
  std::string name() const { return (fam == family::orthogonal ? "o" : "sp") + std::to_string(n); }
};

group_spec make_group_spec(family fam, int n);

}  // namespace qext

#endif
