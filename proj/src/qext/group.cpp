#include "qext/group.hpp"

namespace qext {

group_spec make_group_spec(family fam, int n) {
  if (n < 3) fail(errc::n_too_small, "N must be at least 3");
  if (fam == family::symplectic && n % 2 != 0)
    fail(errc::odd_symplectic, "symplectic series requires even N");
  group_spec g;
  g.fam = fam;
  g.n = n;
  g.eps = fam == family::orthogonal ? 1 : -1;
  g.two_rho.resize((size_t)n);
  g.eps_i.assign((size_t)n, 1);
  if (fam == family::orthogonal) {
    // odd N:  (N/2-1, ..., 1/2, 0, -1/2, ..., 1-N/2)
    // even N: (N/2-1, ..., 1, 0, 0, -1, ..., 1-N/2)
    for (int i = 1; i <= n; ++i) {
      int v;
      if (2 * i < n + 1) v = n - 2 * i;
      else if (2 * i == n + 1) v = 0;
      else v = -(n - 2 * (n + 1 - i));
      g.two_rho[(size_t)(i - 1)] = v;
    }
  } else {
    // (N/2, ..., 1, -1, ..., -N/2)
    for (int i = 1; i <= n / 2; ++i) {
      g.two_rho[(size_t)(i - 1)] = 2 * (n / 2 - i + 1);
      g.two_rho[(size_t)(n - i)] = -2 * (n / 2 - i + 1);
      g.eps_i[(size_t)(n - i)] = -1;
    }
  }
  // rho_{i'} = -rho_i must hold by construction
  for (int i = 1; i <= n; ++i)
    if (g.two_rho[(size_t)(i - 1)] != -g.two_rho[(size_t)(g.iprime(i) - 1)])
      fail(errc::internal_error, "rho sequence is not antisymmetric");
  return g;
}

}  // namespace qext
