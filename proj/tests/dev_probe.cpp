// Development scratch binary; not part of the test suite.
#include <array>
#include <iostream>

#include "qext/calculus.hpp"
#include "qext/qdata.hpp"

using namespace qext;

template <class F>
void probe_calculus(const group_spec& g, const F& f) {
  std::cout << "== calculus " << g.name() << " (" << f.mode_name() << ")\n";
  auto qd = build_qdata(g, f);
  auto c = build_calculus(qd, +1);
  const auto& k = qd.k;
  const int n = g.n;
  using V = typename F::value;

  // sigma fixes theta (x) theta, eta, xi (reduced coordinates)
  for (auto [name, v] : {std::pair<const char*, const tensor<F>*>{"theta2", &c.v_theta2},
                         {"eta", &c.v_eta},
                         {"xi", &c.v_xi}})
    std::cout << "  sigma fixes " << name << ": " << (apply(c.sigma_red, *v) == *v) << "\n";

  // theta2 = q eta+ - q^{-1} eta- + rhat^{-1} eta0
  {
    auto rhs = scale(c.v_eta_tau[0], k.lam[0]) + scale(c.v_eta_tau[1], k.lam[1]) +
               scale(c.v_eta_tau[2], k.lam[2]);
    std::cout << "  theta2 decomposition: " << (c.v_theta2 == rhs) << "\n";
    auto eta_rhs = scale(c.v_eta_tau[0] + c.v_eta_tau[1] + c.v_eta_tau[2], k.rhat);
    std::cout << "  eta = rhat*(sum eta_tau): " << (c.v_eta == eta_rhs) << "\n";
    std::cout << "  xi = x*eta0: " << (c.v_xi == scale(c.v_eta_tau[2], k.x)) << "\n";
  }

  // sigma in plain basis equals the four-factor product
  {
    auto direct = compose(leg_embed(qd.r_grave_minus, 2, 4),
                  compose(leg_embed(qd.r, 1, 4),
                  compose(leg_embed(qd.r_check_inv, 3, 4), leg_embed(qd.r_acute, 2, 4))));
    std::cout << "  sigma product form: " << (c.sigma_plain == direct) << "\n";
  }

  // e-tn: M2(i,j) eta0 = delta_ij eta0
  {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n && ok; ++j) {
        auto w = apply(c.m2_at(i, j), c.v_eta_tau[2]);
        ok = i == j ? w == c.v_eta_tau[2] : w.is_zero();
      }
    std::cout << "  eta0 fixed pointwise: " << ok << "\n";
  }

  // alpha_tau: eta_tau <| (U - x) = alpha_tau eta_tau
  for (int t = 0; t < 3; ++t) {
    auto w = c.act2_qtrace_plus(c.v_eta_tau[(size_t)t]);
    bool ok = w == scale(c.v_eta_tau[(size_t)t], k.alpha_tau[(size_t)t]);
    std::cout << "  alpha[" << tau_name((tau_idx)t) << "]: " << ok << "\n";
  }

  // M2 independent route: phi_inv (sum_c M1(i,c) x M1(c,j)) phi
  {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n && ok; ++j) {
        tensor<F> acc(4, 4, n);
        for (int cc = 1; cc <= n; ++cc) acc = acc + kron(c.m1_at(i, cc), c.m1_at(cc, j));
        auto alt = compose(c.phi_inv, compose(acc, c.phi));
        ok = alt == c.m2_at(i, j);
      }
    std::cout << "  M2 two routes agree: " << ok << "\n";
  }

  // e-etatu as N^2-indexed vector identity
  for (int t = 0; t < 2; ++t) {
    V l = k.lam[(size_t)t], li = k.lam_inv[(size_t)t];
    V a = k.qhat * (l * l + f.integer(1));
    V b = k.rhat_inv * k.qhat * (f.integer(1) + li * li);
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n && ok; ++j) {
        auto lhs = apply(c.m2_at(i, j), c.v_eta_tau[(size_t)t]);
        if (i == j) lhs = lhs - c.v_eta_tau[(size_t)t];
        auto rhs = scale(c.fam_xi((tau_idx)t, i, j), a) - scale(c.fam_eta((tau_idx)t, i, j), b);
        ok = lhs == rhs;
      }
    std::cout << "  vector identity tau=" << tau_name((tau_idx)t) << ": " << ok << "\n";
  }

  // contractions D^j_i eta_ij = eta_tau, D^j_i xi_ij = rhat eta_tau
  for (int t = 0; t < 2; ++t) {
    tensor<F> se(4, 0, n), sx(4, 0, n);
    for (int i = 1; i <= n; ++i) {
      se = se + scale(c.fam_eta((tau_idx)t, i, i), qd.d_diag[(size_t)(i - 1)]);
      sx = sx + scale(c.fam_xi((tau_idx)t, i, i), qd.d_diag[(size_t)(i - 1)]);
    }
    std::cout << "  contractions tau=" << tau_name((tau_idx)t) << ": "
              << (se == c.v_eta_tau[(size_t)t] &&
                  sx == scale(c.v_eta_tau[(size_t)t], k.rhat))
              << "\n";
  }

  // e-coupling via the projector-weighted family actions:
  //   sum d_i d_s (P^nu)^{jt}_{is} M2(s,t) fam_{ij}
  // equals (qhat delta r^2 l^2 + r l_nu^2 t_nu - qhat l_nu/l_tau e) eta  (xi family)
  // and    (qhat r l_nu^{-1} l_tau e + l_nu^{-2} t_nu - qhat r^{-1} l_tau^{-2} delta) eta (eta family).
  {
    for (int t = 0; t < 2; ++t)
      for (int u = 0; u < 2; ++u) {
        auto weighted = [&](bool use_xi) {
          tensor<F> acc(4, 0, n);
          for (int s = 1; s <= n; ++s)
            for (int tt = 1; tt <= n; ++tt) {
              tensor<F> uv(4, 0, n);
              bool any = false;
              for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                  V wgt = qd.d_diag[(size_t)(i - 1)] * qd.d_diag[(size_t)(s - 1)] *
                          qd.p[(size_t)u].at((long)(j - 1) * n + (tt - 1), (long)(i - 1) * n + (s - 1));
                  if (F::is_zero(wgt)) continue;
                  const auto& fam = use_xi ? c.fam_xi((tau_idx)t, i, j) : c.fam_eta((tau_idx)t, i, j);
                  uv = uv + scale(fam, wgt);
                  any = true;
                }
              if (any) acc = acc + apply(c.m2_at(s, tt), uv);
            }
          return acc;
        };
        V l = k.lam[(size_t)t], li = k.lam_inv[(size_t)t];
        V ln = k.lam[(size_t)u], lni = k.lam_inv[(size_t)u];
        V tn = k.t_tau[(size_t)u];
        V dlt = f.integer(t == u ? 1 : 0);
        V e_closed = k.e_coupling((tau_idx)t, (tau_idx)u);
        // extract machine kappa from both families
        auto wx = weighted(true);
        auto we = weighted(false);
        V kx = detail::proportionality(wx, c.v_eta_tau[(size_t)t], "xi-family action");
        V ke = detail::proportionality(we, c.v_eta_tau[(size_t)t], "eta-family action");
        V ex = (k.qhat * dlt * k.rhat * k.rhat * l * l + k.rhat * ln * ln * tn - kx) *
               F::inv(k.qhat * ln * li);
        V ee = (ke - lni * lni * tn + k.qhat * k.rhat_inv * li * li * dlt) *
               F::inv(k.qhat * k.rhat * lni * l);
        std::cout << "  e[" << tau_name((tau_idx)t) << tau_name((tau_idx)u)
                  << "] closed-vs-xi: " << (F::is_zero(ex - e_closed))
                  << " closed-vs-eta: " << (F::is_zero(ee - e_closed))
                  << " xi-vs-eta: " << (F::is_zero(ex - ee)) << "\n";
      }
  }

  // Figure-10 wiring search: which slot assignment of acute(P^nu) yields
  // e[tau,nu] * eta_tau for all tau,nu in {+,-}?
  {
    std::array<int, 4> perm = {0, 1, 2, 3};
    std::array<std::array<int, 4>, 24> perms;
    int np = 0;
    std::sort(perm.begin(), perm.end());
    do { perms[(size_t)np++] = perm; } while (std::next_permutation(perm.begin(), perm.end()));
    for (int xf = 0; xf < 3; ++xf)
    for (int pi = 0; pi < 24; ++pi) {
      bool all_ok = true;
      for (int t = 0; t < 2 && all_ok; ++t)
        for (int u = 0; u < 2 && all_ok; ++u) {
          auto a = xf == 0   ? acute_transform(qd.p[(size_t)u])
                   : xf == 1 ? qd.p[(size_t)u]
                             : check_transform(qd.p[(size_t)u]);
          const auto& p = qd.p[(size_t)t];
          const auto& pc = qd.p_check[(size_t)t];
          tensor<F> w(4, 0, n);
          for (int mm = 1; mm <= n; ++mm)
            for (int nn2 = 1; nn2 <= n; ++nn2)
              for (int kk = 1; kk <= n; ++kk)
                for (int ll = 1; ll <= n; ++ll) {
                  V acc(0);
                  for (int y = 1; y <= n; ++y)
                    for (int k1 = 1; k1 <= n; ++k1) {
                      const auto& pv = p.at((long)(mm - 1) * n + (nn2 - 1), (long)(y - 1) * n + (k1 - 1));
                      if (F::is_zero(pv)) continue;
                      for (int k2 = 1; k2 <= n; ++k2)
                        for (int z = 1; z <= n; ++z) {
                          // vars in order (k1, k2, y, z); perm picks (u1,u2,l1,l2)
                          std::array<int, 4> vars = {k1, k2, y, z};
                          int u1 = vars[(size_t)perms[(size_t)pi][0]];
                          int u2 = vars[(size_t)perms[(size_t)pi][1]];
                          int l1 = vars[(size_t)perms[(size_t)pi][2]];
                          int l2 = vars[(size_t)perms[(size_t)pi][3]];
                          const auto& av = a.at((long)(u1 - 1) * n + (u2 - 1), (long)(l1 - 1) * n + (l2 - 1));
                          if (F::is_zero(av)) continue;
                          const auto& qv = pc.at((long)(kk - 1) * n + (ll - 1), (long)(k2 - 1) * n + (z - 1));
                          if (F::is_zero(qv)) continue;
                          acc += pv * av * qv;
                        }
                    }
                  w.at((((long)(mm - 1) * n + (nn2 - 1)) * n + (kk - 1)) * n + (ll - 1), 0) = acc;
                }
          V e = k.e_coupling((tau_idx)t, (tau_idx)u);
          all_ok = w == scale(c.v_eta_tau[(size_t)t], e);
        }
      if (all_ok) std::cout << "  figure-10 wiring hit: xf=" << xf << " perm #" << pi << " = ("
                            << perms[(size_t)pi][0] << perms[(size_t)pi][1]
                            << perms[(size_t)pi][2] << perms[(size_t)pi][3] << ")\n";
    }
  }
}

int main() {
  numeric_field fn{mpq_class(2)};
  probe_calculus(make_group_spec(family::orthogonal, 3), fn);
  probe_calculus(make_group_spec(family::symplectic, 4), fn);
  return 0;
}
