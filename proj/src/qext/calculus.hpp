#ifndef QEXT_CALCULUS_HPP
#define QEXT_CALCULUS_HPP

#include <array>
#include <vector>

#include "qext/qdata.hpp"

namespace qext {

// First-order-calculus level objects on the N^2-dimensional space of
// left-invariant 1-forms and the N^4-dimensional space of 2-tensors.
//
// Vector coordinates on the 4-leg space come in two bases:
//   plain    : coefficients of theta_{ij} (x) theta_{kl}, flat index (i,j,k,l)
//   reduced  : the braided basis; plain = phi * reduced with phi = (graveR-)_23.
// In the reduced basis the braiding is rhat12 * (rcheck^{-1})_34 and the nine
// block idempotents are P^tau_12 * Pcheck^nu_34.
template <class F>
struct calculus {
  using V = typename F::value;

  const qdata<F>* qd = nullptr;
  int sign = +1;  // +1 for the plus calculus, -1 for the minus calculus

  tensor<F> phi, phi_inv;          // reduced-basis change on 4 legs
  tensor<F> sigma_plain;           // braiding in the plain basis
  tensor<F> sigma_red;             // braiding in the reduced basis
  std::array<std::array<tensor<F>, 3>, 3> block_red;  // idempotents, reduced basis
  std::array<std::array<int, 3>, 3> block_rank{};

  std::vector<tensor<F>> m1;       // N^2 adjoint-action matrices on 1-forms
  tensor<F> g5;                    // 5-leg operator encoding the 2-tensor adjoint action
  std::vector<tensor<F>> m2;       // its N^2 slices on the reduced 4-leg space

  // bi-invariant vectors, reduced-basis coordinates
  tensor<F> v_theta2, v_eta, v_xi;
  std::array<tensor<F>, 3> v_eta_tau;

  // indexed vector families (reduced basis), tau in {+,-}
  std::array<std::vector<tensor<F>>, 2> fam_eta_ij, fam_xi_ij;
  // second-step families: column (s,i,j,t) holds the vector
  std::array<tensor<F>, 2> fam_eta_sijt, fam_xi_sijt;

  int n() const { return qd->g.n; }
  long dim2() const { return (long)n() * n(); }
  long dim4() const { return dim2() * dim2(); }

  const tensor<F>& m2_at(int i, int j) const { return m2[(size_t)((i - 1) * n() + (j - 1))]; }
  const tensor<F>& m1_at(int i, int j) const { return m1[(size_t)((i - 1) * n() + (j - 1))]; }
  const tensor<F>& eta_tau(tau_idx t) const { return v_eta_tau[(int)t]; }
  const tensor<F>& fam_eta(tau_idx t, int i, int j) const {
    return fam_eta_ij[(int)t][(size_t)((i - 1) * n() + (j - 1))];
  }
  const tensor<F>& fam_xi(tau_idx t, int i, int j) const {
    return fam_xi_ij[(int)t][(size_t)((i - 1) * n() + (j - 1))];
  }

  // rho <| U on 1-forms / 2-tensors (U is the quantum trace).
  tensor<F> act1_qtrace(const tensor<F>& v) const {
    tensor<F> acc(2, 0, n());
    for (int i = 1; i <= n(); ++i)
      acc = acc + scale(apply(m1_at(i, i), v), qd->d_diag[(size_t)(i - 1)]);
    return acc;
  }
  tensor<F> act2_qtrace(const tensor<F>& v) const {
    tensor<F> acc(4, 0, n());
    for (int i = 1; i <= n(); ++i)
      acc = acc + scale(apply(m2_at(i, i), v), qd->d_diag[(size_t)(i - 1)]);
    return acc;
  }
  // rho <| (U - eps(U)) with eps(U) = x.
  tensor<F> act1_qtrace_plus(const tensor<F>& v) const {
    return act1_qtrace(v) - scale(v, qd->k.x);
  }
  tensor<F> act2_qtrace_plus(const tensor<F>& v) const {
    return act2_qtrace(v) - scale(v, qd->k.x);
  }

  // rho <| V_nu with V_nu = D^b_a D^j_i (P^nu)^{ai}_{yz} u^y_b u^z_j,
  // on 1-forms (m = m1) or 2-tensors (m = m2).
  tensor<F> act_v(tau_idx nu, const tensor<F>& v, const std::vector<tensor<F>>& m) const {
    const int nn = n();
    const auto& p = qd->proj(nu);
    std::vector<tensor<F>> w((size_t)(nn * nn));
    for (int y = 1; y <= nn; ++y)
      for (int b = 1; b <= nn; ++b)
        w[(size_t)((y - 1) * nn + (b - 1))] = apply(m[(size_t)((y - 1) * nn + (b - 1))], v);
    tensor<F> acc(v.legs_out(), 0, nn);
    for (int z = 1; z <= nn; ++z)
      for (int j = 1; j <= nn; ++j) {
        tensor<F> u(v.legs_out(), 0, nn);
        bool any = false;
        for (int y = 1; y <= nn; ++y)
          for (int b = 1; b <= nn; ++b) {
            V c = qd->d_diag[(size_t)(b - 1)] * qd->d_diag[(size_t)(j - 1)] *
                  p.at((long)(b - 1) * nn + (j - 1), (long)(y - 1) * nn + (z - 1));
            if (F::is_zero(c)) continue;
            u = u + scale(w[(size_t)((y - 1) * nn + (b - 1))], c);
            any = true;
          }
        if (any) acc = acc + apply(m[(size_t)((z - 1) * nn + (j - 1))], u);
      }
    return acc;
  }

  // eps(V_nu), machine-computed as the double q-trace of the idempotent.
  V counit_v(tau_idx nu) const {
    const int nn = n();
    V acc(0);
    for (int a = 1; a <= nn; ++a)
      for (int i = 1; i <= nn; ++i)
        acc += qd->d_diag[(size_t)(a - 1)] * qd->d_diag[(size_t)(i - 1)] *
               qd->proj(nu).at((long)(a - 1) * nn + (i - 1), (long)(a - 1) * nn + (i - 1));
    return acc;
  }

  // Smallest subspace containing v and closed under all adjoint generators.
  span_builder<F> orbit_span(const tensor<F>& v) const {
    span_builder<F> span(dim4());
    std::vector<tensor<F>> queue;
    if (span.add(v)) queue.push_back(v);
    while (!queue.empty()) {
      tensor<F> u = std::move(queue.back());
      queue.pop_back();
      for (const auto& gen : m2) {
        tensor<F> w = apply(gen, u);
        if (span.add(w)) queue.push_back(std::move(w));
      }
    }
    return span;
  }
};

namespace detail {

// Coefficient c with r == c * v, verifying exact proportionality.
template <class F>
typename F::value proportionality(const tensor<F>& r, const tensor<F>& v, const char* what) {
  long idx = -1;
  for (long i = 0; i < v.rows(); ++i)
    if (!F::is_zero(v.at(i, 0))) {
      idx = i;
      break;
    }
  if (idx < 0) fail(errc::identity_violated, std::string(what) + ": reference vector is zero");
  typename F::value c = r.at(idx, 0) * F::inv(v.at(idx, 0));
  if (!(r == scale(v, c))) fail(errc::identity_violated, std::string(what) + ": not proportional");
  return c;
}

}  // namespace detail

template <class F>
calculus<F> build_calculus(const qdata<F>& qd, int sign) {
  calculus<F> c;
  c.qd = &qd;
  c.sign = sign;
  const int n = qd.g.n;
  const auto& k = qd.k;
  using V = typename F::value;

  if (sign < 0) k.mu(tau_idx::plus);  // enforces the minus-calculus hypothesis

  // Basis change and braidings.
  c.phi = leg_embed(qd.r_grave_minus, 2, 4);
  c.phi_inv = leg_embed(qd.r_acute, 2, 4);
  c.sigma_red = compose(leg_embed(qd.r, 1, 4), leg_embed(qd.r_check_inv, 3, 4));
  c.sigma_plain = compose(c.phi, compose(c.sigma_red, c.phi_inv));

  // Nine block idempotents in the reduced basis.
  for (int t = 0; t < 3; ++t)
    for (int u = 0; u < 3; ++u) {
      c.block_red[(size_t)t][(size_t)u] =
          compose(leg_embed(qd.p[(size_t)t], 1, 4), leg_embed(qd.p_check[(size_t)u], 3, 4));
      c.block_rank[(size_t)t][(size_t)u] = qd.p_rank[(size_t)t] * qd.p_rank[(size_t)u];
    }

  // Adjoint action on 1-forms: theta_{ij} <| u^s_t = +- R^{sm}_{iy} R^{jy}_{tn} theta_{mn}.
  c.m1.resize((size_t)(n * n));
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t) {
      tensor<F> m(2, 2, n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int mm = 1; mm <= n; ++mm)
            for (int nn2 = 1; nn2 <= n; ++nn2) {
              V acc(0);
              for (int y = 1; y <= n; ++y) {
                const auto& a = qd.r.at((long)(s - 1) * n + (mm - 1), (long)(i - 1) * n + (y - 1));
                if (F::is_zero(a)) continue;
                const auto& b = qd.r.at((long)(j - 1) * n + (y - 1), (long)(t - 1) * n + (nn2 - 1));
                if (F::is_zero(b)) continue;
                acc += a * b;
              }
              if (sign < 0) acc = -acc;
              m.at((long)(mm - 1) * n + (nn2 - 1), (long)(i - 1) * n + (j - 1)) = acc;
            }
      c.m1[(size_t)((s - 1) * n + (t - 1))] = std::move(m);
    }

  // Adjoint action on 2-tensors in the reduced basis, via the 5-leg operator.
  // The sign of the 1-form action squares away here.
  {
    auto e = [&](const tensor<F>& t, int start) { return leg_embed(t, start, 5); };
    c.g5 = compose(e(qd.r_acute, 3),
           compose(e(qd.r, 1),
           compose(e(qd.r_acute, 2),
           compose(e(qd.r, 3),
           compose(e(qd.r_acute, 4), e(qd.r_grave_minus, 2))))));
    long d4 = c.dim4();
    c.m2.resize((size_t)(n * n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        tensor<F> m(4, 4, n);
        for (long rv = 0; rv < d4; ++rv)
          for (long cv = 0; cv < d4; ++cv) {
            const auto& v = c.g5.at((long)(i - 1) * d4 + rv, cv * n + (j - 1));
            if (!F::is_zero(v)) m.at(rv, cv) = v;
          }
        c.m2[(size_t)((i - 1) * n + (j - 1))] = std::move(m);
      }
  }

  // Bi-invariant vectors: plain coordinates, then converted.
  {
    tensor<F> t2(4, 0, n), eta(4, 0, n), xi(4, 0, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        t2.at(((long)(i - 1) * n + (i - 1)) * n * n + (long)(j - 1) * n + (j - 1), 0) = V(1);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        eta.at(((long)(a - 1) * n + (b - 1)) * n * n + (long)(b - 1) * n + (a - 1), 0) =
            qd.d_diag[(size_t)(b - 1)];
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int mm = 1; mm <= n; ++mm)
          for (int nn2 = 1; nn2 <= n; ++nn2) {
            V acc(0);
            for (int y = 1; y <= n; ++y) {
              const auto& bv = qd.metric_b.at(y - 1, j - 1);
              if (F::is_zero(bv)) continue;
              for (int z = 1; z <= n; ++z) {
                const auto& cv = qd.metric_c.at(i - 1, z - 1);
                if (F::is_zero(cv)) continue;
                acc += cv * qd.r.at((long)(y - 1) * n + (mm - 1), (long)(z - 1) * n + (nn2 - 1)) * bv;
              }
            }
            xi.at(((long)(i - 1) * n + (j - 1)) * n * n + (long)(mm - 1) * n + (nn2 - 1), 0) = acc;
          }
    c.v_theta2 = apply(c.phi_inv, t2);
    c.v_eta = apply(c.phi_inv, eta);
    c.v_xi = apply(c.phi_inv, xi);
  }
  for (int t = 0; t < 3; ++t) {
    tensor<F> v(4, 0, n);
    const auto& p = qd.p[(size_t)t];
    for (int mm = 1; mm <= n; ++mm)
      for (int nn2 = 1; nn2 <= n; ++nn2)
        for (int kk = 1; kk <= n; ++kk)
          for (int ll = 1; ll <= n; ++ll) {
            const auto& pv = p.at((long)(mm - 1) * n + (nn2 - 1), (long)(ll - 1) * n + (kk - 1));
            if (F::is_zero(pv)) continue;
            v.at((((long)(mm - 1) * n + (nn2 - 1)) * n + (kk - 1)) * n + (ll - 1), 0) = pv;
          }
    c.v_eta_tau[(size_t)t] = std::move(v);
  }

  // Indexed families for tau in {+,-}.
  for (int t = 0; t < 2; ++t) {
    const auto& p = qd.p[(size_t)t];
    const auto& pc = qd.p_check[(size_t)t];
    auto& etaf = c.fam_eta_ij[(size_t)t];
    auto& xif = c.fam_xi_ij[(size_t)t];
    etaf.resize((size_t)(n * n));
    xif.resize((size_t)(n * n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        tensor<F> ve(4, 0, n), vx(4, 0, n);
        int ip = qd.g.iprime(i), jp = qd.g.iprime(j);
        const V& bi = qd.metric_b.at(i - 1, ip - 1);
        const V& cj = qd.metric_c.at(j - 1, jp - 1);
        for (int mm = 1; mm <= n; ++mm)
          for (int nn2 = 1; nn2 <= n; ++nn2)
            for (int vv = 1; vv <= n; ++vv)
              for (int ww = 1; ww <= n; ++ww) {
                long slot = (((long)(mm - 1) * n + (nn2 - 1)) * n + (vv - 1)) * n + (ww - 1);
                V acce(0), accx(0);
                for (int kk = 1; kk <= n; ++kk) {
                  const auto& pv = p.at((long)(mm - 1) * n + (nn2 - 1), (long)(ip - 1) * n + (kk - 1));
                  if (!F::is_zero(pv))
                    acce += pv * pc.at((long)(vv - 1) * n + (ww - 1), (long)(kk - 1) * n + (jp - 1));
                  for (int y = 1; y <= n; ++y) {
                    const auto& py = p.at((long)(mm - 1) * n + (nn2 - 1), (long)(y - 1) * n + (kk - 1));
                    if (F::is_zero(py)) continue;
                    for (int z = 1; z <= n; ++z) {
                      const auto& av = qd.r_acute.at((long)(y - 1) * n + (z - 1), (long)(i - 1) * n + (j - 1));
                      if (F::is_zero(av)) continue;
                      accx += py * pc.at((long)(vv - 1) * n + (ww - 1), (long)(kk - 1) * n + (z - 1)) * av;
                    }
                  }
                }
                ve.at(slot, 0) = bi * cj * acce;
                vx.at(slot, 0) = accx;
              }
        etaf[(size_t)((i - 1) * n + (j - 1))] = std::move(ve);
        xif[(size_t)((i - 1) * n + (j - 1))] = std::move(vx);
      }
  }

  // Second-step families; columns are labelled by (s,i,j,t).
  for (int t = 0; t < 2; ++t) {
    const auto& p = qd.p[(size_t)t];
    const auto& pc = qd.p_check[(size_t)t];
    tensor<F> xe(4, 4, n), xx(4, 4, n);
    for (int s = 1; s <= n; ++s)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int tt = 1; tt <= n; ++tt) {
            long col = (((long)(s - 1) * n + (i - 1)) * n + (j - 1)) * n + (tt - 1);
            int sp = qd.g.iprime(s), ip = qd.g.iprime(i);
            int jp = qd.g.iprime(j), tp = qd.g.iprime(tt);
            V wgt = qd.metric_b.at(s - 1, sp - 1) * qd.metric_b.at(i - 1, ip - 1) *
                    qd.metric_c.at(j - 1, jp - 1) * qd.metric_c.at(tt - 1, tp - 1);
            for (int mm = 1; mm <= n; ++mm)
              for (int nn2 = 1; nn2 <= n; ++nn2)
                for (int vv = 1; vv <= n; ++vv)
                  for (int ww = 1; ww <= n; ++ww) {
                    long slot = (((long)(mm - 1) * n + (nn2 - 1)) * n + (vv - 1)) * n + (ww - 1);
                    xe.at(slot, col) =
                        wgt * p.at((long)(mm - 1) * n + (nn2 - 1), (long)(sp - 1) * n + (ip - 1)) *
                        pc.at((long)(vv - 1) * n + (ww - 1), (long)(jp - 1) * n + (tp - 1));
                    V acc(0);
                    for (int y = 1; y <= n; ++y) {
                      const auto& pv = p.at((long)(mm - 1) * n + (nn2 - 1), (long)(s - 1) * n + (y - 1));
                      if (F::is_zero(pv)) continue;
                      for (int z = 1; z <= n; ++z) {
                        const auto& av =
                            qd.r_acute.at((long)(y - 1) * n + (z - 1), (long)(i - 1) * n + (j - 1));
                        if (F::is_zero(av)) continue;
                        acc += pv * pc.at((long)(vv - 1) * n + (ww - 1), (long)(z - 1) * n + (tt - 1)) * av;
                      }
                    }
                    xx.at(slot, col) = acc;
                  }
          }
    c.fam_eta_sijt[(size_t)t] = std::move(xe);
    c.fam_xi_sijt[(size_t)t] = std::move(xx);
  }
  return c;
}

}  // namespace qext

#endif
