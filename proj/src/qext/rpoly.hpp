#ifndef QEXT_RPOLY_HPP
#define QEXT_RPOLY_HPP

#include <tuple>
#include <vector>

#include "qext/errors.hpp"

namespace qext {

// Dense univariate polynomial over a field F in one indeterminate r.
// Degree of the zero polynomial is the sentinel -1.
template <class F>
struct rpoly {
  using value = typename F::value;
  std::vector<value> c;  // c[k] is the coefficient of r^k; trailing zeros trimmed

  static constexpr long kZeroDegree = -1;

  rpoly() = default;
  explicit rpoly(std::vector<value> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && F::is_zero(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long degree() const { return (long)c.size() - 1; }  // -1 for zero
  const value& lead() const { return c.back(); }
  value coeff(long k) const { return (k >= 0 && k < (long)c.size()) ? c[(size_t)k] : value(0); }
};

template <class F>
rpoly<F> operator+(const rpoly<F>& a, const rpoly<F>& b) {
  std::vector<typename F::value> c(std::max(a.c.size(), b.c.size()), typename F::value(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return rpoly<F>(std::move(c));
}

template <class F>
rpoly<F> operator-(const rpoly<F>& a, const rpoly<F>& b) {
  std::vector<typename F::value> c(std::max(a.c.size(), b.c.size()), typename F::value(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return rpoly<F>(std::move(c));
}

template <class F>
rpoly<F> operator*(const rpoly<F>& a, const rpoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return rpoly<F>();
  std::vector<typename F::value> c(a.c.size() + b.c.size() - 1, typename F::value(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (F::is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  }
  return rpoly<F>(std::move(c));
}

template <class F>
rpoly<F> scale(const rpoly<F>& a, const typename F::value& k) {
  std::vector<typename F::value> c(a.c);
  for (auto& x : c) x = x * k;
  return rpoly<F>(std::move(c));
}

template <class F>
bool operator==(const rpoly<F>& a, const rpoly<F>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!F::is_zero(a.c[i] - b.c[i])) return false;
  return true;
}

// Division with remainder over the coefficient field.
template <class F>
std::pair<rpoly<F>, rpoly<F>> divmod(const rpoly<F>& a, const rpoly<F>& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  rpoly<F> q, r = a;
  if (a.degree() >= b.degree()) q.c.assign((size_t)(a.degree() - b.degree() + 1), typename F::value(0));
  auto lb_inv = F::inv(b.lead());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    long k = r.degree() - b.degree();
    auto f = r.lead() * lb_inv;
    q.c[(size_t)k] = f;
    for (long i = 0; i <= b.degree(); ++i) r.c[(size_t)(i + k)] -= f * b.c[(size_t)i];
    r.trim();
  }
  q.trim();
  return {std::move(q), std::move(r)};
}

// Extended Euclidean algorithm: returns (g, a, b) with g = a*p1 + b*p2 and g
// monic (the gcd normalization). The Bezout identity is re-verified by exact
// multiplication on every call.
template <class F>
std::tuple<rpoly<F>, rpoly<F>, rpoly<F>> ext_gcd(const rpoly<F>& p1, const rpoly<F>& p2) {
  if (p1.is_zero() && p2.is_zero()) fail(errc::precondition_violated, "ext_gcd(0, 0)");
  rpoly<F> r0 = p1, r1 = p2;
  rpoly<F> s0({typename F::value(1)}), s1;
  rpoly<F> t0, t1({typename F::value(1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    rpoly<F> s2 = s0 - q * s1;
    rpoly<F> t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  auto l = F::inv(r0.lead());
  rpoly<F> g = scale(r0, l), a = scale(s0, l), b = scale(t0, l);
  if (!(g == a * p1 + b * p2)) fail(errc::internal_error, "ext_gcd bezout identity failed");
  return {std::move(g), std::move(a), std::move(b)};
}

}  // namespace qext

#endif
