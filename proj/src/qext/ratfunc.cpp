#include "qext/ratfunc.hpp"

namespace qext {

void ratfunc::reduce() {
  if (den_.is_zero()) fail(errc::division_by_zero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = laurent(1);
    return;
  }
  laurent g = gcd(num_, den_);
  if (!g.is_one()) {
    laurent qn, qd;
    if (!try_div_exact(num_, g, qn) || !try_div_exact(den_, g, qd))
      fail(errc::internal_error, "gcd does not divide");
    num_ = std::move(qn);
    den_ = std::move(qd);
  }
  // Shift all s powers into the numerator and fix the denominator sign.
  num_ = num_.shifted(-den_.lo());
  den_ = den_.poly_part();
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

ratfunc ratfunc::fraction(laurent num, laurent den) {
  ratfunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.reduce();
  return r;
}

ratfunc ratfunc::operator-() const {
  ratfunc r(*this);
  r.num_ = -r.num_;
  return r;
}

ratfunc operator+(const ratfunc& a, const ratfunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return ratfunc(a.num_ + b.num_);
  laurent g = gcd(a.den_, b.den_);
  laurent da, db;
  if (!try_div_exact(a.den_, g, da) || !try_div_exact(b.den_, g, db))
    fail(errc::internal_error, "gcd does not divide");
  return ratfunc::fraction(a.num_ * db + b.num_ * da, a.den_ * db);
}

ratfunc operator-(const ratfunc& a, const ratfunc& b) { return a + (-b); }

ratfunc operator*(const ratfunc& a, const ratfunc& b) {
  if (a.is_zero() || b.is_zero()) return ratfunc();
  if (a.den_.is_one() && b.den_.is_one()) return ratfunc(a.num_ * b.num_);
  // Cross-reduce before multiplying to keep intermediates small.
  laurent g1 = gcd(a.num_, b.den_);
  laurent g2 = gcd(b.num_, a.den_);
  laurent n1 = a.num_, d2 = b.den_, n2 = b.num_, d1 = a.den_;
  laurent t;
  if (!g1.is_one()) {
    try_div_exact(n1, g1, t); n1 = t;
    try_div_exact(d2, g1, t); d2 = t;
  }
  if (!g2.is_one()) {
    try_div_exact(n2, g2, t); n2 = t;
    try_div_exact(d1, g2, t); d1 = t;
  }
  return ratfunc::fraction(n1 * n2, d1 * d2);
}

ratfunc operator/(const ratfunc& a, const ratfunc& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "division by zero rational function");
  return a * b.inv();
}

ratfunc ratfunc::inv() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
  return ratfunc::fraction(den_, num_);
}

ratfunc ratfunc::pow(long k) const {
  if (k == 0) return ratfunc(1);
  ratfunc base = k > 0 ? *this : inv();
  long n = k > 0 ? k : -k;
  ratfunc acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base = n > 1 ? base * base : base;
    n >>= 1;
  }
  return acc;
}

mpq_class ratfunc::eval(const mpq_class& s0) const {
  if (s0 == 0 || s0 == 1 || s0 == -1) fail(errc::bad_sample, "sample s must satisfy |s| not in {0, 1}");
  mpq_class d = qext::eval(den_, s0);
  if (d == 0) fail(errc::pole_at_sample, "denominator vanishes at the sample");
  mpq_class n = qext::eval(num_, s0);
  mpq_class r = n / d;
  r.canonicalize();
  return r;
}

std::string ratfunc::str() const { return to_string(num_) + " / " + to_string(den_); }

ratfunc ratfunc::parse(std::string_view text) {
  size_t pos = text.find('/');
  if (pos == std::string_view::npos) return ratfunc(parse_laurent(text));
  laurent n = parse_laurent(text.substr(0, pos));
  laurent d = parse_laurent(text.substr(pos + 1));
  return ratfunc::fraction(std::move(n), std::move(d));
}

}  // namespace qext
