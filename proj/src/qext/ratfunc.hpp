#ifndef QEXT_RATFUNC_HPP
#define QEXT_RATFUNC_HPP

#include <string>
#include <string_view>

#include "qext/laurent.hpp"

namespace qext {

// Reduced fraction of integer Laurent polynomials in s.
// Canonical form: gcd(num, den) is a unit, the denominator is an ordinary
// polynomial (lowest exponent 0, s powers shifted into the numerator) with
// positive leading coefficient, and zero is 0/1.
class ratfunc {
 public:
  ratfunc() : den_(1) {}
  ratfunc(long c) : num_(c), den_(1) {}
  explicit ratfunc(laurent p) : num_(std::move(p)), den_(1) {}
  static ratfunc fraction(laurent num, laurent den);

  const laurent& num() const { return num_; }
  const laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  ratfunc operator-() const;
  friend ratfunc operator+(const ratfunc& a, const ratfunc& b);
  friend ratfunc operator-(const ratfunc& a, const ratfunc& b);
  friend ratfunc operator*(const ratfunc& a, const ratfunc& b);
  friend ratfunc operator/(const ratfunc& a, const ratfunc& b);
  ratfunc& operator+=(const ratfunc& o) { return *this = *this + o; }
  ratfunc& operator-=(const ratfunc& o) { return *this = *this - o; }
  ratfunc& operator*=(const ratfunc& o) { return *this = *this * o; }
  ratfunc& operator/=(const ratfunc& o) { return *this = *this / o; }
  bool operator==(const ratfunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const ratfunc& o) const { return !(*this == o); }

  ratfunc inv() const;
  ratfunc pow(long k) const;

  // Exact rational value at s = s0; throws PoleAtSample / BadSample.
  mpq_class eval(const mpq_class& s0) const;

  std::string str() const;  // "num / den" with explicit integer exponents
  static ratfunc parse(std::string_view text);

 private:
  laurent num_, den_;
  void reduce();
};

inline ratfunc s_power(long k) { return ratfunc(laurent::monomial(1, k)); }

}  // namespace qext

#endif
