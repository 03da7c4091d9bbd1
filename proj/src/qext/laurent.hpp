#ifndef QEXT_LAURENT_HPP
#define QEXT_LAURENT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "qext/errors.hpp"

namespace qext {

// Integer-coefficient Laurent polynomial in one variable s.
// Invariant: coeff_ is empty (zero) or has nonzero first and last entries;
// coeff_[k] is the coefficient of s^(lo_+k).
class laurent {
 public:
  laurent() = default;
  laurent(long c) { if (c != 0) { lo_ = 0; coeff_.assign(1, mpz_class(c)); } }
  laurent(mpz_class c, long exp);

  static laurent monomial(long c, long exp) { return laurent(mpz_class(c), exp); }

  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const { return lo_ == 0 && coeff_.size() == 1 && coeff_[0] == 1; }
  long lo() const { return lo_; }                                  // valid iff nonzero
  long hi() const { return lo_ + (long)coeff_.size() - 1; }        // valid iff nonzero
  long n_terms() const;
  const std::vector<mpz_class>& coeffs() const { return coeff_; }
  mpz_class at(long exp) const;
  const mpz_class& lead() const { return coeff_.back(); }          // valid iff nonzero

  laurent operator-() const;
  laurent& operator+=(const laurent& o);
  laurent& operator-=(const laurent& o);
  friend laurent operator+(const laurent& a, const laurent& b);
  friend laurent operator-(const laurent& a, const laurent& b);
  friend laurent operator*(const laurent& a, const laurent& b);
  bool operator==(const laurent& o) const { return lo_ == o.lo_ && coeff_ == o.coeff_; }
  bool operator!=(const laurent& o) const { return !(*this == o); }

  laurent shifted(long k) const;          // multiply by s^k
  laurent poly_part() const;              // shifted so that lo == 0
  mpz_class content() const;              // gcd of coefficients, >= 0 (0 for zero)

  // Builder used by arithmetic: assumes entries may carry zero ends; trims.
  static laurent from_raw(long lo, std::vector<mpz_class> c);

 private:
  long lo_ = 0;
  std::vector<mpz_class> coeff_;
};

// gcd in Z[s] up to units of the Laurent ring: result has lo == 0, positive
// leading coefficient, and includes the content gcd. gcd(0,0) = 0.
laurent gcd(const laurent& a, const laurent& b);

// Exact division a / b in the Laurent ring (s powers are units). Returns false
// if b does not divide a over the integers.
bool try_div_exact(const laurent& a, const laurent& b, laurent& quot);

// Exact value at a rational point s0 != 0.
mpq_class eval(const laurent& p, const mpq_class& s0);

// Term list like "2s^4 - s^-1 + 3"; "0" for zero.
std::string to_string(const laurent& p);
laurent parse_laurent(std::string_view text);

}  // namespace qext

#endif
