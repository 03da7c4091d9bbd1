#ifndef QEXT_FIELD_HPP
#define QEXT_FIELD_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qext/ratfunc.hpp"

namespace qext {

// The two coefficient fields of the engine. Everything downstream is
// parameterized over one of these: Q(s) with q = s^2 (symbolic mode) or
// exact rationals at a fixed sample s0 (numeric mode). Field objects carry
// only what construction needs; values are plain immutable value types.

struct symbolic_field {
  using value = ratfunc;
  static constexpr bool fraction_free_elim = false;

  value integer(long c) const { return ratfunc(c); }
  value s_power(long k) const { return qext::s_power(k); }
  static bool is_zero(const value& v) { return v.is_zero(); }
  static value inv(const value& v) { return v.inv(); }
  static std::string str(const value& v) { return v.str(); }
  value parse(std::string_view t) const { return ratfunc::parse(t); }
  const char* mode_name() const { return "symbolic"; }
};

struct numeric_field {
  using value = mpq_class;
  static constexpr bool fraction_free_elim = true;

  mpq_class s;  // the sample, |s| not in {0, 1}

  numeric_field() : s(2) {}
  explicit numeric_field(mpq_class sample) : s(std::move(sample)) {
    if (s == 0 || s == 1 || s == -1) fail(errc::bad_sample, "sample s must satisfy |s| not in {0, 1}");
  }

  value integer(long c) const { return mpq_class(c); }
  value s_power(long k) const {
    mpq_class base = k >= 0 ? s : mpq_class(1) / s;
    long n = k >= 0 ? k : -k;
    mpq_class acc(1);
    while (n > 0) {
      if (n & 1) acc *= base;
      base *= base;
      n >>= 1;
    }
    acc.canonicalize();
    return acc;
  }
  static bool is_zero(const value& v) { return v == 0; }
  static value inv(const value& v) {
    if (v == 0) fail(errc::division_by_zero, "inverse of zero");
    return mpq_class(1) / v;
  }
  static std::string str(const value& v) { return v.get_str(); }
  value parse(std::string_view t) const {
    mpq_class r(std::string(t), 10);
    r.canonicalize();
    return r;
  }
  const char* mode_name() const { return "numeric"; }
};

// Spec-level evaluation of a symbolic scalar at a rational sample.
inline mpq_class evaluate(const ratfunc& a, const mpq_class& s0) { return a.eval(s0); }

}  // namespace qext

#endif
