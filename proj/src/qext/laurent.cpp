#include "qext/laurent.hpp"

#include <algorithm>
#include <cctype>

namespace qext {

laurent::laurent(mpz_class c, long exp) {
  if (c != 0) {
    lo_ = exp;
    coeff_.assign(1, std::move(c));
  }
}

laurent laurent::from_raw(long lo, std::vector<mpz_class> c) {
  size_t b = 0, e = c.size();
  while (b < e && c[b] == 0) ++b;
  while (e > b && c[e - 1] == 0) --e;
  laurent r;
  if (b < e) {
    r.lo_ = lo + (long)b;
    r.coeff_.assign(std::make_move_iterator(c.begin() + b), std::make_move_iterator(c.begin() + e));
  }
  return r;
}

long laurent::n_terms() const {
  long n = 0;
  for (const auto& c : coeff_)
    if (c != 0) ++n;
  return n;
}

mpz_class laurent::at(long exp) const {
  if (is_zero() || exp < lo_ || exp > hi()) return 0;
  return coeff_[exp - lo_];
}

laurent laurent::operator-() const {
  laurent r(*this);
  for (auto& c : r.coeff_) c = -c;
  return r;
}

laurent& laurent::operator+=(const laurent& o) { return *this = *this + o; }
laurent& laurent::operator-=(const laurent& o) { return *this = *this - o; }

laurent operator+(const laurent& a, const laurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.lo_, b.lo_);
  long hi = std::max(a.hi(), b.hi());
  std::vector<mpz_class> c((size_t)(hi - lo + 1));
  for (size_t i = 0; i < a.coeff_.size(); ++i) c[a.lo_ - lo + i] += a.coeff_[i];
  for (size_t i = 0; i < b.coeff_.size(); ++i) c[b.lo_ - lo + i] += b.coeff_[i];
  return laurent::from_raw(lo, std::move(c));
}

laurent operator-(const laurent& a, const laurent& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  long lo = std::min(a.lo_, b.lo_);
  long hi = std::max(a.hi(), b.hi());
  std::vector<mpz_class> c((size_t)(hi - lo + 1));
  for (size_t i = 0; i < a.coeff_.size(); ++i) c[a.lo_ - lo + i] += a.coeff_[i];
  for (size_t i = 0; i < b.coeff_.size(); ++i) c[b.lo_ - lo + i] -= b.coeff_[i];
  return laurent::from_raw(lo, std::move(c));
}

laurent operator*(const laurent& a, const laurent& b) {
  if (a.is_zero() || b.is_zero()) return laurent();
  std::vector<mpz_class> c(a.coeff_.size() + b.coeff_.size() - 1);
  for (size_t i = 0; i < a.coeff_.size(); ++i) {
    if (a.coeff_[i] == 0) continue;
    for (size_t j = 0; j < b.coeff_.size(); ++j) {
      if (b.coeff_[j] == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), a.coeff_[i].get_mpz_t(), b.coeff_[j].get_mpz_t());
    }
  }
  return laurent::from_raw(a.lo_ + b.lo_, std::move(c));
}

laurent laurent::shifted(long k) const {
  laurent r(*this);
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

laurent laurent::poly_part() const { return shifted(is_zero() ? 0 : -lo_); }

mpz_class laurent::content() const {
  mpz_class g = 0;
  for (const auto& c : coeff_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

// Pseudo-remainder of a by b in Z[s]; requires b != 0, deg a >= deg b, both lo == 0 form not required.
laurent prem(laurent a, const laurent& b) {
  const mpz_class& lb = b.lead();
  while (!a.is_zero() && a.hi() >= b.hi()) {
    // a <- lb*a - lead(a)*s^(da-db)*b
    laurent t = b.shifted(a.hi() - b.hi());
    mpz_class la = a.lead();
    laurent scaled_a;
    {
      std::vector<mpz_class> c(a.coeffs());
      for (auto& x : c) x *= lb;
      scaled_a = laurent::from_raw(a.lo(), std::move(c));
    }
    laurent scaled_t;
    {
      std::vector<mpz_class> c(t.coeffs());
      for (auto& x : c) x *= la;
      scaled_t = laurent::from_raw(t.lo(), std::move(c));
    }
    a = scaled_a - scaled_t;
  }
  return a;
}

laurent primitive(const laurent& p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  if (p.lead() < 0) c = -c;
  std::vector<mpz_class> v(p.coeffs());
  for (auto& x : v) x /= c;
  return laurent::from_raw(0, std::move(v));
}

}  // namespace

laurent gcd(const laurent& a, const laurent& b) {
  if (a.is_zero() && b.is_zero()) return laurent();
  mpz_class cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  if (a.is_zero() || b.is_zero()) {
    const laurent& p = a.is_zero() ? b : a;
    laurent g = primitive(p);
    std::vector<mpz_class> v(g.coeffs());
    for (auto& x : v) x *= cont;
    return laurent::from_raw(0, std::move(v));
  }
  // Primitive polynomial remainder sequence on the s^lo-stripped parts.
  laurent r0 = primitive(a.poly_part());
  laurent r1 = primitive(b.poly_part());
  if (r0.hi() < r1.hi()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    laurent r2 = prem(r0, r1);
    r0 = r1;
    r1 = primitive(r2.poly_part());
  }
  std::vector<mpz_class> v(r0.coeffs());
  for (auto& x : v) x *= cont;
  return laurent::from_raw(0, std::move(v));
}

bool try_div_exact(const laurent& a, const laurent& b, laurent& quot) {
  if (b.is_zero()) fail(errc::division_by_zero, "laurent division by zero");
  if (a.is_zero()) {
    quot = laurent();
    return true;
  }
  long qlo = a.lo() - b.lo();
  laurent rem = a.poly_part();
  const laurent bp = b.poly_part();
  long dq = rem.hi() - bp.hi();
  if (dq < 0) return false;
  std::vector<mpz_class> q((size_t)dq + 1);
  while (!rem.is_zero() && rem.hi() >= bp.hi()) {
    mpz_class c;
    mpz_class r;
    mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem.lead().get_mpz_t(), bp.lead().get_mpz_t());
    if (r != 0) return false;
    long k = rem.hi() - bp.hi();
    q[(size_t)k] = c;
    rem = rem - (bp * laurent(c, k));
  }
  if (!rem.is_zero()) return false;
  quot = laurent::from_raw(qlo, std::move(q));
  return true;
}

mpq_class eval(const laurent& p, const mpq_class& s0) {
  if (s0 == 0) fail(errc::bad_sample, "evaluation at s = 0");
  if (p.is_zero()) return mpq_class(0);
  // Horner on the polynomial part, then the s^lo prefactor.
  mpq_class acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * s0 + mpq_class(*it);
  long e = p.lo();
  mpq_class base = e >= 0 ? s0 : mpq_class(1) / s0;
  for (long i = 0, n = e >= 0 ? e : -e; i < n; ++i) acc *= base;
  return acc;
}

std::string to_string(const laurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long e = p.hi(); e >= p.lo(); --e) {
    mpz_class c = p.at(e);
    if (c == 0) continue;
    bool first = out.empty();
    if (c < 0) {
      out += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      out += " + ";
    }
    if (c != 1 || e == 0) out += c.get_str();
    if (e != 0) {
      out += "s";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

void skip_ws(std::string_view& t) {
  while (!t.empty() && std::isspace((unsigned char)t.front())) t.remove_prefix(1);
}

bool parse_int(std::string_view& t, mpz_class& out) {
  skip_ws(t);
  size_t n = 0;
  std::string digits;
  if (n < t.size() && (t[n] == '+' || t[n] == '-')) {
    digits += t[n];
    ++n;
  }
  size_t d0 = n;
  while (n < t.size() && std::isdigit((unsigned char)t[n])) {
    digits += t[n];
    ++n;
  }
  if (n == d0) return false;
  out = mpz_class(digits);
  t.remove_prefix(n);
  return true;
}

}  // namespace

laurent parse_laurent(std::string_view text) {
  skip_ws(text);
  laurent acc;
  bool any = false;
  while (true) {
    skip_ws(text);
    if (text.empty()) break;
    int sign = 1;
    if (text.front() == '+' || text.front() == '-') {
      sign = text.front() == '-' ? -1 : 1;
      text.remove_prefix(1);
      skip_ws(text);
    } else if (any) {
      fail(errc::io_error, "malformed laurent term list");
    }
    mpz_class coef = 1;
    bool have_coef = parse_int(text, coef);
    skip_ws(text);
    long exp = 0;
    if (!text.empty() && text.front() == 's') {
      text.remove_prefix(1);
      exp = 1;
      skip_ws(text);
      if (!text.empty() && text.front() == '^') {
        text.remove_prefix(1);
        mpz_class e;
        if (!parse_int(text, e) || !e.fits_slong_p()) fail(errc::io_error, "malformed exponent");
        exp = e.get_si();
      }
    } else if (!have_coef) {
      fail(errc::io_error, "malformed laurent term");
    }
    if (sign < 0) coef = -coef;
    acc += laurent(coef, exp);
    any = true;
  }
  if (!any) fail(errc::io_error, "empty laurent literal");
  return acc;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::pole_at_sample: return "PoleAtSample";
    case errc::bad_sample: return "BadSample";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::degree_too_high: return "DegreeTooHigh";
    case errc::odd_symplectic: return "OddSymplectic";
    case errc::n_too_small: return "NTooSmall";
    case errc::certification_failed: return "CertificationFailed";
    case errc::degenerate_eigenvalues: return "DegenerateEigenvalues";
    case errc::identity_violated: return "IdentityViolated";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::no_convergence: return "NoConvergence";
    case errc::config_error: return "ConfigError";
    case errc::io_error: return "IoError";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace qext
