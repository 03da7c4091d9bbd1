#ifndef QEXT_TENSOR_HPP
#define QEXT_TENSOR_HPP

#include <array>
#include <functional>
#include <vector>

#include "qext/errors.hpp"

namespace qext {

// Dense exact matrix whose row/column index sets are ordered products of
// N-dimensional legs.
//
// Multi-index convention, fixed for the whole engine: a tuple (i_1,...,i_k)
// with each i_j in 1..N encodes to sum (i_j - 1) * N^(k-j), i.e. big-endian
// with the first leg most significant. Rows run over the output legs,
// columns over the input legs, entries stored row-major.
template <class F>
class tensor {
 public:
  using value = typename F::value;

  tensor() = default;
  tensor(int legs_out, int legs_in, int dim)
      : legs_out_(legs_out), legs_in_(legs_in), dim_(dim),
        rows_(ipow(dim, legs_out)), cols_(ipow(dim, legs_in)),
        a_((size_t)rows_ * (size_t)cols_, value(0)) {}

  static tensor identity(int legs, int dim) {
    tensor t(legs, legs, dim);
    for (long i = 0; i < t.rows_; ++i) t.at(i, i) = value(1);
    return t;
  }

  int legs_out() const { return legs_out_; }
  int legs_in() const { return legs_in_; }
  int dim() const { return dim_; }
  long rows() const { return rows_; }
  long cols() const { return cols_; }

  value& at(long r, long c) { return a_[(size_t)r * cols_ + c]; }
  const value& at(long r, long c) const { return a_[(size_t)r * cols_ + c]; }

  static long ipow(int b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }

  // 1-based tuple <-> 0-based flat index.
  static long encode(const std::vector<int>& idx, int dim) {
    long r = 0;
    for (int i : idx) r = r * dim + (i - 1);
    return r;
  }
  static std::vector<int> decode(long flat, int legs, int dim) {
    std::vector<int> idx(legs);
    for (int j = legs - 1; j >= 0; --j) {
      idx[j] = (int)(flat % dim) + 1;
      flat /= dim;
    }
    return idx;
  }

  long nnz() const {
    long n = 0;
    for (const auto& v : a_)
      if (!F::is_zero(v)) ++n;
    return n;
  }

  bool operator==(const tensor& o) const {
    if (legs_out_ != o.legs_out_ || legs_in_ != o.legs_in_ || dim_ != o.dim_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!F::is_zero(a_[i] - o.a_[i])) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& v : a_)
      if (!F::is_zero(v)) return false;
    return true;
  }

  const std::vector<value>& data() const { return a_; }
  std::vector<value>& data() { return a_; }

 private:
  int legs_out_ = 0, legs_in_ = 0, dim_ = 0;
  long rows_ = 1, cols_ = 1;
  std::vector<value> a_;
};

template <class F>
void require_same_shape(const tensor<F>& a, const tensor<F>& b, const char* op) {
  if (a.legs_out() != b.legs_out() || a.legs_in() != b.legs_in() || a.dim() != b.dim())
    fail(errc::shape_mismatch, op);
}

template <class F>
tensor<F> operator+(const tensor<F>& a, const tensor<F>& b) {
  require_same_shape(a, b, "tensor add");
  tensor<F> c = a;
  for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

template <class F>
tensor<F> operator-(const tensor<F>& a, const tensor<F>& b) {
  require_same_shape(a, b, "tensor sub");
  tensor<F> c = a;
  for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

template <class F>
tensor<F> scale(const tensor<F>& a, const typename F::value& k) {
  tensor<F> c = a;
  for (auto& v : c.data()) v = v * k;
  return c;
}

// Matrix product; inner loop skips structural zeros, which matters because
// most operators here are sparse in a dense container.
template <class F>
tensor<F> compose(const tensor<F>& a, const tensor<F>& b) {
  if (a.legs_in() != b.legs_out() || a.dim() != b.dim())
    fail(errc::shape_mismatch, "compose: inner legs disagree");
  tensor<F> c(a.legs_out(), b.legs_in(), a.dim());
  for (long i = 0; i < a.rows(); ++i)
    for (long k = 0; k < a.cols(); ++k) {
      const auto& aik = a.at(i, k);
      if (F::is_zero(aik)) continue;
      for (long j = 0; j < b.cols(); ++j) {
        const auto& bkj = b.at(k, j);
        if (F::is_zero(bkj)) continue;
        c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

template <class F>
tensor<F> kron(const tensor<F>& a, const tensor<F>& b) {
  if (a.dim() != b.dim()) fail(errc::shape_mismatch, "kron: dims disagree");
  tensor<F> c(a.legs_out() + b.legs_out(), a.legs_in() + b.legs_in(), a.dim());
  for (long ra = 0; ra < a.rows(); ++ra)
    for (long ca = 0; ca < a.cols(); ++ca) {
      const auto& va = a.at(ra, ca);
      if (F::is_zero(va)) continue;
      for (long rb = 0; rb < b.rows(); ++rb)
        for (long cb = 0; cb < b.cols(); ++cb) {
          const auto& vb = b.at(rb, cb);
          if (F::is_zero(vb)) continue;
          c.at(ra * b.rows() + rb, ca * b.cols() + cb) = va * vb;
        }
    }
  return c;
}

// Identity on all legs outside [start, start + k - 1]; start is 1-based.
template <class F>
tensor<F> leg_embed(const tensor<F>& t, int start, int total) {
  if (t.legs_out() != t.legs_in()) fail(errc::shape_mismatch, "leg_embed: operator not square");
  int k = t.legs_out();
  if (start < 1 || start + k - 1 > total) fail(errc::shape_mismatch, "leg_embed: legs out of range");
  tensor<F> r = t;
  if (start > 1) r = kron(tensor<F>::identity(start - 1, t.dim()), r);
  if (start + k - 1 < total) r = kron(r, tensor<F>::identity(total - (start + k - 1), t.dim()));
  return r;
}

// Transpose (swap rows and columns).
template <class F>
tensor<F> transpose(const tensor<F>& t) {
  tensor<F> r(t.legs_in(), t.legs_out(), t.dim());
  for (long i = 0; i < t.rows(); ++i)
    for (long j = 0; j < t.cols(); ++j) r.at(j, i) = t.at(i, j);
  return r;
}

// Partial q-trace over the first leg: (tr1_q T)^b_t = D^s_a T^{ab}_{st}.
template <class F>
tensor<F> partial_qtrace(const tensor<F>& t, const tensor<F>& d) {
  if (t.legs_out() != 2 || t.legs_in() != 2 || d.legs_out() != 1 || d.legs_in() != 1 || t.dim() != d.dim())
    fail(errc::shape_mismatch, "partial_qtrace expects a 2-leg operator and a 1-leg twist");
  int n = t.dim();
  tensor<F> r(1, 1, n);
  for (int b = 1; b <= n; ++b)
    for (int tt = 1; tt <= n; ++tt) {
      typename F::value acc(0);
      for (int a = 1; a <= n; ++a)
        for (int s = 1; s <= n; ++s) {
          const auto& dv = d.at(s - 1, a - 1);
          if (F::is_zero(dv)) continue;
          const auto& tv = t.at((a - 1) * n + (b - 1), (s - 1) * n + (tt - 1));
          if (F::is_zero(tv)) continue;
          acc += dv * tv;
        }
      r.at(b - 1, tt - 1) = acc;
    }
  return r;
}

template <class F>
typename F::value trace(const tensor<F>& t) {
  if (t.rows() != t.cols()) fail(errc::shape_mismatch, "trace of non-square tensor");
  typename F::value acc(0);
  for (long i = 0; i < t.rows(); ++i) acc += t.at(i, i);
  return acc;
}

// The hat/check/acute transforms of 2-leg operators:
//   check(T)^{ab}_{st} = T^{ts}_{ba},  acute(T)^{ab}_{st} = T^{sa}_{tb}.
// grave_minus(T) = acute(T)^{-1} lives in elim.hpp (needs an inverse).
template <class F>
tensor<F> check_transform(const tensor<F>& t) {
  if (t.legs_out() != 2 || t.legs_in() != 2) fail(errc::shape_mismatch, "check transform needs 2 legs");
  int n = t.dim();
  tensor<F> r(2, 2, n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int s = 1; s <= n; ++s)
        for (int tt = 1; tt <= n; ++tt)
          r.at((a - 1) * n + (b - 1), (s - 1) * n + (tt - 1)) =
              t.at((tt - 1) * n + (s - 1), (b - 1) * n + (a - 1));
  return r;
}

template <class F>
tensor<F> acute_transform(const tensor<F>& t) {
  if (t.legs_out() != 2 || t.legs_in() != 2) fail(errc::shape_mismatch, "acute transform needs 2 legs");
  int n = t.dim();
  tensor<F> r(2, 2, n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int s = 1; s <= n; ++s)
        for (int tt = 1; tt <= n; ++tt)
          r.at((a - 1) * n + (b - 1), (s - 1) * n + (tt - 1)) =
              t.at((s - 1) * n + (a - 1), (tt - 1) * n + (b - 1));
  return r;
}

// Matrix-vector product for column vectors (legs_in == 0).
template <class F>
tensor<F> apply(const tensor<F>& m, const tensor<F>& v) {
  if (v.legs_in() != 0 || m.legs_in() != v.legs_out() || m.dim() != v.dim())
    fail(errc::shape_mismatch, "apply: operator/vector shapes disagree");
  tensor<F> r(m.legs_out(), 0, m.dim());
  for (long i = 0; i < m.rows(); ++i) {
    typename F::value acc(0);
    for (long k = 0; k < m.cols(); ++k) {
      const auto& mv = m.at(i, k);
      if (F::is_zero(mv)) continue;
      const auto& vv = v.at(k, 0);
      if (F::is_zero(vv)) continue;
      acc += mv * vv;
    }
    r.at(i, 0) = acc;
  }
  return r;
}

}  // namespace qext

#endif
