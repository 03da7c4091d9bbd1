#ifndef QEXT_ELIM_HPP
#define QEXT_ELIM_HPP

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "qext/tensor.hpp"

namespace qext {

// Exact row reduction over the coefficient field. The numeric field goes
// through a fraction-free (Bareiss) forward pass on integer-scaled rows;
// the symbolic field uses gcd-normalized fraction arithmetic with pivot
// rows chosen by fewest nonzeros to limit fill-in.

template <class F>
struct rank_kernel_result {
  int rank = 0;
  std::vector<tensor<F>> kernel;  // vectors with legs_in == 0, legs_out == legs_in(T)
};

namespace detail {

template <class F>
long count_nonzeros(const std::vector<typename F::value>& row) {
  long n = 0;
  for (const auto& v : row)
    if (!F::is_zero(v)) ++n;
  return n;
}

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<long> rref(std::vector<std::vector<typename F::value>>& m, long cols) {
  std::vector<long> pivots;
  size_t row = 0;
  for (long col = 0; col < cols && row < m.size(); ++col) {
    // pick the sparsest candidate row with a nonzero in this column
    std::optional<size_t> best;
    long best_nnz = 0;
    for (size_t i = row; i < m.size(); ++i) {
      if (F::is_zero(m[i][col])) continue;
      long nnz = count_nonzeros<F>(m[i]);
      if (!best || nnz < best_nnz) {
        best = i;
        best_nnz = nnz;
      }
    }
    if (!best) continue;
    std::swap(m[row], m[*best]);
    auto inv = F::inv(m[row][col]);
    for (long j = col; j < cols; ++j)
      if (!F::is_zero(m[row][j])) m[row][j] = m[row][j] * inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || F::is_zero(m[i][col])) continue;
      auto f = m[i][col];
      for (long j = col; j < cols; ++j)
        if (!F::is_zero(m[row][j])) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline void scale_row_to_integers(const std::vector<mpq_class>& in, std::vector<mpz_class>& out) {
  mpz_class l = 1;
  for (const auto& v : in) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  out.resize(in.size());
  for (size_t j = 0; j < in.size(); ++j) {
    mpz_class t = l / in[j].get_den();
    out[j] = in[j].get_num() * t;
  }
}

// Fraction-free forward elimination; returns pivot columns of the echelon.
inline std::vector<long> bareiss_echelon(std::vector<std::vector<mpz_class>>& m, long cols) {
  std::vector<long> pivots;
  size_t row = 0;
  mpz_class prev = 1;
  for (long col = 0; col < cols && row < m.size(); ++col) {
    std::optional<size_t> pick;
    for (size_t i = row; i < m.size(); ++i)
      if (m[i][col] != 0) {
        pick = i;
        break;
      }
    if (!pick) continue;
    std::swap(m[row], m[*pick]);
    const mpz_class p = m[row][col];
    for (size_t i = row + 1; i < m.size(); ++i) {
      for (long j = col + 1; j < cols; ++j) {
        mpz_class t = m[i][j] * p - m[i][col] * m[row][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = p;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class F>
rank_kernel_result<F> rank_kernel(const tensor<F>& t) {
  const long rows = t.rows(), cols = t.cols();
  rank_kernel_result<F> res;
  std::vector<long> pivots;

  auto make_kernel_vec = [&](auto&& fill) {
    tensor<F> v(t.legs_in(), 0, t.dim());
    fill(v);
    res.kernel.push_back(std::move(v));
  };

  if constexpr (F::fraction_free_elim) {
    std::vector<std::vector<mpz_class>> m((size_t)rows);
    for (long i = 0; i < rows; ++i) {
      std::vector<mpq_class> r((size_t)cols);
      for (long j = 0; j < cols; ++j) r[(size_t)j] = t.at(i, j);
      detail::scale_row_to_integers(r, m[(size_t)i]);
    }
    pivots = detail::bareiss_echelon(m, cols);
    res.rank = (int)pivots.size();
    std::vector<bool> is_pivot((size_t)cols, false);
    for (long p : pivots) is_pivot[(size_t)p] = true;
    for (long f = 0; f < cols; ++f) {
      if (is_pivot[(size_t)f]) continue;
      std::vector<mpq_class> v((size_t)cols, mpq_class(0));
      v[(size_t)f] = 1;
      for (long i = (long)pivots.size() - 1; i >= 0; --i) {
        long p = pivots[(size_t)i];
        mpq_class acc(0);
        for (long j = p + 1; j < cols; ++j)
          if (m[(size_t)i][(size_t)j] != 0 && v[(size_t)j] != 0) acc += mpq_class(m[(size_t)i][(size_t)j]) * v[(size_t)j];
        v[(size_t)p] = -acc / mpq_class(m[(size_t)i][(size_t)p]);
        v[(size_t)p].canonicalize();
      }
      make_kernel_vec([&](tensor<F>& kv) {
        for (long j = 0; j < cols; ++j) kv.at(j, 0) = v[(size_t)j];
      });
    }
  } else {
    std::vector<std::vector<typename F::value>> m((size_t)rows);
    for (long i = 0; i < rows; ++i) {
      m[(size_t)i].resize((size_t)cols);
      for (long j = 0; j < cols; ++j) m[(size_t)i][(size_t)j] = t.at(i, j);
    }
    pivots = detail::rref<F>(m, cols);
    res.rank = (int)pivots.size();
    std::vector<bool> is_pivot((size_t)cols, false);
    for (long p : pivots) is_pivot[(size_t)p] = true;
    for (long f = 0; f < cols; ++f) {
      if (is_pivot[(size_t)f]) continue;
      make_kernel_vec([&](tensor<F>& kv) {
        kv.at(f, 0) = typename F::value(1);
        for (size_t i = 0; i < pivots.size(); ++i) kv.at(pivots[i], 0) = -m[i][(size_t)f];
      });
    }
  }
  return res;
}

template <class F>
int rank_of(const tensor<F>& t) {
  if constexpr (F::fraction_free_elim) {
    std::vector<std::vector<mpz_class>> m((size_t)t.rows());
    for (long i = 0; i < t.rows(); ++i) {
      std::vector<mpq_class> r((size_t)t.cols());
      for (long j = 0; j < t.cols(); ++j) r[(size_t)j] = t.at(i, j);
      detail::scale_row_to_integers(r, m[(size_t)i]);
    }
    return (int)detail::bareiss_echelon(m, t.cols()).size();
  } else {
    std::vector<std::vector<typename F::value>> m((size_t)t.rows());
    for (long i = 0; i < t.rows(); ++i) {
      m[(size_t)i].resize((size_t)t.cols());
      for (long j = 0; j < t.cols(); ++j) m[(size_t)i][(size_t)j] = t.at(i, j);
    }
    return (int)detail::rref<F>(m, t.cols()).size();
  }
}

// Gauss-Jordan inverse; throws SingularMatrix.
template <class F>
tensor<F> inverse(const tensor<F>& t) {
  if (t.rows() != t.cols() || t.legs_out() != t.legs_in())
    fail(errc::shape_mismatch, "inverse of non-square tensor");
  const long n = t.rows();
  std::vector<std::vector<typename F::value>> m((size_t)n);
  for (long i = 0; i < n; ++i) {
    m[(size_t)i].assign((size_t)(2 * n), typename F::value(0));
    for (long j = 0; j < n; ++j) m[(size_t)i][(size_t)j] = t.at(i, j);
    m[(size_t)i][(size_t)(n + i)] = typename F::value(1);
  }
  auto pivots = detail::rref<F>(m, 2 * n);
  if ((long)pivots.size() < n || pivots[(size_t)(n - 1)] != n - 1)
    fail(errc::singular_matrix, "tensor is not invertible");
  tensor<F> r(t.legs_out(), t.legs_in(), t.dim());
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) r.at(i, j) = m[(size_t)i][(size_t)(n + j)];
  return r;
}

// grave_minus(T) = acute(T)^{-1}.
template <class F>
tensor<F> grave_minus_transform(const tensor<F>& t) {
  return inverse(acute_transform(t));
}

// Incremental exact span of row vectors, kept in reduced echelon form.
// Supports saturation loops (orbit spans) and dimension/containment queries.
template <class F>
class span_builder {
 public:
  explicit span_builder(long ncols) : ncols_(ncols) {}

  // Returns true if v was outside the span (dimension grew).
  bool add(const tensor<F>& v) {
    auto row = reduce_copy(v);
    long piv = first_nonzero(row);
    if (piv < 0) return false;
    auto inv = F::inv(row[(size_t)piv]);
    for (long j = piv; j < ncols_; ++j)
      if (!F::is_zero(row[(size_t)j])) row[(size_t)j] = row[(size_t)j] * inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      auto& r = rows_[i];
      if (F::is_zero(r[(size_t)piv])) continue;
      auto f = r[(size_t)piv];
      for (long j = piv; j < ncols_; ++j)
        if (!F::is_zero(row[(size_t)j])) r[(size_t)j] -= f * row[(size_t)j];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
  }

  bool contains(const tensor<F>& v) const {
    auto row = reduce_copy(v);
    return first_nonzero(row) < 0;
  }

  int dim() const { return (int)rows_.size(); }
  long ncols() const { return ncols_; }

 private:
  std::vector<typename F::value> reduce_copy(const tensor<F>& v) const {
    if (v.legs_in() != 0 || v.rows() != ncols_) fail(errc::shape_mismatch, "span: vector length mismatch");
    std::vector<typename F::value> row((size_t)ncols_);
    for (long j = 0; j < ncols_; ++j) row[(size_t)j] = v.at(j, 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
      auto f = row[(size_t)pivots_[i]];
      if (F::is_zero(f)) continue;
      for (long j = pivots_[i]; j < ncols_; ++j)
        if (!F::is_zero(rows_[i][(size_t)j])) row[(size_t)j] -= f * rows_[i][(size_t)j];
    }
    return row;
  }

  long first_nonzero(const std::vector<typename F::value>& row) const {
    for (long j = 0; j < ncols_; ++j)
      if (!F::is_zero(row[(size_t)j])) return j;
    return -1;
  }

  long ncols_;
  std::vector<std::vector<typename F::value>> rows_;
  std::vector<long> pivots_;
};

}  // namespace qext

#endif
