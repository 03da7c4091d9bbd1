#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qext/elim.hpp"
#include "qext/field.hpp"

#include <random>

using namespace qext;

namespace {

std::mt19937 rng(7);

template <class F>
tensor<F> random_tensor(const F& f, int lo, int li, int dim, int density_pct = 60) {
  std::uniform_int_distribution<int> coin(0, 99), val(-6, 6), ex(-3, 3);
  tensor<F> t(lo, li, dim);
  for (long i = 0; i < t.rows(); ++i)
    for (long j = 0; j < t.cols(); ++j)
      if (coin(rng) < density_pct) {
        if constexpr (std::is_same_v<F, symbolic_field>) {
          t.at(i, j) = ratfunc(laurent(mpz_class(val(rng)), ex(rng)));
        } else {
          t.at(i, j) = mpq_class(val(rng), 1 + std::abs(val(rng)) % 3);
          t.at(i, j).canonicalize();
        }
      }
  return t;
}

}  // namespace

TEST_CASE("identity, compose, kron shapes") {
  symbolic_field f;
  auto id = tensor<symbolic_field>::identity(1, 3);
  auto a = random_tensor(f, 1, 1, 3);
  CHECK(compose(id, a) == a);
  CHECK(compose(a, id) == a);
  auto k2 = kron(id, id);
  CHECK(k2 == tensor<symbolic_field>::identity(2, 3));
  CHECK_THROWS_AS(compose(a, random_tensor(f, 2, 1, 3)), error);
}

TEST_CASE("compose is associative") {
  symbolic_field f;
  for (int it = 0; it < 10; ++it) {
    auto a = random_tensor(f, 1, 1, 3), b = random_tensor(f, 1, 2, 3), c = random_tensor(f, 2, 1, 3);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("leg embedding: identity slots and disjoint commutation") {
  symbolic_field f;
  auto id = tensor<symbolic_field>::identity(1, 2);
  CHECK(leg_embed(id, 2, 4) == tensor<symbolic_field>::identity(4, 2));
  auto a = random_tensor(f, 1, 1, 2), b = random_tensor(f, 1, 1, 2);
  auto a1 = leg_embed(a, 1, 3), b3 = leg_embed(b, 3, 3);
  CHECK(compose(a1, b3) == compose(b3, a1));
  // entry law: (K_23)^{abc}_{stu} = delta_as K^{bc}_{tu}
  auto k = random_tensor(f, 2, 2, 2);
  auto k23 = leg_embed(k, 2, 3);
  int n = 2;
  for (int a2 = 0; a2 < n; ++a2)
    for (int b2 = 0; b2 < n; ++b2)
      for (int c2 = 0; c2 < n; ++c2)
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t)
            for (int u = 0; u < n; ++u) {
              auto lhs = k23.at(((long)a2 * n + b2) * n + c2, ((long)s * n + t) * n + u);
              auto rhs = a2 == s ? k.at((long)b2 * n + c2, (long)t * n + u) : ratfunc(0);
              CHECK(lhs == rhs);
            }
}

TEST_CASE("rank, kernel and transpose rank agree across strategies") {
  symbolic_field fs;
  numeric_field fn{mpq_class(2)};
  for (int it = 0; it < 12; ++it) {
    auto a = random_tensor(fn, 2, 2, 2, 40);
    // mirrored symbolic copy with the same rational entries
    tensor<symbolic_field> b(2, 2, 2);
    for (long i = 0; i < a.rows(); ++i)
      for (long j = 0; j < a.cols(); ++j) {
        mpq_class v = a.at(i, j);
        b.at(i, j) = ratfunc::fraction(laurent(v.get_num(), 0), laurent(v.get_den(), 0));
      }
    auto ra = rank_kernel(a);
    auto rb = rank_kernel(b);
    CHECK(ra.rank == rb.rank);
    CHECK(ra.rank == rank_of(transpose(a)));
    CHECK((long)(ra.rank + (int)ra.kernel.size()) == a.cols());
    for (const auto& v : ra.kernel) CHECK(apply(a, v).is_zero());
    for (const auto& v : rb.kernel) CHECK(apply(b, v).is_zero());
  }
}

TEST_CASE("inverse") {
  numeric_field fn{mpq_class(2)};
  for (int it = 0; it < 20; ++it) {
    auto a = random_tensor(fn, 1, 1, 4, 80);
    if (rank_of(a) < 4) continue;
    auto ai = inverse(a);
    CHECK(compose(a, ai) == tensor<numeric_field>::identity(1, 4));
  }
  tensor<numeric_field> sing(1, 1, 2);
  sing.at(0, 0) = 1;
  CHECK_THROWS_AS(inverse(sing), error);
}

TEST_CASE("transforms: check is an involution, acute of identity is singular for N >= 2") {
  symbolic_field f;
  auto id2 = tensor<symbolic_field>::identity(2, 3);
  CHECK(check_transform(id2) == id2);
  auto t = random_tensor(f, 2, 2, 3);
  CHECK(check_transform(check_transform(t)) == t);
  // acute(I)^{ab}_{st} = delta_{ab} delta_{st}: rank one blocks, singular
  auto ai = acute_transform(id2);
  CHECK(rank_of(ai) == 1);
  CHECK_THROWS_AS(grave_minus_transform(id2), error);
  // check is anti-multiplicative, so check(T)^{-1} = check(T^{-1})
  numeric_field fn{mpq_class(2)};
  for (int it = 0; it < 8; ++it) {
    auto a = random_tensor(fn, 2, 2, 2, 90);
    if (rank_of(a) < 4) continue;
    CHECK(check_transform(inverse(a)) == inverse(check_transform(a)));
  }
}

TEST_CASE("partial q-trace on explicit data") {
  symbolic_field f;
  // with D = I the q-trace is the plain partial trace
  auto d = tensor<symbolic_field>::identity(1, 2);
  auto t = random_tensor(f, 2, 2, 2);
  auto tr = partial_qtrace(t, d);
  for (int b = 0; b < 2; ++b)
    for (int u = 0; u < 2; ++u) {
      ratfunc acc;
      for (int a = 0; a < 2; ++a) acc += t.at((long)a * 2 + b, (long)a * 2 + u);
      CHECK(tr.at(b, u) == acc);
    }
}

TEST_CASE("span builder") {
  numeric_field fn{mpq_class(2)};
  span_builder<numeric_field> sp(4);
  tensor<numeric_field> v1(2, 0, 2), v2(2, 0, 2), v3(2, 0, 2);
  v1.at(0, 0) = 1;
  v1.at(1, 0) = 2;
  v2.at(1, 0) = 1;
  v3.at(0, 0) = 2;
  v3.at(1, 0) = 5;  // = 2*v1 + v2
  CHECK(sp.add(v1));
  CHECK(sp.add(v2));
  CHECK_FALSE(sp.add(v3));
  CHECK(sp.dim() == 2);
  CHECK(sp.contains(v3));
  tensor<numeric_field> w(2, 0, 2);
  w.at(3, 0) = 1;
  CHECK_FALSE(sp.contains(w));
}
