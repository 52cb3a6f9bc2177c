#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gorhom/matrix.hpp"

using namespace gorhom;

namespace {

template <class F>
Mat<F> from_rows(F f, std::vector<std::vector<long long>> rows) {
  long r = static_cast<long>(rows.size());
  long c = r ? static_cast<long>(rows[0].size()) : 0;
  Mat<F> m(f, r, c);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) m.at(i, j) = f.from_long(rows[i][j]);
  return m;
}

template <class F>
Mat<F> random_mat(F f, long r, long c, std::mt19937& g) {
  Mat<F> m(f, r, c);
  std::uniform_int_distribution<long long> d(-6, 6);
  for (auto& x : m.a) x = f.from_long(d(g));
  return m;
}

}  // namespace

TEST_CASE("all-ones matrix over F_2 has rank 1") {
  PrimeField f(2);
  auto m = from_rows(f, {{1, 1}, {1, 1}});
  auto e = rref(m);
  CHECK_EQ(e.rank, 1);
  REQUIRE_EQ(e.pivot_cols.size(), 1);
  CHECK_EQ(e.pivot_cols[0], 0);
  auto k = kernel_basis(m);
  REQUIRE_EQ(k.cols, 1);
  CHECK_EQ(k.at(0, 0), 1);
  CHECK_EQ(k.at(1, 0), 1);
  CHECK(m.mul(k).is_zero());
}

TEST_CASE("identity and zero matrices") {
  RationalField q;
  auto id = Mat<RationalField>::identity(q, 4);
  CHECK_EQ(rank_of(id), 4);
  CHECK_EQ(kernel_basis(id).cols, 0);
  Mat<RationalField> z(q, 3, 5);
  CHECK_EQ(rank_of(z), 0);
  auto k = kernel_basis(z);
  CHECK_EQ(k.cols, 5);
  CHECK(k == Mat<RationalField>::identity(q, 5));
}

TEST_CASE("hand-checked reduction over Q") {
  RationalField q;
  auto m = from_rows(q, {{1, 2}, {2, 4}});
  auto e = rref(m);
  CHECK_EQ(e.rank, 1);
  CHECK(q.eq(e.r.at(0, 1), q.from_long(2)));
  auto k = kernel_basis(m);
  REQUIRE_EQ(k.cols, 1);
  CHECK(q.eq(k.at(0, 0), q.from_long(-2)));
  CHECK(q.eq(k.at(1, 0), q.from_long(1)));

  // proportional fractional rows collapse exactly
  Mat<RationalField> h(q, 2, 2);
  h.at(0, 0) = q.from_string("1/2");
  h.at(0, 1) = q.from_string("1/3");
  h.at(1, 0) = q.from_string("1/4");
  h.at(1, 1) = q.from_string("1/6");
  CHECK_EQ(rank_of(h), 1);
}

TEST_CASE("rank is invariant under transpose") {
  std::mt19937 g(12345);
  PrimeField f(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_mat(f, 7, 5, g);
    CHECK_EQ(rank_of(m), rank_of(m.transposed()));
  }
}

TEST_CASE("rank plus nullity is the column count, and kernels are kernels") {
  std::mt19937 g(777);
  PrimeField f5(5);
  RationalField q;
  for (int trial = 0; trial < 15; ++trial) {
    auto m = random_mat(f5, 6, 9, g);
    auto k = kernel_basis(m);
    CHECK_EQ(rank_of(m) + k.cols, m.cols);
    CHECK(m.mul(k).is_zero());

    auto mq = random_mat(q, 5, 7, g);
    auto kq = kernel_basis(mq);
    CHECK_EQ(rank_of(mq) + kq.cols, mq.cols);
    CHECK(mq.mul(kq).is_zero());
  }
}

TEST_CASE("fast prime-field backends match the generic elimination") {
  std::mt19937 g(2024);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull, 101ull, 32749ull, 65537ull}) {
    PrimeField f(p);
    for (int trial = 0; trial < 8; ++trial) {
      auto m = random_mat(f, 9, 12, g);
      for (bool reduced : {true, false}) {
        auto ref = detail::rref_generic(m, reduced);
        Mat<PrimeField> copy = m;
        auto e = modp::echelon_inplace(copy.a.data(), copy.rows, copy.cols, p, reduced);
        CHECK_EQ(e.rank, ref.rank);
        CHECK(e.pivots == ref.pivot_cols);
        CHECK(copy == ref.r);
      }
    }
  }
}

TEST_CASE("span solver answers membership and coordinates") {
  RationalField q;
  auto b = from_rows(q, {{1, 0}, {1, 1}, {0, 1}});
  SpanSolver<RationalField> s(b);
  CHECK_EQ(s.rank, 2);
  CHECK(s.contains({q.from_long(1), q.from_long(2), q.from_long(1)}));
  CHECK_FALSE(s.contains({q.from_long(1), q.from_long(0), q.from_long(0)}));
  auto x = s.coords({q.from_long(2), q.from_long(5), q.from_long(3)});
  REQUIRE(x.has_value());
  CHECK(q.eq((*x)[0], q.from_long(2)));
  CHECK(q.eq((*x)[1], q.from_long(3)));

  std::mt19937 g(99);
  PrimeField f(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_mat(f, 7, 4, g);
    SpanSolver<PrimeField> sp(a);
    std::vector<PrimeField::Elem> v(4);
    std::uniform_int_distribution<long long> d(0, 4);
    for (auto& e : v) e = static_cast<PrimeField::Elem>(d(g));
    auto img = a.apply(v);
    auto c = sp.coords(img);
    REQUIRE(c.has_value());
    CHECK(a.apply(*c) == img);
  }
}

TEST_CASE("products, apply, hstack") {
  RationalField q;
  auto a = from_rows(q, {{1, 2}, {3, 4}});
  auto id = Mat<RationalField>::identity(q, 2);
  CHECK(a.mul(id) == a);
  CHECK(id.mul(a) == a);

  Mat<RationalField> h(q, 2, 2);
  h.at(0, 0) = q.from_string("1/2");
  h.at(0, 1) = q.from_string("1/3");
  h.at(1, 1) = q.from_long(2);
  auto v = h.apply({q.from_long(2), q.from_long(3)});
  CHECK(q.eq(v[0], q.from_long(2)));  // 1 + 1
  CHECK(q.eq(v[1], q.from_long(6)));

  auto st = a.hstack(id);
  CHECK_EQ(st.cols, 4);
  CHECK(q.eq(st.at(1, 0), q.from_long(3)));
  CHECK(q.eq(st.at(1, 3), q.from_long(1)));

  CHECK_THROWS_AS(a.mul(from_rows(q, {{1, 2}})), Error);
}
