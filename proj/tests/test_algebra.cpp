#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gorhom/algebra.hpp"

using namespace gorhom;

namespace {

const std::vector<std::string> V5 = {"x1", "x2", "x3", "x4", "x5"};
const std::vector<std::string> REL_A = {
    "a*x1*x3+x2*x3", "x1*x4+x2*x4", "x3^2+a*x1*x5-x2*x5", "x4^2+x1*x5-x2*x5",
    "x1^2", "x2^2", "x3*x4", "x3*x5", "x4*x5", "x5^2"};

template <class F>
std::vector<Poly<F>> parse_all(PolyParser<F>& P, const std::vector<std::string>& ss) {
  std::vector<Poly<F>> out;
  for (const auto& s : ss) out.push_back(P.parse(s));
  return out;
}

template <class F>
GradedAlgebra<F> make_A(F fld, typename F::Elem alpha) {
  PolyParser<F> P(fld, V5);
  P.scalars["a"] = alpha;
  return build_algebra(fld, V5, parse_all(P, REL_A), 10);
}

template <class F>
GradedAlgebra<F> make_B(F fld, typename F::Elem alpha) {
  PolyParser<F> P(fld, V5);
  P.scalars["a"] = alpha;
  auto rels = relations_mod_var(fld, parse_all(P, REL_A), 4);
  return build_algebra(fld, {"x1", "x2", "x3", "x4"}, rels, 10);
}

Mono mono5(std::initializer_list<int> e) { return Mono(e); }

}  // namespace

TEST_CASE("the deformed Gorenstein quotient over Q") {
  RationalField q;
  auto A = make_A(q, q.from_long(2));
  CHECK_EQ(A.hilbert(), (std::vector<long>{1, 5, 5, 1}));
  CHECK_EQ(A.total_dim(), 12);
  CHECK_EQ(A.top, 3);
  CHECK_EQ(A.socle_dims(), (std::vector<long>{0, 0, 0, 1}));
  CHECK(A.is_gorenstein());
}

TEST_CASE("the 12-element monomial basis is accepted") {
  RationalField q;
  auto A = make_A(q, q.from_long(2));
  std::vector<Mono> expected = {
      mono5({0, 0, 0, 0, 0}),
      mono5({1, 0, 0, 0, 0}), mono5({0, 1, 0, 0, 0}), mono5({0, 0, 1, 0, 0}),
      mono5({0, 0, 0, 1, 0}), mono5({0, 0, 0, 0, 1}),
      mono5({1, 1, 0, 0, 0}), mono5({1, 0, 1, 0, 0}), mono5({1, 0, 0, 1, 0}),
      mono5({1, 0, 0, 0, 1}), mono5({0, 1, 0, 0, 1}),
      mono5({1, 1, 0, 0, 1})};
  CHECK(A.check_basis(expected));
  CHECK_FALSE(A.check_basis({mono5({0, 0, 0, 0, 0}), mono5({1, 0, 0, 0, 0})}));
  // swap one basis monomial for a dependent one: x2*x3 = -2*x1*x3 is dependent on x1*x3
  auto bad = expected;
  bad[6] = mono5({0, 1, 1, 0, 0});
  CHECK_FALSE(A.check_basis(bad));
}

TEST_CASE("the quotient by the last variable") {
  RationalField q;
  auto B = make_B(q, q.from_long(2));
  CHECK_EQ(B.hilbert(), (std::vector<long>{1, 4, 3}));
  CHECK_EQ(B.total_dim(), 8);
  CHECK_EQ(B.rels.size(), 7);
  CHECK_EQ(B.socle_dims(), (std::vector<long>{0, 0, 3}));
  CHECK_FALSE(B.is_gorenstein());
  std::vector<Mono> expected = {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                                {0, 0, 0, 1}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}};
  CHECK(B.check_basis(expected));
}

TEST_CASE("products follow the relations") {
  RationalField q;
  auto A = make_A(q, q.from_long(2));
  auto coords_of = [&](const char* s) {
    PolyParser<RationalField> P(q, V5);
    P.scalars["a"] = q.from_long(2);
    auto p = P.parse(s);
    return A.nf_homog(p, *p.homogeneous_degree());
  };
  // x3*x4 = 0
  CHECK(A.multiply(1, coords_of("x3"), 1, coords_of("x4")) ==
        std::vector<mpq_class>(5, mpq_class(0)));
  // x2*x3 = -2*x1*x3
  CHECK(A.multiply(1, coords_of("x2"), 1, coords_of("x3")) == coords_of("-2*x1*x3"));
  // 1*x1 = x1
  CHECK(A.multiply(0, coords_of("1"), 1, coords_of("x1")) == coords_of("x1"));
  // x1*x2*x5 spans the socle
  auto triple = A.multiply(2, coords_of("x1*x2"), 1, coords_of("x5"));
  CHECK(triple == coords_of("x1*x2*x5"));
  CHECK(triple != std::vector<mpq_class>(1, mpq_class(0)));
}

TEST_CASE("every relation evaluates to zero, all monomial normal forms agree with the tensor") {
  PrimeField f(5);
  auto A = make_A(f, 2);
  PolyParser<PrimeField> P(f, V5);
  P.scalars["a"] = 2;
  for (const auto& s : REL_A) {
    auto p = P.parse(s);
    auto z = A.nf_homog(p, 2);
    for (auto v : z) CHECK_EQ(v, 0);
  }
  // nf(x_v * m) must equal act_v(nf(m)) for every monomial m
  for (int d = 0; d + 1 <= A.top; ++d) {
    for (const auto& m : A.all_monos[d]) {
      auto nm = A.nf_homog(poly_term(f, f.one(), m), d);
      for (long v = 0; v < A.nvars(); ++v) {
        Mono xm(5, 0);
        xm[v] = 1;
        auto lhs = A.nf_homog(poly_term(f, f.one(), mono_mul(xm, m)), d + 1);
        auto rhs = A.var_act[v][d].apply(nm);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("associativity and commutativity on all basis pairs and triples") {
  RationalField q;
  auto A = make_A(q, q.from_long(2));
  // commutativity: act_i act_j = act_j act_i as maps A_d -> A_{d+2}
  for (int d = 0; d + 2 <= A.top; ++d)
    for (long i = 0; i < 5; ++i)
      for (long j = i + 1; j < 5; ++j)
        CHECK(A.var_act[i][d + 1].mul(A.var_act[j][d]) == A.var_act[j][d + 1].mul(A.var_act[i][d]));
  // associativity on basis triples via multiply()
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c)
        for (long i = 0; i < A.dim_at(a); ++i)
          for (long j = 0; j < A.dim_at(b); ++j)
            for (long l = 0; l < A.dim_at(c); ++l) {
              std::vector<mpq_class> u(A.dim_at(a), 0), v(A.dim_at(b), 0), w(A.dim_at(c), 0);
              u[i] = 1;
              v[j] = 1;
              w[l] = 1;
              auto uv_w = A.multiply(a + b, A.multiply(a, u, b, v), c, w);
              auto u_vw = A.multiply(a, u, b + c, A.multiply(b, v, c, w));
              CHECK(uv_w == u_vw);
            }
}

TEST_CASE("hilbert coefficients are stable across fields and alpha") {
  RationalField q;
  CHECK_EQ(make_A(q, q.from_long(1)).hilbert(), (std::vector<long>{1, 5, 5, 1}));
  CHECK_EQ(make_A(q, q.from_long(-1)).hilbert(), (std::vector<long>{1, 5, 5, 1}));
  CHECK_EQ(make_A(q, q.from_string("7/3")).hilbert(), (std::vector<long>{1, 5, 5, 1}));
  PrimeField f5(5);
  CHECK_EQ(make_A(f5, 2).hilbert(), (std::vector<long>{1, 5, 5, 1}));
  CHECK(make_A(f5, 2).is_gorenstein());
  CHECK_EQ(make_B(f5, 2).hilbert(), (std::vector<long>{1, 4, 3}));
  PrimeField f7(7);
  CHECK_EQ(make_A(f7, 3).hilbert(), (std::vector<long>{1, 5, 5, 1}));
}

TEST_CASE("small quotients") {
  RationalField q;
  PolyParser<RationalField> P(q, {"x"});
  auto K = build_algebra(q, {"x"}, {P.parse("x^2")}, 10);
  CHECK_EQ(K.hilbert(), (std::vector<long>{1, 1}));
  CHECK(K.is_gorenstein());
  CHECK_EQ(K.socle_dims(), (std::vector<long>{0, 1}));
}

TEST_CASE("construction errors") {
  RationalField q;
  PolyParser<RationalField> P(q, {"x", "y"});
  // x^2 alone leaves k[y] alive forever
  CHECK_THROWS_AS(build_algebra(q, {"x", "y"}, {P.parse("x^2")}, 10), Error);
  CHECK_THROWS_AS(build_algebra(q, {"x", "y"}, {P.parse("x + x*y")}, 10), Error);
  CHECK_THROWS_AS(build_algebra(q, {"x", "y"}, {P.parse("0")}, 10), Error);
  CHECK_THROWS_AS(build_algebra(q, {"x", "y"}, {P.parse("x")}, 10), Error);
  try {
    build_algebra(q, {"x", "y"}, {P.parse("x^2")}, 10);
  } catch (const Error& e) {
    CHECK_EQ(static_cast<int>(e.kind), static_cast<int>(Error::Kind::Input));
  }
}
