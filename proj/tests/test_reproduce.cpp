#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gorhom/scenario.hpp"

using namespace gorhom;

namespace {

WindowPlan quick_plan() {
  WindowPlan p;
  p.k_big = 3;
  p.k_small = 3;
  p.tail = 6;
  p.cyclic = 2;
  p.socle_heavy = 2;
  p.direct_path = 2;
  return p;
}

std::string render(const ReproReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks)
    os << c.name << "|" << c.expected << "|" << c.actual << "|" << c.pass << "|"
       << c.provenance << "|" << c.note << "\n";
  return os.str();
}

}  // namespace

TEST_CASE("scenario construction wires every handle consistently") {
  RationalField q;
  auto sc = build_scenario(q, q.from_long(2));
  CHECK_EQ(sc.s, 0);
  CHECK_EQ(sc.A->total_dim(), 12);
  CHECK_EQ(sc.B->total_dim(), 8);
  CHECK_EQ(hilbert_trimmed(sc.M).second, (std::vector<long>{2, 8, 2}));
  CHECK_EQ(hilbert_trimmed(sc.L).second, (std::vector<long>{2, 6}));
  CHECK_EQ(hilbert_trimmed(sc.Mstar).second, (std::vector<long>{2, 8, 2}));
  CHECK_EQ(hilbert_trimmed(sc.Lstar).second, (std::vector<long>{2, 6}));
  CHECK_EQ(hilbert_trimmed(sc.V_A).second, (std::vector<long>{2, 2}));
  CHECK_EQ(hilbert_trimmed(sc.V_B).second, (std::vector<long>{2, 2}));
  CHECK(validate_module(sc.M));
  CHECK(validate_module(sc.V_A));
  CHECK(validate_module(sc.Mstar));
  CHECK_EQ(module_c_invariant(sc.T(3)), 1);
  CHECK_EQ(module_c_invariant(sc.V_A), 2);

  PrimeField f5(5);
  auto sf = build_scenario(f5, f5.from_long(2));
  CHECK_EQ(sf.s, 4);

  auto s1 = build_scenario(q, q.from_long(1));
  CHECK_EQ(s1.s, 1);

  bool threw = false;
  try {
    build_scenario(q, q.zero());
  } catch (const Error& e) {
    threw = e.kind == Error::Kind::Input;
  }
  CHECK(threw);
}

TEST_CASE("the dualized family is a chain and resolves the dual image module") {
  RationalField q;
  auto sc = build_scenario(q, q.from_long(2));
  auto maps = sc.dual_chain(-2, 3);
  for (std::size_t k = 0; k + 1 < maps.size(); ++k)
    CHECK(composes_to_zero(*sc.A, maps[k], maps[k + 1]));
  // its nonnegative stable torsion against the residue field gives the
  // (constant two) betti numbers of the dual module
  auto t = complex_tensor_homology(sc.dual_chain(1, 5), 1, sc.kA);
  for (int i = 1; i <= 3; ++i) CHECK_EQ(t.total_at(i), 2);
}

TEST_CASE("interval and gap constructions behave as designed") {
  RationalField q;
  auto sc = build_scenario(q, q.from_long(2));
  auto res = minimal_free_resolution(sc.M, 8);

  // contiguous block: sum of consecutive cyclic modules
  auto T2 = sc.T(2);
  auto T3 = sc.T(3);
  auto N13 = direct_sum(*sc.A, {&T2, &T3}, "N_{1,3}");
  auto ext = ext_table(res, N13, 7);
  auto p = extract_pattern(ext, sc.s);
  CHECK_EQ(p.nonzero, (std::vector<int>{0, 1, 2, 3}));
  CHECK_EQ(p.max_gap, 0);

  // two spikes with a gap between them
  auto T1 = sc.T(1);
  auto T5 = sc.T(5);
  auto Z14 = direct_sum(*sc.A, {&T1, &T5}, "Z_{1,4}");
  auto extz = ext_table(res, Z14, 7);
  auto pz = extract_pattern(extz, sc.s);
  CHECK_EQ(pz.nonzero, (std::vector<int>{0, 1, 4, 5}));
  CHECK_EQ(pz.max_gap, 2);
  CHECK_EQ(pz.modulus, 0);
  CHECK(pz.residues.empty());
}

TEST_CASE("residue summaries in the periodic regime") {
  PrimeField f5(5);
  auto sc = build_scenario(f5, f5.from_long(2));
  auto res = minimal_free_resolution(sc.M, 10);
  auto T2 = sc.T(2);
  auto tor = tor_table(res, T2, 9);
  // drop index zero before summarizing: the pattern statement starts at one
  HomologyTable positive;
  positive.lo_i = 1;
  positive.graded.assign(tor.graded.begin() + 1, tor.graded.end());
  auto p = extract_pattern(positive, sc.s);
  CHECK_EQ(p.modulus, 4);
  CHECK_EQ(p.residues, (std::vector<int>{1, 2}));
  CHECK(p.residues_consistent);

  HomologyTable empty;
  auto pe = extract_pattern(empty, 0);
  CHECK(pe.nonzero.empty());
  CHECK_EQ(pe.max_gap, 0);
}

TEST_CASE("the quick reproduction checklist passes over the rationals") {
  RationalField q;
  auto sc = build_scenario(q, q.from_long(2));
  auto rep = reproduce_all(sc, 9, 4, quick_plan());
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CAPTURE(c.expected);
    CAPTURE(c.actual);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass());
  CHECK_EQ(rep.field, "Q");
  CHECK_EQ(rep.alpha, "2");
  CHECK_EQ(rep.s, 0);

  // determinism: a second run renders byte-identically
  auto rep2 = reproduce_all(sc, 9, 4, quick_plan());
  CHECK_EQ(render(rep), render(rep2));
}

TEST_CASE("the quick reproduction checklist passes over the prime field") {
  PrimeField f5(5);
  auto sc = build_scenario(f5, f5.from_long(2));
  auto rep = reproduce_all(sc, 9, 4, quick_plan());
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CAPTURE(c.expected);
    CAPTURE(c.actual);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass());
  CHECK_EQ(rep.field, "F5");
  CHECK_EQ(rep.s, 4);
}

TEST_CASE("a perturbed relation set is caught by the composition check") {
  RationalField q;
  PolyParser<RationalField> P(q, big_variables());
  P.scalars["a"] = q.from_long(2);
  std::vector<Poly<RationalField>> rels;
  for (const auto& r : defining_relations()) rels.push_back(P.parse(r));
  rels[0] = P.parse("a*x1*x3");  // drop the second term of the first quadric
  auto A = build_algebra(q, big_variables(), rels, 10);

  PolyParser<RationalField> PA(q, A.vars);
  PA.scalars["a"] = q.from_long(2);
  PA.bound_ints["i"] = 0;
  auto mk = [&](long long i, int base) {
    PA.bound_ints["i"] = i;
    PolyMat<RationalField> m = PolyMat<RationalField>::make({base, base}, {base + 1, base + 1});
    m.at(0, 0) = PA.parse("x1");
    m.at(0, 1) = PA.parse("a^i*x3");
    m.at(1, 0) = PA.parse("x4");
    m.at(1, 1) = PA.parse("x2");
    return m;
  };
  CHECK_FALSE(composes_to_zero(A, mk(0, 0), mk(1, 1)));
}
