#pragma once
// One-stop construction of the study objects: the deformed Gorenstein
// quotient A, its collapse B, the two-generator image modules M and L, their
// duals, the cyclic test modules T_q, the socle-heavy modules U and V, and
// the doubly infinite family of differentials. On top of that, a
// reproduction checklist with adjustable depth windows.
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gorhom/homology.hpp"

namespace gorhom {

inline const std::vector<std::string>& big_variables() {
  static const std::vector<std::string> vars = {"x1", "x2", "x3", "x4", "x5"};
  return vars;
}

// the ten defining quadrics; the deformation unit appears as the scalar "a"
inline const std::vector<std::string>& defining_relations() {
  static const std::vector<std::string> rels = {
      "a*x1*x3+x2*x3", "x1*x4+x2*x4", "x3^2+a*x1*x5-x2*x5", "x4^2+x1*x5-x2*x5",
      "x1^2", "x2^2", "x3*x4", "x3*x5", "x4*x5", "x5^2"};
  return rels;
}

template <class F>
struct Scenario {
  F fld;
  typename F::Elem alpha;
  long long s = 0;  // multiplicative order of alpha, 0 meaning infinite

  std::unique_ptr<GradedAlgebra<F>> A;  // the big quotient
  std::unique_ptr<GradedAlgebra<F>> B;  // the collapse by the last variable

  GradedModule<F> M, L;          // images of the index-zero family map
  PolyMat<F> M_pres, L_pres;     // their minimal presentations
  GradedModule<F> Mstar, Lstar;  // first duals
  GradedModule<F> U_A, U_B;      // cokernel of the six linear columns
  GradedModule<F> V_A, V_B;      // its truncation with two-dimensional socle
  GradedModule<F> kA, kB;        // residue fields

  const GradedAlgebra<F>& alg(bool collapsed) const { return collapsed ? *B : *A; }

  // family differential index i, mapping generators of degree i+1 to degree i;
  // the grading places im(d_0) in start degree 1
  PolyMat<F> d(long long i, bool collapsed = false) const {
    const GradedAlgebra<F>& R = alg(collapsed);
    PolyParser<F> P(fld, R.vars);
    P.scalars["a"] = alpha;
    P.bound_ints["i"] = i;
    int base = static_cast<int>(i);
    PolyMat<F> m = PolyMat<F>::make({base, base}, {base + 1, base + 1});
    m.at(0, 0) = P.parse("x1");
    m.at(0, 1) = P.parse("a^i*x3");
    m.at(1, 0) = P.parse("x4");
    m.at(1, 1) = P.parse("x2");
    return m;
  }

  // consecutive family maps d_ilo .. d_ihi
  std::vector<PolyMat<F>> chain(int ilo, int ihi, bool collapsed = false) const {
    std::vector<PolyMat<F>> maps;
    for (int i = ilo; i <= ihi; ++i) maps.push_back(d(i, collapsed));
    return maps;
  }

  // the dualized family: index-i map is the transpose of d at index -i, with
  // generators of degree i; this is the complete resolution of the dual
  // image module
  std::vector<PolyMat<F>> dual_chain(int ilo, int ihi, bool collapsed = false) const {
    std::vector<PolyMat<F>> maps;
    for (int i = ilo; i <= ihi; ++i) maps.push_back(d(-i, collapsed).star_transpose());
    return maps;
  }

  GradedModule<F> T(long long q, bool collapsed = false) const {
    const GradedAlgebra<F>& R = alg(collapsed);
    PolyParser<F> P(fld, R.vars);
    P.scalars["a"] = alpha;
    P.bound_ints["q"] = q;
    std::vector<Poly<F>> gens = {P.parse("x1-x2"), P.parse("x1-a^q*x3"), P.parse("x1-x4")};
    if (R.nvars() == 5) gens.push_back(P.parse("x5"));
    return cyclic_quotient(R, gens, "T" + std::to_string(q));
  }
};

namespace detail {

template <class F>
PolyMat<F> six_column_matrix(const GradedAlgebra<F>& R, bool truncated) {
  PolyParser<F> P(R.fld, R.vars);
  std::vector<Poly<F>> top, bot;
  for (const auto& s : {"x3", "0", "x1", "x4", "x2", "0"}) top.push_back(P.parse(s));
  for (const auto& s : {"-x2", "x3", "-x4", "0", "0", "x1"}) bot.push_back(P.parse(s));
  std::vector<int> cdegs(6, 1);
  if (truncated) {
    if (R.nvars() == 5) {
      top.push_back(P.parse("x5"));
      bot.push_back(poly_zero(R.fld));
      top.push_back(poly_zero(R.fld));
      bot.push_back(P.parse("x5"));
      cdegs.insert(cdegs.end(), {1, 1});
    }
    for (const Mono& mo : monomials_of_degree(static_cast<int>(R.nvars()), 2)) {
      top.push_back(poly_term(R.fld, R.fld.one(), mo));
      bot.push_back(poly_zero(R.fld));
      top.push_back(poly_zero(R.fld));
      bot.push_back(poly_term(R.fld, R.fld.one(), mo));
      cdegs.insert(cdegs.end(), {2, 2});
    }
  }
  PolyMat<F> m = PolyMat<F>::make({0, 0}, cdegs);
  for (long c = 0; c < m.cols(); ++c) {
    m.at(0, c) = top[static_cast<std::size_t>(c)];
    m.at(1, c) = bot[static_cast<std::size_t>(c)];
  }
  return m;
}

}  // namespace detail

template <class F>
Scenario<F> build_scenario(F fld, typename F::Elem alpha, int cap = 10) {
  if (fld.is_zero(alpha)) throw input_error("the deformation scalar must be a unit");
  Scenario<F> sc{fld, alpha};
  sc.s = order_of_unit(fld, alpha);

  PolyParser<F> P(fld, big_variables());
  P.scalars["a"] = alpha;
  std::vector<Poly<F>> rels;
  for (const auto& r : defining_relations()) rels.push_back(P.parse(r));
  sc.A = std::make_unique<GradedAlgebra<F>>(build_algebra(fld, big_variables(), rels, cap));
  std::vector<std::string> small_vars(big_variables().begin(), big_variables().end() - 1);
  sc.B = std::make_unique<GradedAlgebra<F>>(
      build_algebra(fld, small_vars, relations_mod_var(fld, rels, 4), cap));

  sc.M = realize_image(*sc.A, sc.d(0), "M");
  sc.L = realize_image(*sc.B, sc.d(0, true), "L");
  sc.M_pres = presentation_of(sc.M);
  sc.L_pres = presentation_of(sc.L);
  sc.Mstar = star_dual(*sc.A, sc.M_pres, "M*");
  sc.Lstar = star_dual(*sc.B, sc.L_pres, "L*");
  sc.U_A = realize_cokernel(*sc.A, detail::six_column_matrix(*sc.A, false), "U");
  sc.U_B = realize_cokernel(*sc.B, detail::six_column_matrix(*sc.B, false), "U");
  sc.V_A = realize_cokernel(*sc.A, detail::six_column_matrix(*sc.A, true), "V");
  sc.V_B = realize_cokernel(*sc.B, detail::six_column_matrix(*sc.B, true), "V");

  auto residue = [&](const GradedAlgebra<F>& R) {
    PolyParser<F> Q(fld, R.vars);
    std::vector<Poly<F>> vars;
    for (const auto& v : R.vars) vars.push_back(Q.parse(v));
    return cyclic_quotient(R, vars, "k");
  };
  sc.kA = residue(*sc.A);
  sc.kB = residue(*sc.B);
  return sc;
}

// Execution windows for the reproduction checklist. The reduced defaults are
// the deepest settings that keep the whole run within a couple of minutes of
// exact arithmetic; the literal settings match the stated targets and can
// exceed any reasonable budget on the residue-field and cyclic resolutions
// (the elimination guard aborts the worst of them with a clear message).
struct WindowPlan {
  bool full = false;
  int k_big = 4;        // residue field depth over A     (stated: 8)
  int k_small = 4;      // residue field depth over B     (stated: 8)
  int tail = 15;        // two-generator image modules    (stated: 15)
  int cyclic = 3;       // cyclic module resolution depth (stated: 6)
  int socle_heavy = 3;  // V resolution depth
  int direct_path = 3;  // direct-resolution side of the path comparison (stated: 12)

  static WindowPlan reduced() { return WindowPlan{}; }
  static WindowPlan literal() { return WindowPlan{true, 8, 8, 15, 6, 4, 12}; }

  std::string note(int executed, int stated) const {
    if (executed >= stated) return "";
    std::ostringstream os;
    os << "reduced window: depth " << executed << " of " << stated
       << "; deeper exact eliminations exceed the runtime budget";
    return os.str();
  }
};

struct ReproCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string provenance;  // "reported", "derived" or "trivial"
  std::string note;
};

struct ReproReport {
  std::string field;
  std::string alpha;
  long long s = 0;
  int steps = 15;
  int window = 8;
  bool full_windows = false;
  std::vector<ReproCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline std::string int_vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

inline std::string long_vec_str(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

inline void push_check(std::vector<ReproCheck>& out, const std::string& name,
                       const std::string& expected, const std::string& actual,
                       const std::string& provenance, const std::string& note = "") {
  out.push_back({name, expected, actual, expected == actual, provenance, note});
}

}  // namespace detail

// indices in [lo, hi] where the pattern predicts a nonzero value: i matching
// q-1 or q, literally when s = 0 and modulo s otherwise; index zero is
// always nonzero for the co-variant tables
inline std::vector<int> predicted_pattern(long long s, long long q, int lo, int hi,
                                          bool include_zero) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) {
    bool hit;
    if (s == 0) {
      hit = (i == q - 1 || i == q);
    } else {
      long long r = ((i - q) % s + s) % s;
      hit = (r == 0 || r == s - 1);
    }
    if (include_zero && i == 0) hit = true;
    if (hit) out.push_back(i);
  }
  return out;
}

inline std::vector<int> nonzero_between(const HomologyTable& t, int lo, int hi) {
  std::vector<int> out;
  for (int i : t.nonzero_indices())
    if (i >= lo && i <= hi) out.push_back(i);
  return out;
}

namespace checks {

template <class F>
std::vector<ReproCheck> algebra_checks(const Scenario<F>& sc) {
  std::vector<ReproCheck> out;
  detail::push_check(out, "big algebra hilbert", "1,5,5,1",
                     detail::long_vec_str(sc.A->hilbert()), "reported");
  detail::push_check(out, "big algebra dimension", "12", std::to_string(sc.A->total_dim()),
                     "reported");
  detail::push_check(out, "big algebra gorenstein", "true",
                     sc.A->is_gorenstein() ? "true" : "false", "reported");
  detail::push_check(out, "big algebra socle", "0,0,0,1",
                     detail::long_vec_str(sc.A->socle_dims()), "derived");

  auto mono5 = [](std::initializer_list<int> e) { return Mono(e); };
  std::vector<Mono> big_basis = {
      mono5({0, 0, 0, 0, 0}), mono5({1, 0, 0, 0, 0}), mono5({0, 1, 0, 0, 0}),
      mono5({0, 0, 1, 0, 0}), mono5({0, 0, 0, 1, 0}), mono5({0, 0, 0, 0, 1}),
      mono5({1, 1, 0, 0, 0}), mono5({1, 0, 1, 0, 0}), mono5({1, 0, 0, 1, 0}),
      mono5({1, 0, 0, 0, 1}), mono5({0, 1, 0, 0, 1}), mono5({1, 1, 0, 0, 1})};
  detail::push_check(out, "big algebra twelve-monomial basis", "accepted",
                     sc.A->check_basis(big_basis) ? "accepted" : "rejected", "reported");

  detail::push_check(out, "collapsed algebra hilbert", "1,4,3",
                     detail::long_vec_str(sc.B->hilbert()), "reported");
  detail::push_check(out, "collapsed algebra dimension", "8",
                     std::to_string(sc.B->total_dim()), "reported");
  detail::push_check(out, "collapsed algebra gorenstein", "false",
                     sc.B->is_gorenstein() ? "true" : "false", "reported");
  detail::push_check(out, "collapsed algebra socle", "0,0,3",
                     detail::long_vec_str(sc.B->socle_dims()), "derived");
  std::vector<Mono> small_basis = {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                                   {0, 0, 0, 1}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}};
  detail::push_check(out, "collapsed algebra eight-monomial basis", "accepted",
                     sc.B->check_basis(small_basis) ? "accepted" : "rejected", "reported");
  return out;
}

template <class F>
std::vector<ReproCheck> exactness_checks(const Scenario<F>& sc, int W) {
  std::vector<ReproCheck> out;
  struct Case {
    const char* name;
    bool collapsed;
    bool dual;
  };
  for (Case cs : {Case{"family over big algebra", false, false},
                  Case{"dual family over big algebra", false, true},
                  Case{"family over collapsed algebra", true, false},
                  Case{"dual family over collapsed algebra", true, true}}) {
    auto maps = cs.dual ? sc.dual_chain(-W, W + 1, cs.collapsed)
                        : sc.chain(-W, W + 1, cs.collapsed);
    auto free_mod = realize_free(sc.alg(cs.collapsed), {0}, "R");
    auto t = complex_tensor_homology(maps, -W, free_mod);
    detail::push_check(out, std::string(cs.name) + " homology window", "{}",
                       detail::int_vec_str(t.nonzero_indices()), "reported");
  }

  auto free_A = realize_free(*sc.A, {0}, "A");
  bool all12 = true;
  long bad = -1;
  for (int i = -W; i <= W; ++i) {
    long r = rank_of(omega_matrix(free_A, sc.fld.pow(sc.alpha, i)));
    if (r != 12) {
      all12 = false;
      bad = i;
      break;
    }
  }
  detail::push_check(out, "family image ranks over big algebra", "12 at every index",
                     all12 ? "12 at every index"
                           : "rank mismatch at index " + std::to_string(bad),
                     "reported");
  return out;
}

template <class F>
std::vector<ReproCheck> hilbert_checks(const Scenario<F>& sc) {
  std::vector<ReproCheck> out;
  auto trimmed = [](const GradedModule<F>& N) {
    auto [start, dims] = hilbert_trimmed(N);
    std::ostringstream os;
    os << "start " << start << ": " << detail::long_vec_str(dims);
    return os.str();
  };
  detail::push_check(out, "image module hilbert", "start 1: 2,8,2", trimmed(sc.M), "reported");
  detail::push_check(out, "collapsed image module hilbert", "start 1: 2,6", trimmed(sc.L),
                     "reported");
  auto T3a = sc.T(3);
  auto T3b = sc.T(3, true);
  detail::push_check(out, "cyclic module hilbert over big algebra", "start 0: 1,1",
                     trimmed(T3a), "reported");
  detail::push_check(out, "cyclic module hilbert over collapsed algebra", "start 0: 1,1",
                     trimmed(T3b), "reported");
  detail::push_check(out, "socle-heavy module hilbert", "start 0: 2,2", trimmed(sc.V_A),
                     "reported");
  detail::push_check(out, "dual image module hilbert (shift-normalized)", "2,8,2",
                     detail::long_vec_str(hilbert_trimmed(sc.Mstar).second), "reported");
  detail::push_check(out, "dual collapsed image module hilbert (shift-normalized)", "2,6",
                     detail::long_vec_str(hilbert_trimmed(sc.Lstar).second), "reported");
  auto socle = module_socle_dims(sc.V_A);
  while (!socle.empty() && socle.back() == 0) socle.pop_back();
  detail::push_check(out, "socle-heavy socle dims", "0,2", detail::long_vec_str(socle),
                     "derived");
  return out;
}

template <class F>
std::vector<ReproCheck> betti_checks(const Scenario<F>& sc, const WindowPlan& plan) {
  std::vector<ReproCheck> out;
  auto betti_line = [](const FreeResolution<F>& r) {
    return detail::long_vec_str(r.betti().totals());
  };
  // a resolution to depth n carries n+1 betti numbers
  auto series_line = [](const std::vector<long long>& den, int n) {
    auto c = series_expand({1}, den, n + 1);
    std::vector<long> v(c.begin(), c.end());
    return detail::long_vec_str(v);
  };

  auto rkA = minimal_free_resolution(sc.kA, plan.k_big);
  detail::push_check(out, "residue field betti over big algebra",
                     series_line({1, -5, 5, -1}, plan.k_big), betti_line(rkA), "reported",
                     plan.note(plan.k_big, 8));
  detail::push_check(out, "residue field linearity over big algebra", "linear",
                     resolution_is_linear(rkA.betti(), 0) ? "linear" : "nonlinear",
                     "reported");

  auto rkB = minimal_free_resolution(sc.kB, plan.k_small);
  detail::push_check(out, "residue field betti over collapsed algebra",
                     series_line({1, -4, 3}, plan.k_small), betti_line(rkB), "reported",
                     plan.note(plan.k_small, 8));
  detail::push_check(out, "residue field linearity over collapsed algebra", "linear",
                     resolution_is_linear(rkB.betti(), 0) ? "linear" : "nonlinear",
                     "reported");

  auto rM = minimal_free_resolution(sc.M, plan.tail);
  std::vector<long> twos(static_cast<std::size_t>(plan.tail) + 1, 2);
  detail::push_check(out, "image module betti tail", detail::long_vec_str(twos),
                     betti_line(rM), "reported");
  detail::push_check(out, "image module linearity", "linear",
                     resolution_is_linear(rM.betti(), 1) ? "linear" : "nonlinear",
                     "reported");
  auto rL = minimal_free_resolution(sc.L, plan.tail);
  detail::push_check(out, "collapsed image module betti tail", detail::long_vec_str(twos),
                     betti_line(rL), "reported");
  detail::push_check(out, "collapsed image module linearity", "linear",
                     resolution_is_linear(rL.betti(), 1) ? "linear" : "nonlinear",
                     "reported");

  auto rT = minimal_free_resolution(sc.T(3), plan.cyclic);
  detail::push_check(out, "cyclic module betti", series_line({1, -4, 1}, plan.cyclic),
                     betti_line(rT), "reported", plan.note(plan.cyclic, 6));
  detail::push_check(out, "cyclic module linearity", "linear",
                     resolution_is_linear(rT.betti(), 0) ? "linear" : "nonlinear",
                     "reported");

  auto rVA = minimal_free_resolution(sc.V_A, plan.socle_heavy);
  detail::push_check(out, "socle-heavy linearity over big algebra", "linear",
                     resolution_is_linear(rVA.betti(), 0) ? "linear" : "nonlinear",
                     "reported");
  auto rVB = minimal_free_resolution(sc.V_B, plan.socle_heavy);
  detail::push_check(out, "socle-heavy linearity over collapsed algebra", "linear",
                     resolution_is_linear(rVB.betti(), 0) ? "linear" : "nonlinear",
                     "reported");
  return out;
}

template <class F>
std::vector<ReproCheck> pattern_checks(const Scenario<F>& sc, int H,
                                       const std::vector<long long>& qs) {
  std::vector<ReproCheck> out;
  auto resM = minimal_free_resolution(sc.M, H + 1);
  auto resL = minimal_free_resolution(sc.L, H + 1);
  for (long long q : qs) {
    auto Ta = sc.T(q);
    std::string tag = " q=" + std::to_string(q);

    // covariant tables include index zero only in the aperiodic regime; in
    // the periodic one index zero can fall outside the residue classes
    int elo = sc.s == 0 ? 0 : 1;
    auto ext = ext_table(resM, Ta, H);
    detail::push_check(out, "extension pattern" + tag,
                       detail::int_vec_str(predicted_pattern(sc.s, q, elo, H, sc.s == 0)),
                       detail::int_vec_str(nonzero_between(ext, elo, H)), "reported");

    auto tor = tor_table(resM, Ta, H);
    detail::push_check(out, "torsion pattern" + tag,
                       detail::int_vec_str(predicted_pattern(sc.s, q, 1, H, false)),
                       detail::int_vec_str(nonzero_between(tor, 1, H)), "reported");

    auto Tb = sc.T(q, true);
    auto extB = ext_table(resL, Tb, H);
    detail::push_check(out, "collapsed extension pattern" + tag,
                       detail::int_vec_str(predicted_pattern(sc.s, q, elo, H, sc.s == 0)),
                       detail::int_vec_str(nonzero_between(extB, elo, H)), "reported");
    auto torB = tor_table(resL, Tb, H);
    detail::push_check(out, "collapsed torsion pattern" + tag,
                       detail::int_vec_str(predicted_pattern(sc.s, q, 1, H, false)),
                       detail::int_vec_str(nonzero_between(torB, 1, H)), "reported");
  }

  if (sc.s == 4) {
    // the displayed special case: extensions against the q = 0 module vanish
    // exactly at residues one and two
    auto T0 = sc.T(0);
    auto ext = ext_table(resM, T0, H);
    std::vector<int> want;
    for (int i = 0; i <= H; ++i)
      if (i % 4 == 0 || i % 4 == 3) want.push_back(i);
    detail::push_check(out, "periodic display q=0", detail::int_vec_str(want),
                       detail::int_vec_str(nonzero_between(ext, 0, H)), "reported");
  }
  return out;
}

template <class F>
std::vector<ReproCheck> socle_checks(const Scenario<F>& sc, int H, int W) {
  std::vector<ReproCheck> out;
  auto res = minimal_free_resolution(sc.M, H + 1);
  auto tor = tor_table(res, sc.V_A, H);
  detail::push_check(out, "torsion against socle-heavy module", "{}",
                     detail::int_vec_str(nonzero_between(tor, 1, H)), "reported");
  auto ext = ext_table(res, sc.V_A, H);
  std::vector<int> all;
  for (int i = 1; i <= H; ++i) all.push_back(i);
  detail::push_check(out, "extensions against socle-heavy module", detail::int_vec_str(all),
                     detail::int_vec_str(nonzero_between(ext, 1, H)), "reported");

  auto maps = sc.chain(-W, W + 1);
  auto stor = complex_tensor_homology(maps, -W, sc.V_A);
  detail::push_check(out, "stable torsion against socle-heavy module", "{}",
                     detail::int_vec_str(stor.nonzero_indices()), "reported");
  auto sext = complex_hom_homology(maps, -W, sc.V_A);
  std::vector<int> window;
  for (int i = -W; i <= W; ++i) window.push_back(i);
  detail::push_check(out, "stable extensions against socle-heavy module",
                     detail::int_vec_str(window),
                     detail::int_vec_str(nonzero_between(sext, -W, W)), "reported");

  auto codual = matlis_dual(sc.V_A, "V co-dual");
  auto cotor = tor_table(res, codual, H);
  bool agree = true;
  for (int i = 0; i <= H && agree; ++i) agree = cotor.total_at(i) == ext.total_at(i);
  detail::push_check(out, "co-dual torsion equals extensions", "agree on the window",
                     agree ? "agree on the window" : "disagree", "reported");
  return out;
}

template <class F>
std::vector<ReproCheck> path_checks(const Scenario<F>& sc, const WindowPlan& plan) {
  std::vector<ReproCheck> out;
  const int W = 12;
  auto res = minimal_free_resolution(sc.M, W + 1);
  auto maps = sc.chain(1, W + 1);

  std::vector<long long> qs = sc.s == 0 ? std::vector<long long>{1, 3, 5, 8}
                                        : std::vector<long long>{0, 1, 2};
  std::vector<const GradedModule<F>*> mods;
  std::vector<GradedModule<F>> owned;
  for (long long q : qs) owned.push_back(sc.T(q));
  owned.push_back(sc.V_A);
  for (const auto& m : owned) mods.push_back(&m);

  bool tor_agree = true, ext_agree = true;
  for (const auto* N : mods) {
    auto t1 = tor_table(res, *N, W);
    auto t2 = complex_tensor_homology(maps, 1, *N);
    auto e1 = ext_table(res, *N, W);
    auto e2 = complex_hom_homology(maps, 1, *N);
    for (int i = 1; i <= W; ++i) {
      if (t1.total_at(i) != t2.total_at(i)) tor_agree = false;
      if (e1.total_at(i) != e2.total_at(i)) ext_agree = false;
    }
  }
  detail::push_check(out, "resolution and family torsion tables", "agree on [1,12]",
                     tor_agree ? "agree on [1,12]" : "disagree", "derived");
  detail::push_check(out, "resolution and family extension tables", "agree on [1,12]",
                     ext_agree ? "agree on [1,12]" : "disagree", "derived");

  // extensions INTO the image module: the dualized family computes them as
  // stable torsion of the dual module; cross-check against a direct
  // resolution of the argument on a shallow window
  int D = plan.direct_path;
  auto T3 = sc.T(3);
  auto dual_maps = sc.dual_chain(1, D + 1);
  auto viadual = complex_tensor_homology(dual_maps, 1, T3);
  auto resT = minimal_free_resolution(T3, D + 1);
  auto direct = ext_table(resT, sc.M, D);
  bool agree = true;
  for (int i = 1; i <= D; ++i)
    if (viadual.total_at(i) != direct.total_at(i)) agree = false;
  detail::push_check(out, "extensions into the image module, two routes",
                     "agree on [1," + std::to_string(D) + "]",
                     agree ? "agree on [1," + std::to_string(D) + "]" : "disagree",
                     "derived", plan.note(D, 12));

  if (sc.s > 0) {
    // reverse-direction pattern: nonzero exactly at residues -q and -q-1
    bool ok = true;
    for (long long q : qs) {
      auto tq = sc.T(q);
      auto t = complex_tensor_homology(sc.dual_chain(1, W + 1), 1, tq);
      auto got = nonzero_between(t, 1, W);
      std::vector<int> want;
      for (int i = 1; i <= W; ++i) {
        long long r = ((i + q) % sc.s + sc.s) % sc.s;
        if (r == 0 || r == sc.s - 1) want.push_back(i);
      }
      if (got != want) ok = false;
    }
    detail::push_check(out, "reverse extension pattern", "matches residues -q,-q-1",
                       ok ? "matches residues -q,-q-1" : "mismatch", "reported");
  }
  return out;
}

template <class F>
std::vector<ReproCheck> rigidity_checks(const Scenario<F>& sc, int H) {
  std::vector<ReproCheck> out;
  auto res = minimal_free_resolution(sc.M, H + 1);
  std::vector<GradedModule<F>> mods;
  mods.push_back(sc.T(1));
  mods.push_back(sc.T(3));
  std::vector<std::string> names = {"T1", "T3", "V"};
  mods.push_back(sc.V_A);
  for (std::size_t j = 0; j < mods.size(); ++j) {
    const auto& N = mods[j];
    long c = module_c_invariant(N);
    auto tor = tor_table(res, N, H);
    auto nz = nonzero_between(tor, 1, H);
    bool has_gap = static_cast<int>(nz.size()) < H;
    // the bound counts distinct deformation powers: indices when the unit
    // has infinite order, residue classes when it has order s
    long classes;
    if (sc.s == 0) {
      classes = static_cast<long>(nz.size());
    } else {
      std::set<long long> rs;
      for (int i : nz) rs.insert(((i % sc.s) + sc.s) % sc.s);
      classes = static_cast<long>(rs.size());
    }
    bool bound_ok = !has_gap || classes <= 2 * c;
    detail::push_check(out, "nonvanishing class bound " + names[j],
                       "at most " + std::to_string(2 * c), bound_ok
                           ? "at most " + std::to_string(2 * c)
                           : "exceeded with " + std::to_string(classes),
                       "reported");
    // likewise the rank of the assembled matrix drops for at most c(N)
    // distinct powers; scan one period in the periodic regime
    auto scan = sc.s == 0 ? omega_rank_scan(N, sc.alpha, -H, H)
                          : omega_rank_scan(N, sc.alpha, 0, static_cast<int>(sc.s) - 1);
    detail::push_check(out, "rank drop count " + names[j],
                       "at most " + std::to_string(c),
                       scan.deficiency_count <= c
                           ? "at most " + std::to_string(c)
                           : "exceeded with " + std::to_string(scan.deficiency_count),
                       "derived");
  }
  return out;
}

template <class F>
std::vector<ReproCheck> property_checks(const Scenario<F>& sc) {
  std::vector<ReproCheck> out;
  std::mt19937 rng(0xC0FFEE);
  auto rnd = [&](long m) { return static_cast<long>(rng() % static_cast<unsigned>(m)); };

  // rank-nullity and transpose invariance on dense random matrices
  bool rn_ok = true;
  for (int trial = 0; trial < 4 && rn_ok; ++trial) {
    Mat<F> m(sc.fld, 6, 9);
    for (long r = 0; r < m.rows; ++r)
      for (long c = 0; c < m.cols; ++c) m.at(r, c) = sc.fld.from_long(rnd(5) - 2);
    long rk = rank_of(m);
    rn_ok = rk + kernel_basis(m).cols == m.cols && rk == rank_of(m.transposed());
  }
  detail::push_check(out, "rank-nullity and transpose rank", "hold",
                     rn_ok ? "hold" : "violated", "trivial");

  // random small cyclic quotients over both algebras
  auto random_cyclic = [&](const GradedAlgebra<F>& R, const std::string& nm) {
    std::vector<Poly<F>> gens;
    long n = 2 + rnd(2);
    for (long g = 0; g < n; ++g) {
      Poly<F> p = poly_zero(sc.fld);
      for (long v = 0; v < static_cast<long>(R.nvars()); ++v) {
        long cf = rnd(5) - 2;
        if (cf != 0) {
          Mono mo(R.nvars(), 0);
          mo[static_cast<std::size_t>(v)] = 1;
          p = poly_add(sc.fld, p, poly_term(sc.fld, sc.fld.from_long(cf), mo));
        }
      }
      if (!p.is_zero()) gens.push_back(p);
    }
    return cyclic_quotient(R, gens, nm);
  };

  bool sym_ok = true, matlis_ok = true, minimal_ok = true, dd_ok = true;
  for (int trial = 0; trial < 3; ++trial) {
    auto X = random_cyclic(*sc.A, "X");
    auto Y = random_cyclic(*sc.A, "Y");
    if (X.is_zero() || Y.is_zero()) continue;
    auto rx = minimal_free_resolution(X, 4);
    auto ry = minimal_free_resolution(Y, 4);
    minimal_ok = minimal_ok && resolution_is_minimal(rx) && resolution_is_minimal(ry);
    for (std::size_t i = 0; i + 1 < rx.maps.size(); ++i)
      dd_ok = dd_ok && composes_to_zero(*sc.A, rx.maps[i], rx.maps[i + 1]);
    auto txy = tor_table(rx, Y, 3);
    auto tyx = tor_table(ry, X, 3);
    for (int i = 0; i <= 3; ++i) sym_ok = sym_ok && txy.total_at(i) == tyx.total_at(i);
    auto ext = ext_table(rx, Y, 3);
    auto cotor = tor_table(rx, matlis_dual(Y), 3);
    for (int i = 0; i <= 3; ++i) matlis_ok = matlis_ok && ext.total_at(i) == cotor.total_at(i);
  }
  for (int trial = 0; trial < 2; ++trial) {
    auto X = random_cyclic(*sc.B, "X");
    if (X.is_zero()) continue;
    auto rx = minimal_free_resolution(X, 3);
    minimal_ok = minimal_ok && resolution_is_minimal(rx);
    for (std::size_t i = 0; i + 1 < rx.maps.size(); ++i)
      dd_ok = dd_ok && composes_to_zero(*sc.B, rx.maps[i], rx.maps[i + 1]);
  }
  detail::push_check(out, "torsion symmetry", "holds", sym_ok ? "holds" : "violated",
                     "derived");
  detail::push_check(out, "co-dual dimension identity", "holds",
                     matlis_ok ? "holds" : "violated", "derived");
  detail::push_check(out, "resolution minimality", "holds",
                     minimal_ok ? "holds" : "violated", "derived");
  detail::push_check(out, "differentials compose to zero", "holds",
                     dd_ok ? "holds" : "violated", "derived");
  return out;
}

}  // namespace checks

template <class F>
ReproReport reproduce_all(const Scenario<F>& sc, int H, int W, const WindowPlan& plan) {
  ReproReport rep;
  rep.field = sc.fld.spec().str();
  rep.alpha = sc.fld.str(sc.alpha);
  rep.s = sc.s;
  rep.steps = H;
  rep.window = W;
  rep.full_windows = plan.full;

  // failures are report entries, never exceptions: a group that aborts (for
  // example against the elimination guard under literal windows) records one
  // failing entry and the remaining groups still run
  auto append = [&](const char* group, std::function<std::vector<ReproCheck>()> run) {
    try {
      for (auto& c : run()) rep.checks.push_back(std::move(c));
    } catch (const Error& e) {
      rep.checks.push_back({std::string(group) + " execution", "completed",
                            std::string("aborted: ") + e.what(), false, "trivial", ""});
    }
  };
  append("algebra", [&] { return checks::algebra_checks(sc); });
  append("exactness", [&] { return checks::exactness_checks(sc, W); });
  append("hilbert", [&] { return checks::hilbert_checks(sc); });
  append("betti", [&] { return checks::betti_checks(sc, plan); });
  std::vector<long long> qs = sc.s == 0 ? std::vector<long long>{1, 3, 5, 8}
                                        : std::vector<long long>{0, 1, 2};
  append("patterns", [&] { return checks::pattern_checks(sc, H, qs); });
  append("socle", [&] { return checks::socle_checks(sc, H, W); });
  append("paths", [&] { return checks::path_checks(sc, plan); });
  append("rigidity", [&] { return checks::rigidity_checks(sc, H); });
  append("properties", [&] { return checks::property_checks(sc); });
  return rep;
}

}  // namespace gorhom
