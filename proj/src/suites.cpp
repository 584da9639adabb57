#include "bolkit/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <iomanip>
#include <sstream>

#include "bolkit/classification.hpp"
#include "bolkit/loops.hpp"
#include "bolkit/matrix_groups.hpp"

namespace bolkit {

namespace {

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

VerificationReport exact(std::string context, std::string check, std::string tag, bool pass,
                         std::string detail = {}, std::int64_t samples = 1) {
  VerificationReport r;
  r.context = std::move(context);
  r.check = std::move(check);
  r.tag = std::move(tag);
  r.samples = samples;
  r.pass = pass;
  r.max_residual = pass ? 0.0 : 1.0;
  r.tolerance = 0.0;
  r.detail = std::move(detail);
  return r;
}

// Expected-negative numerical outcome: passes when the residual exceeds the
// threshold.
VerificationReport exceeds(VerificationReport r, std::string check, double threshold) {
  r.check = std::move(check);
  r.tolerance = threshold;
  r.pass = std::isfinite(r.max_residual) && r.max_residual > threshold;
  r.detail = "expected residual > " + sci(threshold) + (r.detail.empty() ? "" : "; " + r.detail);
  return r;
}

void append(std::vector<VerificationReport>& out, std::vector<VerificationReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::string fmt(const Subspace& s) { return format_subspace(s); }

Rational q(long p, long d = 1) { return Rational(p, d); }


double rel_distance(const SemidirectElement& a, const SemidirectElement& b) {
  const double scale = std::max({1.0, a.A.norm(), a.X.norm()});
  return ((a.A - b.A).norm() + (a.X - b.X).norm()) / scale;
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra core

std::vector<VerificationReport> algebra_reports(const LieAlgebra& alg) {
  std::vector<VerificationReport> out;
  out.push_back(check_jacobi(alg));

  int bad = 0;
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j)
      if (killing_by_trace(alg, alg.e(i), alg.e(j)) != alg.killing_gram()(i, j)) ++bad;
  out.push_back(exact(alg.name(), "killing_gram_matches_trace", "algebra-catalog", bad == 0,
                      bad ? std::to_string(bad) + " Gram entries differ from the trace form" : "",
                      static_cast<std::int64_t>(alg.dim()) * alg.dim()));

  auto diagonal = [&](const std::vector<int>& d) {
    MatQ want = MatQ::Zero(alg.dim(), alg.dim());
    for (int i = 0; i < alg.dim(); ++i) want(i, i) = d[i];
    return alg.killing_gram() == want;
  };
  if (alg.name() == "B1")
    out.push_back(exact("B1", "orthonormal_signature", "killing-forms", diagonal({1, 1, -1, -1, -1, 1}),
                        "k(H)=k(T)=k(iU)=1, k(U)=k(iH)=k(iT)=-1, off-diagonal 0"));
  if (alg.name() == "B4")
    out.push_back(exact("B4", "killing_values", "killing-forms", diagonal({0, 1, 1, -1, 0, 0}),
                        "k(e2)=k(e3)=1, k(e4)=-1, zero on e1, e5, e6"));
  return out;
}

std::vector<VerificationReport> triple_system_reports(const SuiteConfig& cfg) {
  std::vector<VerificationReport> out;
  for (const char* id : {"m_4.1", "m_4.2", "m_5.2", "m_5.3", "m_6.1", "m_6.2", "m_6.3", "m_7", "m_prod"}) {
    auto r = is_lie_triple_system(cfg.cat().subspace(id));
    r.context = id;
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Families, grading ledger, isomorphisms

std::vector<VerificationReport> semisimple_family_reports(const SuiteConfig& cfg) {
  const Catalog& cat = cfg.cat();
  const AlgebraPtr b1 = cat.algebra("B1");
  const Subspace h = cat.subspace("h_sec4");
  const std::string tag = "semisimple-families";
  std::vector<VerificationReport> out;

  const Subspace m0 = cat.bol_family("m_a", {q(0)});
  for (Rational a : {q(0), q(1, 4), q(-1, 4), q(1, 2), q(-1, 2), q(3, 4), q(-3, 4), q(3, 2), q(2)}) {
    const Subspace m = cat.bol_family("m_a", {a});
    const std::string ctx = "m_a(a=" + to_string(a) + ")";
    auto v = test_complement(m, h);
    out.push_back(exact(ctx, "bol_complement", tag, v.bol(), fmt(m)));

    const Subspace d = derived_space(m);
    const Subspace printed(b1, {b1->combo({{"iH", 1}}), b1->combo({{"U", 1}, {"T", a}}),
                                b1->combo({{"iT", 1}, {"iU", a}})});
    out.push_back(exact(ctx, "derived_space_printed", tag, d == printed, fmt(d)));

    auto c = compactness_check(d);
    const bool expect = abs(a) < 1;
    std::string detail = std::string("compact=") + (c.compact ? "true" : "false") +
                         " inertia(+,-,0)=(" + std::to_string(c.inertia.positive) + "," +
                         std::to_string(c.inertia.negative) + "," + std::to_string(c.inertia.zero) + ")";
    if (c.witness) detail += " witness " + format_vector(*b1, *c.witness) + " k=" + to_string(c.witness_killing);
    out.push_back(exact(ctx, "compact_iff_abs_a_below_1", tag, c.compact == expect, detail));

    auto inv = angle_invariant(m, m0);
    const double e = 1.0 / (1.0 - a.convert_to<double>() * a.convert_to<double>());
    AngleInvariant want;
    want.spectrum = {{1.0, 0.0}, {e, 0.0}, {e, 0.0}};
    std::sort(want.spectrum.begin(), want.spectrum.end());
    VerificationReport r = detail::make_report(ctx, "angle_invariant_vs_m0", tag, 1, 0, spectrum_distance(inv, want),
                                               1e-12);
    r.seed.reset();
    r.invariant = inv.to_json();
    out.push_back(r);
  }

  for (Rational d : {q(1, 2), q(1), q(2)}) {
    const Subspace m = cat.bol_family("m_d", {d});
    const std::string ctx = "m_d(d=" + to_string(d) + ")";
    out.push_back(exact(ctx, "bol_complement", tag, test_complement(m, h).bol(), fmt(m)));
    auto c = compactness_check(derived_space(m));
    const bool ok = !c.compact && c.witness && c.witness_killing == 0;
    out.push_back(exact(ctx, "derived_noncompact_isotropic_witness", tag, ok,
                        c.witness ? "witness " + format_vector(*b1, *c.witness) + " k=" + to_string(c.witness_killing)
                                  : "no witness"));
  }
  return out;
}

std::vector<VerificationReport> semidirect_family_reports(const SuiteConfig& cfg) {
  const Catalog& cat = cfg.cat();
  const AlgebraPtr b4 = cat.algebra("B4");
  const Subspace h = cat.subspace("h_sec7_f");
  const std::string tag = "semidirect-family";
  std::vector<VerificationReport> out;
  const Subspace m000 = cat.bol_family("m_b3c3c2", {q(0), q(0), q(0)});

  const std::vector<std::array<Rational, 3>> points{{q(0), q(0), q(0)},         {q(1, 2), q(0), q(0)},
                                                    {q(3, 10), q(2, 5), q(7, 3)}, {q(2), q(1), q(-1)},
                                                    {q(0), q(-3, 4), q(5)},      {q(-4, 3), q(1, 2), q(1, 5)}};
  for (const auto& [b3, c3, c2] : points) {
    const Subspace m = cat.bol_family("m_b3c3c2", {b3, c3, c2});
    const std::string ctx =
        "m_b3c3c2(" + to_string(b3) + "," + to_string(c3) + "," + to_string(c2) + ")";
    out.push_back(exact(ctx, "bol_complement", tag, test_complement(m, h).bol(), fmt(m)));

    // [m, m] = <d1, d2, d3> with <d1, d2> an ideal; k(d3) < 0 iff inside the disc.
    const VecQ d1 = b4->combo({{"e6", 1 - b3 * b3}, {"e1", -c3}, {"e5", -c3 * b3}});
    const VecQ d2 = b4->combo({{"e5", 1 - c3 * c3}, {"e1", b3}, {"e6", -c3 * b3}});
    const VecQ d3 = b4->combo({{"e4", 1}, {"e3", c3}, {"e2", b3}, {"e5", c2 * c3}, {"e6", b3 * c2}});
    const Subspace derived = derived_space(m);
    const Subspace printed(b4, {d1, d2, d3});
    const Subspace ideal(b4, std::vector<VecQ>{d1, d2});
    const bool is_ideal_in = derived.contains(ideal) && ideal.contains(bracket_space(derived, ideal));
    const Rational kd3 = killing<Rational>(*b4, d3, d3);
    const bool inside = b3 * b3 + c3 * c3 < 1;
    out.push_back(exact(ctx, "derived_space_d1_d2_d3", tag, derived == printed && is_ideal_in,
                        "derived " + fmt(derived)));
    out.push_back(exact(ctx, "k_d3_negative_iff_disc", tag, (kd3 < 0) == inside,
                        "k(d3)=" + to_string(kd3) + (inside ? " inside" : " outside") + " the unit disc"));

    auto inv = angle_invariant(m, m000);
    const double dd = (b3 * b3 + c3 * c3).convert_to<double>();
    AngleInvariant want;
    want.spectrum = {{1.0, 0.0}, {1.0 / (1.0 - dd), 0.0}};
    std::sort(want.spectrum.begin(), want.spectrum.end());
    VerificationReport r = detail::make_report(ctx, "angle_invariant_vs_m000", tag, 1, 0,
                                               spectrum_distance(inv, want), 1e-12);
    r.seed.reset();
    r.pass = r.pass && inv.degenerate && inv.reduced && inv.kernel_m1 == 1 && inv.kernel_ref == 1;
    r.invariant = inv.to_json();
    out.push_back(r);
  }
  return out;
}

std::vector<VerificationReport> grading_ledger_reports(const SuiteConfig& cfg) {
  const Catalog& cat = cfg.cat();
  const std::string tag = "bruck-left-a";
  std::vector<VerificationReport> out;
  auto witness_text = [](const LieAlgebra& alg, const std::optional<BracketWitness>& w) {
    if (!w) return std::string("no witness");
    return "[" + format_vector(alg, w->left) + ", " + format_vector(alg, w->right) + "] = " +
           format_vector(alg, w->bracket);
  };

  {
    auto g = bruck_grading(cat.bol_family("m_a", {q(0)}), cat.subspace("h_sec4"));
    out.push_back(exact("B1:(m_a(0), h_sec4)", "bruck_grading", tag, g.all()));
  }
  for (Rational c2 : {q(0), q(3), q(-1, 2)}) {
    auto g = bruck_grading(cat.bol_family("m_b3c3c2", {q(0), q(0), c2}), cat.subspace("h_sec7_f"));
    out.push_back(exact("B4:(m_b3c3c2(0,0," + to_string(c2) + "), h_sec7_f)", "bruck_grading", tag, g.all()));
  }
  {
    const Subspace m = cat.subspace("m_5.3"), h = cat.subspace("h3_sec5_k1");
    auto a = left_a_check(m, h);
    auto g = bruck_grading(m, h);
    out.push_back(exact("B2:(m_5.3, h3_sec5_k1)", "left_a_without_grading", tag, a.reductive && !g.all(),
                        "[m,m] in h: " + std::string(g.mm_in_h ? "yes" : "no") + "; " +
                            witness_text(*m.algebra(), g.witness)));
  }
  {
    const Subspace m = cat.bol_family("m_a", {q(1, 2)});
    auto a = left_a_check(m, cat.subspace("h_sec4"));
    out.push_back(exact("B1:(m_a(1/2), h_sec4)", "left_a_fails", tag, !a.reductive,
                        witness_text(*m.algebra(), a.witness)));
  }
  {
    const Rational d(1, 2);
    const Subspace m = cat.bol_family("m_b3c3c2", {d, q(0), q(0)});
    const AlgebraPtr b4 = cat.algebra("B4");
    auto a = left_a_check(m, cat.subspace("h_sec7_f"));
    const bool printed = a.witness && a.witness->left == b4->e(3) &&
                         a.witness->right == b4->combo({{"e1", 1}, {"e5", d}}) &&
                         a.witness->bracket == b4->combo({{"e6", d}});
    out.push_back(exact("B4:(m_b3c3c2(1/2,0,0), h_sec7_f)", "left_a_fails_printed_witness", tag,
                        !a.reductive && printed, witness_text(*b4, a.witness)));
  }
  return out;
}

std::vector<VerificationReport> isomorphism_reports(const SuiteConfig& cfg) {
  (void)cfg;
  const std::string tag = "isomorphism-systems";
  std::vector<VerificationReport> out;
  for (Rational a : {q(1, 2), q(0), q(1, 4), q(-3, 4), q(3, 2)}) {
    auto sols = solve_iso_psl2c(a);
    std::vector<Rational> want{-a};
    if (a != 0) want.push_back(1 / a);
    std::sort(want.begin(), want.end());
    bool ok = sols.size() == want.size();
    std::ostringstream os;
    os << "b in {";
    for (std::size_t i = 0; i < sols.size(); ++i) {
      ok = ok && sols[i].b == want[i];
      for (const auto& r : sols[i].residuals) ok = ok && r == 0;
      ok = ok && sols[i].admissible == (abs(sols[i].b) < 1);
      os << (i ? ", " : "") << to_string(sols[i].b) << (sols[i].admissible ? "*" : "");
    }
    os << "} (* admissible), residuals exact";
    out.push_back(exact("iso-psl2c(a=" + to_string(a) + ")", "solutions_b_minus_a_and_inverse", tag, ok, os.str()));
  }

  for (Rational c2 : {q(0), q(7, 3), q(-2)}) {
    auto s = solve_iso_semidirect(q(3, 10), q(2, 5), c2);
    const bool ok = s.exact && s.d_exact && *s.d_exact == q(1, 2) && s.gamma_verified && s.alpha_verified;
    out.push_back(exact("iso-semidirect(3/10,2/5," + to_string(c2) + ")", "representative_d_half", tag, ok,
                        "d=" + (s.d_exact ? to_string(*s.d_exact) : std::to_string(s.d)) +
                            " alpha(b2,b4)=(" + std::to_string(s.alpha_b2_b4[0]) + "," +
                            std::to_string(s.alpha_b2_b4[1]) + ")"));
  }
  {
    auto s = solve_iso_semidirect(q(1, 2), q(1, 3), q(1));
    VerificationReport r = detail::make_report("iso-semidirect(1/2,1/3,1)", "representative_float_verified", tag, 1,
                                               0, s.defect, 1e-12);
    r.seed.reset();
    r.pass = r.pass && s.gamma_verified && s.alpha_verified;
    r.detail = "d=" + sci(s.d);
    out.push_back(r);
  }
  {
    bool threw = false;
    try {
      solve_iso_semidirect(q(1), q(1, 2), q(0));
    } catch (const DomainError&) {
      threw = true;
    }
    out.push_back(exact("iso-semidirect(1,1/2,0)", "outside_disc_rejected", tag, threw));
  }
  return out;
}

std::vector<VerificationReport> scan_reports(const SuiteConfig& cfg, int n_samples) {
  std::vector<VerificationReport> out;
  append(out, bol_complement_scan(Ansatz::semisimple, n_samples, cfg.seed).reports);
  append(out, bol_complement_scan(Ansatz::semidirect, n_samples, cfg.seed).reports);
  return out;
}

// ---------------------------------------------------------------------------
// Exponential and loops

std::vector<VerificationReport> exponential_reports(const SuiteConfig& cfg, int n_samples) {
  const std::string tag = "semidirect-exponential";
  const double tol = cfg.tol_or(1e-9);
  std::vector<VerificationReport> out;
  Rng rng(cfg.seed, stream_id("exp-oracle"));
  double worst = 0.0, worst_near = 0.0, worst_inverse = 0.0;
  const int near = std::max(1, n_samples / 10);
  for (int i = 0; i < n_samples; ++i) {
    double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2), c = rng.uniform(-2, 2);
    if (i < near) {
      // Put Delta = a^2 + bc inside (-1e-6, 1e-6), where the series branch runs.
      while (std::abs(b) < 0.1) b = rng.uniform(-2, 2);
      const double delta = rng.uniform(-9e-7, 9e-7);
      c = (delta - a * a) / b;
    }
    Mat2 X1, X2;
    X1 << a, b, c, -a;
    const double k = rng.uniform(-2, 2), u = rng.uniform(-2, 2), y = rng.uniform(-2, 2);
    X2 << k, u, y, -k;
    const SemidirectElement e = exp_semidirect(X1, X2);
    const double err = rel_distance(e, ode_exp_oracle(X1, X2, 4000));
    (i < near ? worst_near : worst) = std::max(i < near ? worst_near : worst, err);
    const SemidirectElement back = semidirect_mul(e, exp_semidirect(X1, X2, -1.0));
    worst_inverse = std::max(worst_inverse, semidirect_distance(back, SemidirectElement{}));
  }
  auto r = detail::make_report("exp_semidirect", "rk4_oracle_relative_error", tag, n_samples, cfg.seed,
                               std::max(worst, worst_near), tol);
  r.detail = "generic " + sci(worst) + ", near-parabolic (" + std::to_string(near) + ") " + sci(worst_near);
  out.push_back(r);
  out.push_back(detail::make_report("exp_semidirect", "one_parameter_inverse", tag, n_samples, cfg.seed, worst_inverse,
                                    cfg.tol_or(1e-10)));

  double seam = 0.0;
  for (double d : {1e-6, -1e-6, 1.0000001e-6, -1.0000001e-6, 0.9999999e-6, -0.9999999e-6})
    for (double t : {0.5, 1.0, 2.0}) {
      auto closed = exp_coefficients(d, t, 1), series = exp_coefficients(d, t, 2);
      const double scale = std::max({1.0, std::abs(series.C), std::abs(series.D)});
      seam = std::max(seam, std::max(std::abs(closed.C - series.C), std::abs(closed.D - series.D)) / scale);
    }
  auto s = detail::make_report("exp_semidirect", "series_seam_agreement", tag, 18, 0, seam, 1e-11);
  s.seed.reset();
  out.push_back(s);
  return out;
}

namespace {

template <class G>
std::vector<VerificationReport> loop_axioms(const LoopContext<G>& ctx, const SuiteConfig& cfg, int samples) {
  std::vector<VerificationReport> out;
  out.push_back(check_identity(ctx, samples, cfg.seed, cfg.tol_or(1e-10)));
  out.push_back(check_sharp_transitivity(ctx, samples, cfg.seed, cfg.tol_or(1e-9)));
  out.push_back(check_bol(ctx, samples, cfg.seed, cfg.tol_or(1e-8)));
  out.push_back(check_bol_identity(ctx, samples, cfg.seed, cfg.tol_or(1e-8)));
  out.push_back(check_divisions(ctx, samples, cfg.seed, cfg.tol_or(1e-9)));
  return out;
}

}  // namespace

std::vector<VerificationReport> global_loop_reports(const SuiteConfig& cfg) {
  std::vector<VerificationReport> out;
  append(out, loop_axioms(hyperbolic_space_loop(), cfg, cfg.samples));
  out.push_back(check_l0_realizations(cfg.samples, cfg.seed, cfg.tol_or(1e-9)));
  append(out, loop_axioms(scheerer_loop(), cfg, cfg.samples));
  out.push_back(check_scheerer_normal_subgroup(cfg.samples, cfg.seed));
  append(out, loop_axioms(pseudo_euclidean_loop(), cfg, cfg.samples));
  append(out, check_pseudo_euclidean_bridge(cfg.samples, cfg.seed));
  return out;
}

std::vector<VerificationReport> local_loop_reports(const SuiteConfig& cfg) {
  std::vector<VerificationReport> out;
  const int n = std::max(1, std::min(cfg.samples, 50));
  append(out, loop_axioms(loop_La(0.5), cfg, n));
  append(out, loop_axioms(loop_Lbcc(0.5, 0.0, 0.0), cfg, n));
  append(out, loop_axioms(loop_Lbcc(0.3, 0.4, 2.0), cfg, n));
  {
    auto ctx = loop_Lbcc(2.0, 0.0, 1.0);
    out.push_back(check_sharp_transitivity(ctx, n, cfg.seed, cfg.tol_or(1e-9)));
    out.push_back(check_bol(ctx, n, cfg.seed, cfg.tol_or(1e-8)));
  }
  {
    auto w = lbcc_fixed_point(2.0, 0.0, 1.0);
    VerificationReport r;
    r.context = "L_bcc(2,0,1)";
    r.check = "exp_m_not_sharply_transitive";
    r.tag = "semidirect-family";
    r.samples = 1;
    r.max_residual = std::max(w.period_residual, w.fixed_residual);
    r.tolerance = 1e-9;
    r.pass = r.max_residual <= 1e-9 && w.distance_from_identity > 0.1;
    std::ostringstream os;
    os << "exp(X*) = 1 with X* = (" << w.mu_period.transpose() << "); c = exp(X*/2) at distance "
       << w.distance_from_identity << " from 1 fixes the coset (" << w.fixed_coset.transpose() << ")";
    r.detail = os.str();
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Obstructions

std::vector<VerificationReport> intersection_reports(const SuiteConfig& cfg) {
  const Catalog& cat = cfg.cat();
  std::vector<VerificationReport> out;
  using Terms = std::vector<std::vector<std::pair<std::string, Rational>>>;
  auto check = [&](const std::string& m_id, const std::string& h_id, const Terms& expected, const std::string& tag) {
    const Subspace m = cat.subspace(m_id), h = cat.subspace(h_id);
    const AlgebraPtr alg = m.algebra();
    std::vector<VecQ> vs;
    for (const auto& t : expected) vs.push_back(alg->combo(t));
    const Subspace want(alg, vs);
    const Subspace got = intersect(m, h);
    out.push_back(exact(m_id + " cap " + h_id, "intersection", tag, got == want, fmt(got)));
  };
  const Rational one(1), mone(-1);
  check("m_prod", "h1_prod", {}, "product-case");
  check("m_prod", "h2_prod", {{{"U1", one}, {"T1", one}, {"U2", mone}, {"T2", mone}}}, "product-case");
  check("m_4.1", "h_sec4", {}, "semisimple-stabilizer");
  check("m_4.2", "h_sec4", {{{"iT", one}}, {{"U", one}}}, "semisimple-stabilizer");
  check("m_5.2", "h1_sec5", {{{"e2", one}}}, "four-dim-stabilizers");
  check("m_5.2", "h3_sec5", {{{"e4", one}}}, "four-dim-stabilizers");
  check("m_6.1", "h_sec6.1", {{{"e2", one}}, {{"e3", one}}}, "euclidean-motions");
  const std::string t7 = "six-dim-stabilizers";
  check("m_6.2", "h_sec7_a", {{{"e2", one}}}, t7);
  check("m_6.2", "h_sec7_b", {{{"e6", one}}}, t7);
  check("m_6.2", "h_sec7_c", {}, t7);
  check("m_6.2", "h_sec7_d", {{{"e2", one}}}, t7);
  check("m_6.2", "h_sec7_e", {{{"e2", one}}, {{"e4", one}}}, t7);
  check("m_6.2", "h_sec7_f", {{{"e4", one}}, {{"e6", one}}}, t7);
  check("m_6.3", "h_sec7_a", {{{"e2", one}}}, t7);
  check("m_6.3", "h_sec7_b", {{{"e1", one}}}, t7);
  check("m_6.3", "h_sec7_c", {}, t7);
  check("m_6.3", "h_sec7_d", {{{"e2", one}}}, t7);
  check("m_6.3", "h_sec7_e", {{{"e2", one}}, {{"e3", one}}}, t7);
  check("m_6.3", "h_sec7_f", {}, t7);
  return out;
}

std::vector<VerificationReport> conjugacy_reports(const SuiteConfig& cfg) {
  const Catalog& cat = cfg.cat();
  const std::string tag = "conjugacy-obstruction";
  std::vector<VerificationReport> out;
  auto verdict = [&](const std::string& ctx, const Subspace& m, const Subspace& h, bool expect,
                     const std::string& expect_sig = {}) {
    auto v = lemma3_obstruction(m, h);
    bool ok = v.conflict == expect && (expect_sig.empty() || v.signature == expect_sig);
    std::string detail = v.conflict ? "conflict " + v.signature + ": " + format_vector(*m.algebra(), *v.witness_m) +
                                          " in m, " + format_vector(*m.algebra(), *v.witness_h) + " in h"
                                    : "no conflict among " + std::to_string(v.candidates_m) + " x " +
                                          std::to_string(v.candidates_h) + " lattice candidates";
    out.push_back(exact(ctx, expect ? "conjugate_elements_found" : "no_conjugate_elements", tag, ok, detail));
  };
  verdict("m_prod vs h1_prod", cat.subspace("m_prod"), cat.subspace("h1_prod"), true);
  {
    const AlgebraPtr p = cat.algebra("sl2xsl2");
    const VecQ img = product_conjugate_by_U(p->combo({{"H1", 1}, {"H2", 1}}));
    out.push_back(exact("sl2xsl2", "Ad(1,U)(H1+H2) = H1-H2", tag, img == p->combo({{"H1", 1}, {"H2", -1}}),
                        format_vector(*p, img)));
  }
  verdict("m_5.2 vs h2_sec5", cat.subspace("m_5.2"), cat.subspace("h2_sec5"), true, "parabolic");
  verdict("m_5.3 vs h2_sec5", cat.subspace("m_5.3"), cat.subspace("h2_sec5"), false);
  verdict("m_5.3 vs h3_sec5", cat.subspace("m_5.3"), cat.subspace("h3_sec5"), false);
  {
    const AlgebraPtr c7 = cat.algebra("case7");
    const Subspace m = cat.subspace("m_7");
    const std::vector<std::pair<std::string, VecQ>> gens{{"hyperbolic", c7->e(1)},
                                                         {"elliptic", c7->e(2)},
                                                         {"parabolic", c7->e(1) + c7->e(2)}};
    for (const auto& [kind, g] : gens)
      verdict("m_7 vs <" + format_vector(*c7, g) + ">", m, Subspace(c7, std::vector<VecQ>{g}), true, kind);
  }
  verdict("m_6.2 vs h_sec7_c", cat.subspace("m_6.2"), cat.subspace("h_sec7_c"), true, "parabolic");
  verdict("m_6.3 vs h_sec7_c", cat.subspace("m_6.3"), cat.subspace("h_sec7_c"), false);
  verdict("m_4.1 vs h_sec4", cat.subspace("m_4.1"), cat.subspace("h_sec4"), false);
  return out;
}

std::vector<VerificationReport> divergence_reports(const SuiteConfig& cfg) {
  (void)cfg;
  std::vector<VerificationReport> out;
  auto r = check_divergence(3, 7);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : divergence_demo(7)) rows.push_back({{"c", row.c}, {"norm", row.norm}});
  r.invariant = rows;
  out.push_back(r);
  return out;
}

std::vector<VerificationReport> nonbol_reports(const SuiteConfig& cfg) {
  std::vector<VerificationReport> out;
  const int n = cfg.samples;
  const std::vector<std::pair<std::string, Vec3>> directions{{"e_z", Vec3(0, 0, 1)}, {"tilted", Vec3(0.5, 0, 1)}};
  for (const auto& [name, dir] : directions) {
    auto ctx = nonbol_loop(dir);
    out.push_back(check_sharp_transitivity(ctx, n, cfg.seed, cfg.tol_or(1e-9)));
    out.push_back(check_divisions(ctx, n, cfg.seed, cfg.tol_or(1e-9)));
    out.push_back(exceeds(check_bol(ctx, n, cfg.seed, 1e-8), "bol_property_violated", 0.1));
    auto w = nonbol_witness(dir);
    VerificationReport r;
    r.context = ctx.label;
    r.check = "bol_failure_witness";
    r.tag = ctx.tag;
    r.samples = 1;
    r.max_residual = w.rr_residual;
    r.tolerance = 0.1;
    r.pass = w.rr_residual > 0.1 && w.commutator_offset > 1e-6;
    r.detail = "(lambda rho)^2 off the section by " + sci(w.rr_residual) +
               "; lambda rho lambda rho^-1 leaves Lambda by " + sci(w.commutator_offset);
    out.push_back(r);
    auto k = check_k_conjugation(dir, n, cfg.seed);
    if (name == "e_z") out.push_back(k);
    else out.push_back(exceeds(k, "k_conjugation_breaks", 0.1));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Builder = std::function<std::vector<VerificationReport>(const SuiteConfig&)>;

const std::vector<std::pair<std::string, std::vector<Builder>>>& registry() {
  static const std::vector<std::pair<std::string, std::vector<Builder>>> r{
      {"algebra-core",
       {[](const SuiteConfig& c) {
          std::vector<VerificationReport> out;
          for (const auto& e : c.cat().list())
            if (e.kind == EntryKind::algebra) append(out, algebra_reports(*c.cat().algebra(e.id)));
          return out;
        },
        triple_system_reports,
        [](const SuiteConfig& c) { return c.cat().validate(); }}},
      {"bol-families",
       {semisimple_family_reports, semidirect_family_reports, grading_ledger_reports, isomorphism_reports,
        [](const SuiteConfig& c) { return scan_reports(c); }}},
      {"loops-global",
       {[](const SuiteConfig& c) { return exponential_reports(c); }, global_loop_reports, local_loop_reports}},
      {"obstructions", {intersection_reports, conjugacy_reports, divergence_reports}},
      {"nonbol", {nonbol_reports}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, _] : registry()) v.push_back(id);
    v.push_back("theorem-main");
    return v;
  }();
  return ids;
}

bool has_suite(const std::string& id) {
  const auto& ids = suite_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<VerificationReport> run_suite(const std::string& id, const SuiteConfig& cfg) {
  std::vector<VerificationReport> out;
  for (const auto& [sid, builders] : registry()) {
    if (id != "theorem-main" && sid != id) continue;
    for (const auto& b : builders) append(out, b(cfg));
  }
  if (out.empty() && !has_suite(id)) throw LookupError("unknown suite '" + id + "'");
  return out;
}

std::vector<VerificationReport> verify_target(const std::string& id, const SuiteConfig& cfg) {
  if (id == "L0" || id == "scheerer" || id == "pseudo-euclidean") {
    std::vector<VerificationReport> out;
    if (id == "L0") {
      out = loop_axioms(hyperbolic_space_loop(), cfg, cfg.samples);
      out.push_back(check_l0_realizations(cfg.samples, cfg.seed, cfg.tol_or(1e-9)));
    } else if (id == "scheerer") {
      out = loop_axioms(scheerer_loop(), cfg, cfg.samples);
    } else {
      out = loop_axioms(pseudo_euclidean_loop(), cfg, cfg.samples);
    }
    return out;
  }
  if (id == "nonbol") return nonbol_reports(cfg);

  const Catalog& cat = cfg.cat();
  if (!cat.has(id)) throw LookupError("unknown target '" + id + "'");
  for (const auto& e : cat.list()) {
    if (e.id != id) continue;
    if (e.kind == EntryKind::algebra) return algebra_reports(*cat.algebra(id));
    break;
  }
  std::vector<VerificationReport> out;
  for (auto& r : cat.validate())
    if (r.context == id) out.push_back(r);
  return out;
}

}  // namespace bolkit
