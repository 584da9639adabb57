#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bolkit/matrix_groups.hpp"
#include "bolkit/report.hpp"

namespace bolkit {

using VecX = Eigen::VectorXd;

struct ContextError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A loop realised on G/H through a section. Loop elements are coset data:
/// coordinates that identify a coset uniquely (`coset` is constant on gH),
/// and `section` returns the section element of the coset with that datum.
template <class G>
struct LoopContext {
  std::string label;
  std::string tag;
  int dim = 3;
  bool global = true;  // false: sampling restricted to a coordinate box
  bool bol = true;     // whether right division may use the Bol formula
  double box = 1.0;    // sampling box for data, |datum_i| <= box
  G identity{};
  std::function<G(const G&, const G&)> mul;
  std::function<G(const G&)> inv;
  std::function<double(const G&, const G&)> distance;
  std::function<VecX(const G&)> coset;
  std::function<G(const VecX&)> section;
  /// Difference of two data; overridden where a coordinate is an angle.
  std::function<VecX(const VecX&, const VecX&)> diff = [](const VecX& a, const VecX& b) -> VecX {
    return a - b;
  };
};

// ---------------------------------------------------------------------------
// Damped Newton with a central-difference Jacobian.

struct NewtonResult {
  VecX x;
  double residual = INFINITY;
  int iterations = 0;
  bool converged = false;
};

NewtonResult newton_solve(const std::function<VecX(const VecX&)>& F, const VecX& x0, int max_iter = 200,
                          double tol = 1e-12, double fd_step = 1e-7);

// ---------------------------------------------------------------------------
// Loop operations

template <class G>
VecX loop_mul(const LoopContext<G>& ctx, const VecX& x, const VecX& y) {
  return ctx.coset(ctx.mul(ctx.section(x), ctx.section(y)));
}

template <class G>
VecX identity_datum(const LoopContext<G>& ctx) {
  return ctx.coset(ctx.identity);
}

template <class G>
VecX left_divide(const LoopContext<G>& ctx, const VecX& a, const VecX& b) {
  return ctx.coset(ctx.mul(ctx.inv(ctx.section(a)), ctx.section(b)));
}

/// The z with sigma(z) a H = b H, found numerically from `init`.
template <class G>
NewtonResult solve_translation(const LoopContext<G>& ctx, const VecX& a, const VecX& b, const VecX& init,
                               int max_iter = 200) {
  const G ga = ctx.section(a);
  auto F = [&](const VecX& z) -> VecX { return ctx.diff(ctx.coset(ctx.mul(ctx.section(z), ga)), b); };
  return newton_solve(F, init, max_iter);
}

struct DivisionResult {
  VecX x;
  bool fallback = false;
  bool converged = true;
  double residual = 0.0;
};

/// x with x * a = b. Bol contexts use x = a^-1 * ((a * b) * a^-1); other
/// contexts fall back to damped Newton along the section coordinates.
template <class G>
DivisionResult right_divide(const LoopContext<G>& ctx, const VecX& b, const VecX& a) {
  DivisionResult out;
  if (ctx.bol) {
    const VecX ainv = ctx.coset(ctx.inv(ctx.section(a)));
    out.x = loop_mul(ctx, ainv, loop_mul(ctx, loop_mul(ctx, a, b), ainv));
  } else {
    NewtonResult n = solve_translation(ctx, a, b, b, 200);
    out.x = n.x;
    out.fallback = true;
    out.converged = n.converged && n.residual <= 1e-8;
  }
  out.residual = ctx.diff(loop_mul(ctx, out.x, a), b).norm();
  return out;
}

template <class G>
VecX sample_datum(const LoopContext<G>& ctx, Rng& rng) {
  VecX v(ctx.dim);
  for (int i = 0; i < ctx.dim; ++i) v(i) = rng.uniform(-ctx.box, ctx.box);
  return v;
}

namespace detail {
inline VerificationReport make_report(const std::string& context, const std::string& check, const std::string& tag,
                                      std::int64_t samples, std::uint64_t seed, double residual, double tol) {
  VerificationReport r;
  r.context = context;
  r.check = check;
  r.tag = tag;
  r.samples = samples;
  r.seed = seed;
  r.max_residual = residual;
  r.tolerance = tol;
  r.pass = std::isfinite(residual) && residual <= tol;
  return r;
}
inline std::string scope(bool global) { return global ? "scope=global" : "scope=local"; }
}  // namespace detail

/// sigma(H) = 1, sigma lands in the requested coset, and e is a two-sided
/// identity.
template <class G>
VerificationReport check_identity(const LoopContext<G>& ctx, int samples, std::uint64_t seed, double tol = 1e-10) {
  Rng rng(seed, stream_id(ctx.label + "/identity"));
  const VecX e = identity_datum(ctx);
  double worst = ctx.distance(ctx.section(e), ctx.identity);
  for (int i = 0; i < samples; ++i) {
    const VecX x = sample_datum(ctx, rng);
    worst = std::max(worst, ctx.diff(ctx.coset(ctx.section(x)), x).norm());
    worst = std::max(worst, ctx.diff(loop_mul(ctx, e, x), x).norm());
    worst = std::max(worst, ctx.diff(loop_mul(ctx, x, e), x).norm());
  }
  auto r = detail::make_report(ctx.label, "identity_axioms", ctx.tag, samples, seed, worst, tol);
  r.detail = detail::scope(ctx.global);
  return r;
}

/// a * (a \ b) = b and (b / a) * a = b.
template <class G>
VerificationReport check_divisions(const LoopContext<G>& ctx, int samples, std::uint64_t seed, double tol = 1e-9) {
  Rng rng(seed, stream_id(ctx.label + "/divisions"));
  double worst = 0.0;
  int fallbacks = 0, diverged = 0;
  for (int i = 0; i < samples; ++i) {
    const VecX a = sample_datum(ctx, rng), b = sample_datum(ctx, rng);
    worst = std::max(worst, ctx.diff(loop_mul(ctx, a, left_divide(ctx, a, b)), b).norm());
    const DivisionResult d = right_divide(ctx, b, a);
    if (d.fallback) ++fallbacks;
    if (!d.converged) ++diverged;
    worst = std::max(worst, d.residual);
  }
  auto r = detail::make_report(ctx.label, "division_round_trip", ctx.tag, samples, seed, worst, tol);
  r.detail = detail::scope(ctx.global) + " right_division=" + (ctx.bol ? "bol_formula" : "numerical") +
             (fallbacks ? " fallbacks=" + std::to_string(fallbacks) : "") +
             (diverged ? " diverged=" + std::to_string(diverged) : "");
  return r;
}

/// r s r must lie in the section image: distance(rsr, sigma(coset(rsr))).
template <class G>
VerificationReport check_bol(const LoopContext<G>& ctx, int samples, std::uint64_t seed, double tol = 1e-8) {
  Rng rng(seed, stream_id(ctx.label + "/bol"));
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const G r = ctx.section(sample_datum(ctx, rng));
    const G s = ctx.section(sample_datum(ctx, rng));
    const G rsr = ctx.mul(ctx.mul(r, s), r);
    worst = std::max(worst, ctx.distance(rsr, ctx.section(ctx.coset(rsr))));
  }
  auto r = detail::make_report(ctx.label, "bol_section_rsr", ctx.tag, samples, seed, worst, tol);
  r.detail = detail::scope(ctx.global);
  return r;
}

/// a * (b * (a * x)) = (a * (b * a)) * x.
template <class G>
VerificationReport check_bol_identity(const LoopContext<G>& ctx, int samples, std::uint64_t seed,
                                      double tol = 1e-8) {
  Rng rng(seed, stream_id(ctx.label + "/bol-identity"));
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const VecX a = sample_datum(ctx, rng), b = sample_datum(ctx, rng), x = sample_datum(ctx, rng);
    const VecX lhs = loop_mul(ctx, a, loop_mul(ctx, b, loop_mul(ctx, a, x)));
    const VecX rhs = loop_mul(ctx, loop_mul(ctx, a, loop_mul(ctx, b, a)), x);
    worst = std::max(worst, ctx.diff(lhs, rhs).norm());
  }
  auto r = detail::make_report(ctx.label, "bol_identity", ctx.tag, samples, seed, worst, tol);
  r.detail = detail::scope(ctx.global);
  return r;
}

/// For random cosets aH, bH: a section element z with z a H = b H exists
/// (residual <= tol) and perturbed restarts converge to the same z.
template <class G>
VerificationReport check_sharp_transitivity(const LoopContext<G>& ctx, int samples, std::uint64_t seed,
                                            double tol = 1e-9, double uniq_tol = 1e-7) {
  Rng rng(seed, stream_id(ctx.label + "/sharp"));
  double worst = 0.0, spread = 0.0;
  int failures = 0;
  for (int i = 0; i < samples; ++i) {
    const VecX a = sample_datum(ctx, rng), b = i == 0 ? a : sample_datum(ctx, rng);
    const VecX start = ctx.bol ? right_divide(ctx, b, a).x : b;
    const NewtonResult first = solve_translation(ctx, a, b, start);
    if (!first.converged) ++failures;
    worst = std::max(worst, first.residual);
    if (i == 0) worst = std::max(worst, ctx.diff(first.x, identity_datum(ctx)).norm());
    for (int k = 0; k < 2; ++k) {
      VecX init = first.x;
      for (int j = 0; j < ctx.dim; ++j) init(j) += rng.uniform(-0.2, 0.2) * ctx.box;
      const NewtonResult again = solve_translation(ctx, a, b, init);
      if (again.converged && again.residual <= tol)
        spread = std::max(spread, ctx.diff(again.x, first.x).norm());
    }
  }
  auto r = detail::make_report(ctx.label, "sharp_transitivity", ctx.tag, samples, seed, worst, tol);
  r.pass = r.pass && failures == 0 && spread <= uniq_tol;
  r.detail = detail::scope(ctx.global) + " restart_spread=" + std::to_string(spread);
  if (failures) r.detail += " newton_failures=" + std::to_string(failures);
  return r;
}

// ---------------------------------------------------------------------------
// Concrete contexts

/// SL2(C)/SU2 with the positive Hermitian section; data are the coordinates
/// (x, y, z) of log sigma = x H + y T + z iU.
LoopContext<Mat2c> hyperbolic_space_loop();
/// The upper half space point of a datum, sigma(x) applied to j.
JQuaternion l0_point(const VecX& datum);
/// x o y = tau_{j,x}(y) computed from points only.
JQuaternion l0_mobius_mul(const JQuaternion& x, const JQuaternion& y);
/// Polar realisation against the Moebius one on random pairs.
VerificationReport check_l0_realizations(int samples, std::uint64_t seed, double tol = 1e-9);

/// Local loop with section exp(m_a); data are the hyperbolic space chart.
LoopContext<Mat2c> loop_La(double a);

struct ScheererElement {
  Mat2 A = Mat2::Identity();
  double phi = 0.0;
};
/// PSL2(R) x SO2 over H = {(R(t), 2t)}; data (log a, b, psi) with the
/// Iwasawa coordinates (a, b) of the hyperbolic plane factor.
LoopContext<ScheererElement> scheerer_loop();
/// Elements with trivial PSL2 part form a subgroup isomorphic to SO2.
VerificationReport check_scheerer_normal_subgroup(int samples, std::uint64_t seed);

/// PSL2(R) x| R^3 with the Bruck section exp(m_000); data are the
/// m-coordinates (l1, l2, l3) from factor_pseudo_euclidean.
LoopContext<SemidirectElement> pseudo_euclidean_loop();
/// omega / Omega round trips, intertwining of the action with the affine
/// model, norm invariance, and the plane description of the product.
std::vector<VerificationReport> check_pseudo_euclidean_bridge(int samples, std::uint64_t seed);

/// Section exp(m_{b3,c3,c2}); global iff b3^2 + c3^2 < 1.
LoopContext<SemidirectElement> loop_Lbcc(double b3, double c3, double c2);
/// Pair-matrix form of the complement basis (reference scaling).
std::array<std::pair<Mat2, Mat2>, 3> lbcc_basis(double b3, double c3, double c2);
SemidirectElement lbcc_exp(double b3, double c3, double c2, const Vec3& mu);

/// For b3^2 + c3^2 > 1, m contains X* != 0 with exp X* = 1. The element
/// c = exp(X*/2) of exp m is not the identity but fixes a coset gH, so the
/// equation z * gH = gH has the two solutions z = H and z = cH; exp m is
/// therefore not the image of a sharply transitive section.
struct FixedPointWitness {
  Vec3 mu_period;             // coordinates of X* in the complement basis
  double period_residual;     // distance of exp X* from the identity
  SemidirectElement element;  // exp(X*/2)
  double distance_from_identity;
  Vec3 fixed_coset;           // pseudo-euclidean datum of gH
  double fixed_residual;      // |datum(c gH) - datum(gH)|
};
FixedPointWitness lbcc_fixed_point(double b3, double c3, double c2);

/// Section conjugated by g: sigma'(xH) = g^-1 sigma(g x H / g H) g, which is
/// again sharply transitive on G/H. Requires a Bol context.
template <class G>
LoopContext<G> conjugate_section(const LoopContext<G>& ctx, const G& g) {
  LoopContext<G> out = ctx;
  out.label = ctx.label + "/conjugated";
  const G ginv = ctx.inv(g);
  const VecX gdatum = ctx.coset(g);
  auto base = std::make_shared<LoopContext<G>>(ctx);
  out.section = [base, g, ginv, gdatum](const VecX& x) {
    const VecX gx = base->coset(base->mul(g, base->section(x)));
    const VecX z = right_divide(*base, gx, gdatum).x;
    return base->mul(base->mul(ginv, base->section(z)), g);
  };
  out.bol = false;
  return out;
}

// ---------------------------------------------------------------------------
// Non-Bol loops on the euclidean planes of the pseudo-euclidean model

using Motion4 = Eigen::Matrix4d;

Motion4 motion(const Mat3& B, const Vec3& b);
Motion4 translation4(const Vec3& t);
/// Symmetric Lorentz boost taking e_z to the future unit timelike p.
Mat3 boost_to(const Vec3& p);
Motion4 z_rotation4(double t);

/// Section Lambda Sigma with Lambda the translations along `direction`
/// (which must be timelike) and Sigma the symmetric boosts. Data (p_x, p_y, s)
/// describe the plane {<p, v>_Q = s}.
LoopContext<Motion4> nonbol_loop(const Vec3& direction);

/// max over samples of the distance of g theta g^-1 from the section image,
/// g a rotation about the z axis.
VerificationReport check_k_conjugation(const Vec3& direction, int samples, std::uint64_t seed);

struct NonBolWitness {
  Motion4 lambda;
  Motion4 rho;
  double rr_residual;           // distance of (lambda rho)^2 from the section image
  double commutator_offset;     // |component of lambda rho lambda rho^-1 off Lambda|
};
NonBolWitness nonbol_witness(const Vec3& direction);

// ---------------------------------------------------------------------------

struct DivergenceRow {
  double c;
  Mat2 element;
  double second;     // real component of the forced section element
  double norm;
  double coset_residual;
};
/// Forced section elements for the cosets of ((1+c, 1), (c, 1)) in
/// PSL2(R) x R over H = {(((1, b), (0, 1)), b)}.
DivergenceRow divergence_element(double c);
std::vector<DivergenceRow> divergence_demo(int kmax = 7);
VerificationReport check_divergence(int kmin = 3, int kmax = 7);

}  // namespace bolkit
