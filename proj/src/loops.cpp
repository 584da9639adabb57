#include "bolkit/loops.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace bolkit {

namespace {

using C = std::complex<double>;

double wrap_angle(double x) { return std::remainder(x, 2 * std::numbers::pi); }

VecX vec3(const Vec3& v) { return VecX(v); }

}  // namespace

NewtonResult newton_solve(const std::function<VecX(const VecX&)>& F, const VecX& x0, int max_iter, double tol,
                          double fd_step) {
  NewtonResult res;
  res.x = x0;
  VecX f = F(res.x);
  res.residual = f.norm();
  const Eigen::Index n = x0.size();
  for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
    if (!std::isfinite(res.residual)) break;
    if (res.residual <= tol) {
      res.converged = true;
      return res;
    }
    Eigen::MatrixXd J(f.size(), n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double h = fd_step * std::max(1.0, std::abs(res.x(j)));
      VecX xp = res.x, xm = res.x;
      xp(j) += h;
      xm(j) -= h;
      J.col(j) = (F(xp) - F(xm)) / (2 * h);
    }
    const VecX step = J.colPivHouseholderQr().solve(-f);
    if (!step.allFinite()) break;
    double alpha = 1.0;
    bool improved = false;
    for (int k = 0; k < 40; ++k, alpha /= 2) {
      VecX trial = res.x + alpha * step;
      VecX ft;
      try {
        ft = F(trial);
      } catch (const std::exception&) {
        continue;
      }
      const double r = ft.norm();
      if (std::isfinite(r) && r < res.residual) {
        res.x = trial;
        f = ft;
        res.residual = r;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  res.converged = res.residual <= tol;
  return res;
}

// ---------------------------------------------------------------------------
// Hyperbolic space SL2(C)/SU2

namespace {

VecX hermitian_datum(const Mat2c& g) { return vec3(log_hermitian(Mat2c(g * g.adjoint())) / 2); }

void set_sl2c_group(LoopContext<Mat2c>& ctx) {
  ctx.identity = Mat2c::Identity();
  ctx.mul = [](const Mat2c& a, const Mat2c& b) -> Mat2c { return a * b; };
  ctx.inv = [](const Mat2c& a) -> Mat2c { return inverse_det1(a); };
  ctx.distance = [](const Mat2c& a, const Mat2c& b) { return psl_distance(a, b); };
  ctx.coset = hermitian_datum;
}

}  // namespace

LoopContext<Mat2c> hyperbolic_space_loop() {
  LoopContext<Mat2c> ctx;
  ctx.label = "L0";
  ctx.tag = "hyperbolic-space-loop";
  set_sl2c_group(ctx);
  ctx.section = [](const VecX& x) -> Mat2c { return exp_sl2<C>(hermitian_from_coords(Vec3(x))); };
  return ctx;
}

JQuaternion l0_point(const VecX& datum) {
  return mobius_J(exp_sl2<C>(hermitian_from_coords(Vec3(datum))), JQuaternion{0.0, 1.0});
}

JQuaternion l0_mobius_mul(const JQuaternion& x, const JQuaternion& y) {
  return mobius_J(hyperbolic_translation(x), y);
}

VerificationReport check_l0_realizations(int samples, std::uint64_t seed, double tol) {
  const auto ctx = hyperbolic_space_loop();
  Rng rng(seed, stream_id("L0/realizations"));
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const VecX a = sample_datum(ctx, rng), b = sample_datum(ctx, rng);
    const JQuaternion polar = l0_point(loop_mul(ctx, a, b));
    const JQuaternion mob = l0_mobius_mul(l0_point(a), l0_point(b));
    worst = std::max(worst, std::abs(polar.x - mob.x) + std::abs(polar.y - mob.y));
  }
  auto r = detail::make_report("L0", "polar_vs_mobius", "hyperbolic-space-loop", samples, seed, worst, tol);
  r.detail = "section realisation against tau_{j,x}(y) in the upper half space";
  return r;
}

LoopContext<Mat2c> loop_La(double a) {
  if (!(std::abs(a) < 1)) throw std::domain_error("loop_La: |a| must be < 1");
  LoopContext<Mat2c> ctx;
  ctx.label = "L_a(" + std::to_string(a) + ")";
  ctx.tag = "m_a-family";
  ctx.global = a == 0.0;
  ctx.box = 0.5;
  set_sl2c_group(ctx);
  const C I(0, 1);
  Mat2c T, U, H;
  T << 0, 1, 1, 0;
  U << 0, 1, -1, 0;
  H << 1, 0, 0, -1;
  const Mat2c e1 = T + a * U, e2 = I * (U + a * T);
  auto expm = [e1, e2, H](const VecX& l) -> Mat2c { return exp_sl2<C>(Mat2c(l(0) * e1 + l(1) * e2 + l(2) * H)); };
  ctx.section = [expm](const VecX& x) -> Mat2c {
    const VecX init = (VecX(3) << x(1), x(2), x(0)).finished();
    auto F = [&](const VecX& l) -> VecX { return hermitian_datum(expm(l)) - x; };
    const NewtonResult n = newton_solve(F, init, 100, 1e-13);
    if (n.residual > 1e-10) throw ContextError("loop_La: section solve did not converge");
    return expm(n.x);
  };
  return ctx;
}

// ---------------------------------------------------------------------------
// Scheerer extension

namespace {

double scheerer_theta(const Mat2& A, double a, double b) {
  const Mat2 r = inverse_det1(sigma1(a, b)) * A;
  return std::atan2(r(0, 1), r(0, 0));
}

}  // namespace

LoopContext<ScheererElement> scheerer_loop() {
  LoopContext<ScheererElement> ctx;
  ctx.label = "scheerer";
  ctx.tag = "scheerer-extension";
  ctx.box = 1.5;
  ctx.mul = [](const ScheererElement& x, const ScheererElement& y) {
    return ScheererElement{x.A * y.A, wrap_angle(x.phi + y.phi)};
  };
  ctx.inv = [](const ScheererElement& x) { return ScheererElement{inverse_det1(x.A), wrap_angle(-x.phi)}; };
  ctx.distance = [](const ScheererElement& x, const ScheererElement& y) {
    return psl_distance(x.A, y.A) + std::abs(wrap_angle(x.phi - y.phi));
  };
  ctx.coset = [](const ScheererElement& g) -> VecX {
    const Iwasawa d = iwasawa_decompose(g.A);
    const double psi = wrap_angle(g.phi - 2 * scheerer_theta(g.A, d.a, d.b));
    return (VecX(3) << std::log(d.a), d.b, psi).finished();
  };
  ctx.section = [](const VecX& x) { return ScheererElement{sigma1(std::exp(x(0)), x(1)), wrap_angle(x(2))}; };
  ctx.diff = [](const VecX& a, const VecX& b) -> VecX {
    VecX d = a - b;
    d(2) = wrap_angle(d(2));
    return d;
  };
  return ctx;
}

VerificationReport check_scheerer_normal_subgroup(int samples, std::uint64_t seed) {
  const auto ctx = scheerer_loop();
  Rng rng(seed, stream_id("scheerer/normal-subgroup"));
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double p = rng.uniform(-3, 3), q = rng.uniform(-3, 3);
    const VecX x = (VecX(3) << 0, 0, p).finished(), y = (VecX(3) << 0, 0, q).finished();
    const VecX z = loop_mul(ctx, x, y);
    const VecX expected = (VecX(3) << 0, 0, wrap_angle(p + q)).finished();
    worst = std::max(worst, ctx.diff(z, expected).norm());
    // closed under left division as well
    worst = std::max(worst, ctx.diff(left_divide(ctx, x, y), (VecX(3) << 0, 0, wrap_angle(q - p)).finished()).norm());
  }
  auto r = detail::make_report("scheerer", "so2_normal_subgroup", "scheerer-extension", samples, seed, worst, 1e-12);
  r.detail = "elements (1, psi) compose as the circle group";
  return r;
}

// ---------------------------------------------------------------------------
// Pseudo-euclidean loop

namespace {

void set_semidirect_group(LoopContext<SemidirectElement>& ctx) {
  ctx.identity = SemidirectElement{};
  ctx.mul = semidirect_mul;
  ctx.inv = semidirect_inv;
  ctx.distance = semidirect_distance;
  ctx.coset = [](const SemidirectElement& g) -> VecX { return vec3(factor_pseudo_euclidean(g).lambda); };
}

Mat2 random_traceless(Rng& rng, double box) {
  return translation_matrix(rng.uniform(-box, box), rng.uniform(-box, box), rng.uniform(-box, box));
}

SemidirectElement random_semidirect(Rng& rng) {
  return exp_semidirect(random_traceless(rng, 1.0), random_traceless(rng, 1.0));
}

double plane_distance(const PseudoPlane& a, const PseudoPlane& b) { return (a.p - b.p).norm() + std::abs(a.s - b.s); }

}  // namespace

LoopContext<SemidirectElement> pseudo_euclidean_loop() {
  LoopContext<SemidirectElement> ctx;
  ctx.label = "pseudo-euclidean";
  ctx.tag = "pseudo-euclidean-loop";
  set_semidirect_group(ctx);
  ctx.section = [](const VecX& l) { return exp_semidirect_m(l(0), l(1), l(2)); };
  return ctx;
}

std::vector<VerificationReport> check_pseudo_euclidean_bridge(int samples, std::uint64_t seed) {
  const auto ctx = pseudo_euclidean_loop();
  Rng rng(seed, stream_id("pseudo-euclidean/bridge"));
  double round_trip = 0.0, intertwine = 0.0, norm_lin = 0.0, norm_diff = 0.0, plane = 0.0, invariance = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec3 v(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    const Mat2 Y = omega_inv(v), Y2 = random_traceless(rng, 2.0);
    round_trip = std::max({round_trip, (omega(omega_inv(v)) - v).norm(), (omega_inv(omega(Y2)) - Y2).norm()});

    const SemidirectElement g = random_semidirect(rng);
    const AffineMotion M = Omega(g);
    intertwine = std::max(intertwine, (omega(star_action(g, Y)) - (M.B * v + M.b)).norm());

    const Mat2 lin = g.A.inverse() * Y * g.A;
    norm_lin = std::max(norm_lin, std::abs(e21_norm(lin) - e21_norm(Y)));
    norm_diff =
        std::max(norm_diff, std::abs(e21_norm(star_action(g, Y) - star_action(g, Y2)) - e21_norm(Y - Y2)));

    // plane of x * y is the plane of y moved by sigma(x)
    const VecX x = sample_datum(ctx, rng), y = sample_datum(ctx, rng);
    const SemidirectElement sx = ctx.section(x);
    const PseudoPlane lhs = coset_plane(ctx.section(loop_mul(ctx, x, y)));
    const PseudoPlane rhs = apply(Omega(semidirect_inv(sx)), coset_plane(ctx.section(y)));
    plane = std::max(plane, plane_distance(lhs, rhs));

    // a coset determines its plane
    const SemidirectElement h = semidirect_mul(sx, factor_pseudo_euclidean(g).h);
    invariance = std::max(invariance, plane_distance(coset_plane(h), coset_plane(sx)));
  }
  const std::string tag = "pseudo-euclidean-model";
  std::vector<VerificationReport> out;
  out.push_back(detail::make_report("pseudo-euclidean", "omega_round_trip", tag, samples, seed, round_trip, 1e-12));
  out.push_back(detail::make_report("pseudo-euclidean", "omega_intertwines_action", tag, samples, seed, intertwine,
                                    1e-10));
  out.push_back(detail::make_report("pseudo-euclidean", "norm_invariance_linear", tag, samples, seed, norm_lin,
                                    1e-10));
  out.push_back(detail::make_report("pseudo-euclidean", "norm_invariance_affine", tag, samples, seed, norm_diff,
                                    1e-10));
  out.push_back(detail::make_report("pseudo-euclidean", "plane_product", tag, samples, seed, plane, 1e-9));
  out.push_back(detail::make_report("pseudo-euclidean", "plane_coset_invariance", tag, samples, seed, invariance,
                                    1e-9));
  return out;
}

// ---------------------------------------------------------------------------
// L_{b3,c3,c2}

std::array<std::pair<Mat2, Mat2>, 3> lbcc_basis(double b3, double c3, double c2) {
  return {{{Mat2::Zero(), Mat2(-U2() - c3 * T2() - b3 * H2())},
           {Mat2(H2() + b3 * U2()), Mat2(c2 * T2())},
           {Mat2(T2() + c3 * U2()), Mat2(-c2 * H2())}}};
}

SemidirectElement lbcc_exp(double b3, double c3, double c2, const Vec3& mu) {
  const auto f = lbcc_basis(b3, c3, c2);
  Mat2 X1 = Mat2::Zero(), X2 = Mat2::Zero();
  for (int i = 0; i < 3; ++i) {
    X1 += mu(i) * f[i].first;
    X2 += mu(i) * f[i].second;
  }
  return exp_semidirect(X1, X2);
}

LoopContext<SemidirectElement> loop_Lbcc(double b3, double c3, double c2) {
  const double rho = b3 * b3 + c3 * c3;
  if (std::abs(rho - 1) < 1e-12) throw std::domain_error("loop_Lbcc: b3^2 + c3^2 = 1 is excluded");
  LoopContext<SemidirectElement> ctx;
  ctx.label = "L_bcc(" + std::to_string(b3) + "," + std::to_string(c3) + "," + std::to_string(c2) + ")";
  ctx.tag = "m_bcc-family";
  ctx.global = rho < 1;
  ctx.box = ctx.global ? 1.0 : 0.5;
  set_semidirect_group(ctx);
  auto datum = [b3, c3, c2](const VecX& mu) -> VecX {
    return vec3(factor_pseudo_euclidean(lbcc_exp(b3, c3, c2, Vec3(mu))).lambda);
  };
  // linearisation at the identity seeds the solve; continuation in the
  // target covers data where the seed alone is not close enough
  Eigen::Matrix3d J0;
  for (int j = 0; j < 3; ++j) {
    const double h = 1e-6;
    J0.col(j) = (datum(Vec3::Unit(j) * h) - datum(Vec3::Unit(j) * -h)) / (2 * h);
  }
  const Eigen::Matrix3d seed = J0.inverse();
  ctx.section = [b3, c3, c2, datum, seed](const VecX& l) {
    NewtonResult n;
    for (int steps : {1, 4, 16}) {
      VecX mu = seed * Vec3(l) / steps;
      for (int k = 1; k <= steps; ++k) {
        const VecX target = l * (double(k) / steps);
        n = newton_solve([&](const VecX& m) -> VecX { return datum(m) - target; }, mu, 200, 1e-13);
        if (n.residual > 1e-10) break;
        mu = n.x + seed * Vec3(l) / steps;
      }
      if (n.residual <= 1e-10) return lbcc_exp(b3, c3, c2, Vec3(n.x));
    }
    throw ContextError("loop_Lbcc: section solve did not converge");
  };
  return ctx;
}

FixedPointWitness lbcc_fixed_point(double b3, double c3, double c2) {
  const double rho = b3 * b3 + c3 * c3;
  if (!(rho > 1)) throw std::domain_error("lbcc_fixed_point: needs b3^2 + c3^2 > 1");
  // X1 = s (b3 H + c3 T + rho U) is elliptic with exp X1 = -I, and the
  // translation part of X* is Killing-orthogonal to X1, so exp X* = 1
  const double s = std::numbers::pi / std::sqrt(rho * (rho - 1));
  FixedPointWitness w;
  w.mu_period = Vec3(1.0, s * b3, s * c3);
  w.period_residual = semidirect_distance(lbcc_exp(b3, c3, c2, w.mu_period), SemidirectElement{});
  w.element = lbcc_exp(b3, c3, c2, w.mu_period / 2);
  w.distance_from_identity = semidirect_distance(w.element, SemidirectElement{});
  const auto base = pseudo_euclidean_loop();
  auto F = [&](const VecX& y) -> VecX { return base.coset(semidirect_mul(w.element, base.section(y))) - y; };
  const NewtonResult n = newton_solve(F, VecX::Zero(3), 200, 1e-13);
  w.fixed_coset = Vec3(n.x);
  w.fixed_residual = n.residual;
  return w;
}

// ---------------------------------------------------------------------------
// Non-Bol loops L_Lambda

Motion4 motion(const Mat3& B, const Vec3& b) {
  Motion4 m = Motion4::Identity();
  m.topLeftCorner<3, 3>() = B;
  m.topRightCorner<3, 1>() = b;
  return m;
}

Motion4 translation4(const Vec3& t) { return motion(Mat3::Identity(), t); }

Mat3 boost_to(const Vec3& p) {
  const Eigen::Vector2d pp = p.head<2>();
  Mat3 B;
  B.topLeftCorner<2, 2>() = Eigen::Matrix2d::Identity() + pp * pp.transpose() / (1 + p(2));
  B.topRightCorner<2, 1>() = pp;
  B.bottomLeftCorner<1, 2>() = pp.transpose();
  B(2, 2) = p(2);
  return B;
}

Motion4 z_rotation4(double t) {
  Mat3 R = Mat3::Identity();
  R.topLeftCorner<2, 2>() = rotation(t);
  return motion(R, Vec3::Zero());
}

LoopContext<Motion4> nonbol_loop(const Vec3& direction) {
  if (!(q_inner(direction, direction) < 0))
    throw std::domain_error("nonbol_loop: the translation direction must be timelike");
  const Vec3 d = direction;
  LoopContext<Motion4> ctx;
  ctx.label = "L_Lambda(" + std::to_string(d(0)) + "," + std::to_string(d(1)) + "," + std::to_string(d(2)) + ")";
  ctx.tag = "nonbol-planes";
  ctx.bol = false;
  ctx.box = 1.0;
  ctx.identity = Motion4::Identity();
  ctx.mul = [](const Motion4& a, const Motion4& b) -> Motion4 { return a * b; };
  ctx.inv = [](const Motion4& a) -> Motion4 { return a.inverse(); };
  ctx.distance = [](const Motion4& a, const Motion4& b) { return (a - b).norm(); };
  ctx.coset = [](const Motion4& g) -> VecX {
    // image of the plane {z = 0}: normal B e_z through the point b
    const PseudoPlane pl = normalize_plane(g.block<3, 1>(0, 2), 0.0);
    const double s = q_inner(pl.p, g.topRightCorner<3, 1>());
    return (VecX(3) << pl.p(0), pl.p(1), s).finished();
  };
  ctx.section = [d](const VecX& x) -> Motion4 {
    const double px = x(0), py = x(1);
    const Vec3 p(px, py, std::sqrt(1 + px * px + py * py));
    const double t = x(2) / q_inner(p, d);
    return translation4(t * d) * motion(boost_to(p), Vec3::Zero());
  };
  return ctx;
}

VerificationReport check_k_conjugation(const Vec3& direction, int samples, std::uint64_t seed) {
  const auto ctx = nonbol_loop(direction);
  Rng rng(seed, stream_id("nonbol/k-conjugation"));
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Motion4 k = z_rotation4(rng.uniform(-std::numbers::pi, std::numbers::pi));
    const Motion4 theta = ctx.section(sample_datum(ctx, rng));
    const Motion4 c = k * theta * k.inverse();
    worst = std::max(worst, ctx.distance(c, ctx.section(ctx.coset(c))));
  }
  auto r = detail::make_report(ctx.label, "k_normalizes_section", ctx.tag, samples, seed, worst, 1e-10);
  r.detail = r.pass ? "rotations about the axis normalise Theta" : "rotation conjugation leaves Theta";
  return r;
}

NonBolWitness nonbol_witness(const Vec3& direction) {
  const auto ctx = nonbol_loop(direction);
  NonBolWitness w;
  w.lambda = translation4(direction);
  w.rho = motion(boost_to(Vec3(std::sinh(1.0), 0, std::cosh(1.0))), Vec3::Zero());
  const Motion4 r = w.lambda * w.rho;
  const Motion4 rr = r * r;
  w.rr_residual = ctx.distance(rr, ctx.section(ctx.coset(rr)));
  const Motion4 c = w.lambda * w.rho * w.lambda * w.rho.inverse();
  const Vec3 t = c.topRightCorner<3, 1>();
  const Vec3 u = direction.normalized();
  w.commutator_offset = (c.topLeftCorner<3, 3>() - Mat3::Identity()).norm() + (t - t.dot(u) * u).norm();
  return w;
}

// ---------------------------------------------------------------------------
// Divergence of the forced section in PSL2(R) x R

DivergenceRow divergence_element(double c) {
  if (c == -1.0) throw std::domain_error("divergence_element: c = -1 is excluded");
  DivergenceRow row;
  row.c = c;
  row.element << 1 + c, c, c, (c * c + 1) / (1 + c);
  row.second = (c - 1) / (1 + c);
  row.norm = row.element.norm();
  Mat2 g;
  g << 1 + c, 1, c, 1;
  Mat2 expected;
  expected << 1, row.second, 0, 1;
  // g^-1 s must be the stabiliser element ((1, beta), (0, 1)) with real part beta
  row.coset_residual = (g.inverse() * row.element - expected).norm() / std::max(1.0, row.norm);
  return row;
}

std::vector<DivergenceRow> divergence_demo(int kmax) {
  std::vector<DivergenceRow> rows{divergence_element(0.0)};
  for (int k = 1; k <= kmax; ++k) rows.push_back(divergence_element(-1 + std::pow(10.0, -k)));
  return rows;
}

VerificationReport check_divergence(int kmin, int kmax) {
  double worst = 0.0;
  bool grows = true;
  std::string detail;
  for (int k = kmin; k <= kmax; ++k) {
    const DivergenceRow row = divergence_element(-1 + std::pow(10.0, -k));
    worst = std::max(worst, row.coset_residual);
    grows = grows && row.norm >= std::pow(10.0, k);
    detail += (detail.empty() ? "" : " ") + std::string("k=") + std::to_string(k) + ":" + std::to_string(row.norm);
  }
  auto r = detail::make_report("PSL2xR/H2", "section_divergence", "divergence-obstruction", kmax - kmin + 1,
                               std::uint64_t{0}, worst, 1e-9);
  r.seed.reset();
  r.pass = r.pass && grows;
  r.detail = "norms " + detail;
  return r;
}

}  // namespace bolkit
