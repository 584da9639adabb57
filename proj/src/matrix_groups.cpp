#include "bolkit/matrix_groups.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace bolkit {

namespace {

using LD = long double;
using CLD = std::complex<long double>;
constexpr double kTwoPi = 6.283185307179586476925286766559;

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

}  // namespace

Mat2 rotation(double t) {
  Mat2 r;
  r << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  return r;
}

Mat2 canonical_psl(const Mat2& g, double tol) {
  for (int i = 0; i < 4; ++i) {
    double x = g(i / 2, i % 2);
    if (std::abs(x) > tol) return x > 0 ? g : Mat2(-g);
  }
  return g;
}

Mat2c canonical_psl(const Mat2c& g, double tol) {
  for (int i = 0; i < 4; ++i) {
    std::complex<double> x = g(i / 2, i % 2);
    if (std::abs(x.real()) > tol) return x.real() > 0 ? g : Mat2c(-g);
    if (std::abs(x.imag()) > tol) return x.imag() > 0 ? g : Mat2c(-g);
  }
  return g;
}

double psl_distance(const Mat2& a, const Mat2& b) { return std::min((a - b).norm(), (a + b).norm()); }
double psl_distance(const Mat2c& a, const Mat2c& b) { return std::min((a - b).norm(), (a + b).norm()); }

Mat2 translation_matrix(double x, double y, double z) {
  Mat2 m;
  m << x, y + z, y - z, -x;
  return m;
}

Vec3 translation_coords(const Mat2& X) {
  return Vec3(X(0, 0), (X(0, 1) + X(1, 0)) / 2, (X(0, 1) - X(1, 0)) / 2);
}

SemidirectElement semidirect_mul(const SemidirectElement& g1, const SemidirectElement& g2) {
  const Mat2 inv2 = inverse_det1(g2.A);
  return {g1.A * g2.A, inv2 * g1.X * g2.A + g2.X};
}

SemidirectElement semidirect_inv(const SemidirectElement& g) {
  return {inverse_det1(g.A), -g.A * g.X * inverse_det1(g.A)};
}

double semidirect_distance(const SemidirectElement& a, const SemidirectElement& b) {
  return psl_distance(a.A, b.A) + (a.X - b.X).norm();
}

// ---------------------------------------------------------------------------

ExpCoefficients exp_coefficients(double delta, double t, int force) {
  const bool series = force == 2 || (force == 0 && std::abs(delta) < 1e-6);
  if (series) {
    // C = sum t^{2j+2} (4D)^j / (2j+2)!,  D = sum t^{2j+3} (4D)^j / (2j+3)!
    LD c = 0, d = 0, p = 1;
    LD tt = t;
    LD fact_even = 2, fact_odd = 6;
    LD tpow_c = tt * tt, tpow_d = tt * tt * tt;
    for (int j = 0; j < 4; ++j) {
      c += tpow_c * p / fact_even;
      d += tpow_d * p / fact_odd;
      p *= 4 * static_cast<LD>(delta);
      tpow_c *= tt * tt;
      tpow_d *= tt * tt;
      fact_even *= (2 * j + 3) * (2 * j + 4);
      fact_odd *= (2 * j + 4) * (2 * j + 5);
    }
    return {static_cast<double>(c), static_cast<double>(d)};
  }
  const LD D = delta, T = t;
  LD C, Dc;
  if (D > 0) {
    const LD w = std::sqrt(D);
    const LD sh = std::sinh(w * T);
    C = sh * sh / (2 * D);
    Dc = (std::sinh(2 * w * T) / (2 * w) - T) / (4 * D);
  } else {
    const LD w = std::sqrt(-D);
    const LD sn = std::sin(w * T);
    C = sn * sn / (2 * w * w);
    Dc = (std::sin(2 * w * T) / (2 * w) - T) / (4 * D);
  }
  return {static_cast<double>(C), static_cast<double>(Dc)};
}

SemidirectElement exp_semidirect(const Mat2& X1, const Mat2& X2, double t, int force) {
  const double delta = -X1.determinant();
  const ExpCoefficients k = exp_coefficients(delta, t, force);
  const Mat2 ad1 = commutator(X1, X2);
  const Mat2 ad2 = commutator(X1, ad1);
  return {exp_sl2<double>(Mat2(t * X1)), t * X2 - k.C * ad1 + k.D * ad2};
}

SemidirectElement exp_semidirect_m(double l1, double l2, double l3) {
  return exp_semidirect(l2 * H2() + l3 * T2(), -l1 * U2());
}

namespace {

struct RsvPolys {
  LD qr, qs, qv;
};

RsvPolys rsv_polys(LD A, LD B, LD Cc, LD K, LD Uu, LD Y) {
  return {-A * Cc * Uu - B * A * Y + 2 * K * Cc * B, -B * B * Y + Uu * B * Cc - 2 * B * A * K + 2 * A * A * Uu,
          2 * Y * A * A - 2 * Cc * K * A + B * Cc * Y - Cc * Cc * Uu};
}

}  // namespace

RSV printed_rsv(double a, double b, double c, double k, double u, double y, double t, int force) {
  // The reference expression regrouped as r = qr S1/2 + t k + (b y - c u) S2/2
  // with S1 = (sinh(2wt)/(2w) - t)/D = 4 D_coef and S2 = sinh(wt)^2/D = 2 C_coef,
  // so the same seam handling as exp_coefficients applies.
  const double delta = a * a + b * c;
  const LD A = a, B = b, Cc = c, K = k, Uu = u, Y = y, T = t;
  const RsvPolys q = rsv_polys(A, B, Cc, K, Uu, Y);
  const ExpCoefficients e = exp_coefficients(delta, t, force);
  const LD S1 = 4 * static_cast<LD>(e.D), S2 = 2 * static_cast<LD>(e.C);
  return {static_cast<double>(q.qr * S1 / 2 + T * K + (B * Y - Cc * Uu) * S2 / 2),
          static_cast<double>(q.qs * S1 / 2 + T * Uu + (2 * A * Uu - 2 * B * K) * S2 / 2),
          static_cast<double>(q.qv * S1 / 2 + T * Y + (2 * Cc * K - 2 * A * Y) * S2 / 2)};
}

RSV printed_rsv_literal(double a, double b, double c, double k, double u, double y, double t) {
  // Term by term in the reference form, evaluated over C so that a^2 + bc < 0 works too.
  const LD A = a, B = b, Cc = c, K = k, Uu = u, Y = y, T = t;
  const RsvPolys q = rsv_polys(A, B, Cc, K, Uu, Y);
  const CLD D(A * A + B * Cc, 0);
  const CLD w = std::sqrt(D);
  const CLD e2 = std::exp(2.0L * w * T) - std::exp(-2.0L * w * T);
  const CLD e1 = std::exp(w * T) - std::exp(-w * T);
  const CLD pre = e2 / (8.0L * D * w);
  const CLD r = pre * q.qr + (e1 * e1 * (-Cc * Uu + B * Y) + T * (8 * K * A * A + 4 * A * Cc * Uu + 4 * A * B * Y)) / (8.0L * D);
  const CLD s = pre * q.qs + (e1 * e1 * (-2 * B * K + 2 * A * Uu) + T * (4 * B * B * Y + 4 * Uu * B * Cc + 8 * K * A * B)) / (8.0L * D);
  const CLD v = pre * q.qv + (e1 * e1 * (-2 * A * Y + 2 * Cc * K) + T * (8 * Cc * K * A + 4 * Cc * Cc * Uu + 4 * B * Cc * Y)) / (8.0L * D);
  return {static_cast<double>(r.real()), static_cast<double>(s.real()), static_cast<double>(v.real())};
}

RSV printed_rsv_m(double l1, double l2, double l3) {
  // (e^w - e^-w)^2 / (4 w^2) = (sinh w / w)^2 and (e^{2w} - e^{-2w}) / (4w) =
  // sinh(2w)/(2w), both written through the entire functions of w^2.
  const double A = l2 * l2 + l3 * l3;
  const double sq = detail::sinhc_sqrt(A);
  const double f1 = sq * sq;
  const double f2 = detail::sinhc_sqrt(4 * A);
  return {l3 * l1 * f1, -l1 * f2 - l2 * l1 * f1, l1 * f2 - l2 * l1 * f1};
}

double printed_lambda1(double u, double l2, double l3) {
  const double w = std::sqrt(l2 * l2 + l3 * l3);
  if (w < 1e-8) return -u;
  return -4 * u * w / (std::exp(2 * w) - std::exp(-2 * w));
}

SemidirectElement ode_exp_oracle(const Mat2& X1, const Mat2& X2, int steps, double t) {
  if (steps < 1000) throw std::invalid_argument("ode_exp_oracle: at least 1000 steps");
  const double h = t / steps;
  Mat2 beta = Mat2::Identity(), gamma = Mat2::Zero();
  auto fb = [&](const Mat2& b) -> Mat2 { return b * X1; };
  auto fg = [&](const Mat2& g) -> Mat2 { return -X1 * g + g * X1 + X2; };
  for (int i = 0; i < steps; ++i) {
    Mat2 kb1 = fb(beta), kg1 = fg(gamma);
    Mat2 kb2 = fb(beta + h / 2 * kb1), kg2 = fg(gamma + h / 2 * kg1);
    Mat2 kb3 = fb(beta + h / 2 * kb2), kg3 = fg(gamma + h / 2 * kg2);
    Mat2 kb4 = fb(beta + h * kb3), kg4 = fg(gamma + h * kg3);
    beta += h / 6 * (kb1 + 2 * kb2 + 2 * kb3 + kb4);
    gamma += h / 6 * (kg1 + 2 * kg2 + 2 * kg3 + kg4);
  }
  return {beta, gamma};
}

// ---------------------------------------------------------------------------

Iwasawa iwasawa_decompose(const Mat2& g) {
  const double a = std::hypot(g(0, 0), g(0, 1));
  double t = std::atan2(g(0, 1), g(0, 0));
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  const double b = g(1, 0) * std::cos(t) + g(1, 1) * std::sin(t);
  return {a, b, t};
}

Mat2 iwasawa_compose(const Iwasawa& d) {
  Mat2 l;
  l << d.a, 0, d.b, 1 / d.a;
  return l * rotation(d.t);
}

Mat2 sigma1(double a, double b) {
  if (!(a > 0)) throw std::domain_error("sigma1: a must be positive");
  const double s = (b < 0 ? -1.0 : 1.0) * std::sqrt(b * b + (1 / a + a) * (1 / a + a));
  Mat2 l, r;
  l << a, 0, b, 1 / a;
  r << (1 / a + a) / s, b / s, -b / s, (1 / a + a) / s;
  return l * r;
}

RealPolar polar_decompose_sl2r(const Mat2& A) {
  const Mat2 P = sqrt_positive_det1<double>(Mat2(A * A.transpose()));
  return {P, inverse_det1(P) * A};
}

ComplexPolar polar_decompose_sl2c(const Mat2c& g) {
  const Mat2c p = sqrt_positive_det1<std::complex<double>>(Mat2c(g * g.adjoint()));
  return {p, inverse_det1(p) * g};
}

Eigen::Vector2d log_spd(const Mat2& P) {
  // S = (P - P^-1)/2 = sinh(w)/w X, so |S| = sinh w.
  const Mat2 S = (P - inverse_det1(P)) / 2;
  const double sh = std::hypot(S(0, 0), S(0, 1));
  const double scale = sh < 1e-300 ? 1.0 : std::asinh(sh) / sh;
  return Eigen::Vector2d(S(0, 0) * scale, S(0, 1) * scale);
}

Vec3 log_hermitian(const Mat2c& P) {
  const Mat2c S = (P - inverse_det1(P)) / 2.0;
  const double x = S(0, 0).real(), y = S(0, 1).real(), z = S(0, 1).imag();
  const double sh = std::sqrt(x * x + y * y + z * z);
  const double scale = sh < 1e-300 ? 1.0 : std::asinh(sh) / sh;
  return Vec3(x, y, z) * scale;
}

Mat2c hermitian_from_coords(const Vec3& c) {
  using C = std::complex<double>;
  Mat2c m;
  m << C(c(0), 0), C(c(1), c(2)), C(c(1), -c(2)), C(-c(0), 0);
  return m;
}

PseudoFactor factor_pseudo_euclidean(const SemidirectElement& g) {
  const RealPolar pr = polar_decompose_sl2r(g.A);
  const Eigen::Vector2d l23 = log_spd(pr.P);
  const Mat2 Z = pr.R * g.X * pr.R.inverse();
  const double q = (Z(0, 1) - Z(1, 0)) / 2;
  const double w2 = l23.squaredNorm();
  const double l1 = -q / detail::sinhc_sqrt(4 * w2);
  PseudoFactor f;
  f.lambda = Vec3(l1, l23(0), l23(1));
  f.m = exp_semidirect_m(l1, l23(0), l23(1));
  // g = (M, Y)(R, S) = (M R, R^-1 Y R + S)
  f.h.A = inverse_det1(f.m.A) * g.A;
  f.h.X = g.X - inverse_det1(f.h.A) * f.m.X * f.h.A;
  const double asym = std::abs(f.h.X(0, 1) - f.h.X(1, 0)) + std::abs(f.h.X.trace());
  f.residual = semidirect_distance(semidirect_mul(f.m, f.h), g) + asym +
               (f.h.A * f.h.A.transpose() - Mat2::Identity()).norm();
  return f;
}

bool in_pseudo_stabilizer(const SemidirectElement& g, double tol) {
  return (g.A * g.A.transpose() - Mat2::Identity()).norm() <= tol &&
         std::abs(g.X(0, 1) - g.X(1, 0)) <= tol && std::abs(g.X.trace()) <= tol;
}

// ---------------------------------------------------------------------------

JQuaternion mobius_J(const Mat2c& g, const JQuaternion& w) {
  auto q = [](std::complex<double> z) { return Eigen::Quaterniond(z.real(), z.imag(), 0, 0); };
  const Eigen::Quaterniond W(w.x.real(), w.x.imag(), w.y, 0);
  auto add = [](const Eigen::Quaterniond& a, const Eigen::Quaterniond& b) {
    return Eigen::Quaterniond(a.coeffs() + b.coeffs());
  };
  const Eigen::Quaterniond num = add(q(g(0, 0)) * W, q(g(0, 1)));
  const Eigen::Quaterniond den = add(q(g(1, 0)) * W, q(g(1, 1)));
  const Eigen::Quaterniond res = num * den.inverse();
  return {std::complex<double>(res.w(), res.x()), res.y()};
}

Mat2c hyperbolic_translation(const JQuaternion& w) {
  const double st = std::sqrt(w.y);
  Mat2c g;
  g << st, w.x / st, 0.0, 1.0 / st;
  return sqrt_positive_det1<std::complex<double>>(Mat2c(g * g.adjoint()));
}

// ---------------------------------------------------------------------------

Vec3 omega(const Mat2& Y) { return Vec3(Y(0, 0), (Y(0, 1) + Y(1, 0)) / 2, (Y(0, 1) - Y(1, 0)) / 2); }

Mat2 omega_inv(const Vec3& v) { return translation_matrix(v(0), v(1), v(2)); }

Mat3 Omega_matrix(const Mat2& A) {
  const double a = A(0, 0), b = A(0, 1), c = A(1, 0), d = A(1, 1);
  Mat3 B;
  B << d * a + b * c, c * d - b * a, c * d + b * a,  //
      b * d - c * a, (a * a + d * d - b * b - c * c) / 2, (d * d + b * b - a * a - c * c) / 2,  //
      b * d + c * a, (d * d - b * b - a * a + c * c) / 2, (d * d + b * b + a * a + c * c) / 2;
  return B;
}

AffineMotion Omega(const SemidirectElement& g) { return {Omega_matrix(g.A), omega(g.X)}; }

Mat2 star_action(const SemidirectElement& g, const Mat2& Y) { return inverse_det1(g.A) * Y * g.A + g.X; }

double e21_norm(const Mat2& Y) { return -Y.determinant(); }

double q_inner(const Vec3& a, const Vec3& b) { return a(0) * b(0) + a(1) * b(1) - a(2) * b(2); }

PseudoPlane normalize_plane(const Vec3& p, double s) {
  const double n = q_inner(p, p);
  if (!(n < 0)) throw std::domain_error("plane normal is not timelike");
  double f = 1 / std::sqrt(-n);
  if (p(2) < 0) f = -f;
  return {p * f, s * f};
}

PseudoPlane apply(const AffineMotion& g, const PseudoPlane& plane) {
  const Vec3 p = g.B * plane.p;
  return normalize_plane(p, plane.s + q_inner(p, g.b));
}

PseudoPlane coset_plane(const SemidirectElement& g) { return apply(Omega(semidirect_inv(g)), PseudoPlane{}); }

}  // namespace bolkit
