#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace bolkit {

using Mat2 = Eigen::Matrix2d;
using Mat2c = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline Mat2 H2() { return (Mat2() << 1, 0, 0, -1).finished(); }
inline Mat2 T2() { return (Mat2() << 0, 1, 1, 0).finished(); }
inline Mat2 U2() { return (Mat2() << 0, 1, -1, 0).finished(); }

/// Inverse of a determinant-one 2x2 matrix by its adjugate, which avoids the
/// cancellation in a computed determinant for large entries.
template <typename S>
Eigen::Matrix<S, 2, 2> inverse_det1(const Eigen::Matrix<S, 2, 2>& g) {
  Eigen::Matrix<S, 2, 2> r;
  r << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
  return r;
}

/// R(t) = ((cos t, sin t), (-sin t, cos t)).
Mat2 rotation(double t);

/// Representative with the first nonzero row-major entry positive (real) or
/// with positive real part (complex, falling back to the imaginary part).
Mat2 canonical_psl(const Mat2& g, double tol = 1e-12);
Mat2c canonical_psl(const Mat2c& g, double tol = 1e-12);
/// Distance in PSL: min over the two signs.
double psl_distance(const Mat2& a, const Mat2& b);
double psl_distance(const Mat2c& a, const Mat2c& b);

// ---------------------------------------------------------------------------
// Exponentials

namespace detail {
// cosh(sqrt(d)) and sinh(sqrt(d))/sqrt(d) as entire functions of d.
template <typename S>
S cosh_sqrt(const S& d) {
  using std::abs;
  if (abs(d) < 1e-6) return S(1) + d / S(2) + d * d / S(24) + d * d * d / S(720);
  using std::cosh;
  using std::sqrt;
  if constexpr (std::is_floating_point_v<S>) {
    return d > 0 ? cosh(sqrt(d)) : std::cos(sqrt(-d));
  } else {
    return cosh(sqrt(d));
  }
}
template <typename S>
S sinhc_sqrt(const S& d) {
  using std::abs;
  if (abs(d) < 1e-6) return S(1) + d / S(6) + d * d / S(120) + d * d * d / S(5040);
  using std::sinh;
  using std::sqrt;
  if constexpr (std::is_floating_point_v<S>) {
    return d > 0 ? sinh(sqrt(d)) / sqrt(d) : std::sin(sqrt(-d)) / sqrt(-d);
  } else {
    S w = sqrt(d);
    return sinh(w) / w;
  }
}
}  // namespace detail

/// exp X = cosh(sqrt D) I + sinh(sqrt D)/sqrt D X with D = -det X, for
/// traceless 2x2 X over double or std::complex<double>.
template <typename S>
Eigen::Matrix<S, 2, 2> exp_sl2(const Eigen::Matrix<S, 2, 2>& X) {
  const S d = -X.determinant();
  return detail::cosh_sqrt(d) * Eigen::Matrix<S, 2, 2>::Identity() + detail::sinhc_sqrt(d) * X;
}

/// Element (A, X) of PSL2(R) x| R^3 with the group law
/// (A1, X1)(A2, X2) = (A1 A2, A2^-1 X1 A2 + X2). X is traceless.
struct SemidirectElement {
  Mat2 A = Mat2::Identity();
  Mat2 X = Mat2::Zero();
};

/// (x, y, z) -> ((x, y+z), (y-z, -x)).
Mat2 translation_matrix(double x, double y, double z);
Vec3 translation_coords(const Mat2& X);

SemidirectElement semidirect_mul(const SemidirectElement& g1, const SemidirectElement& g2);
SemidirectElement semidirect_inv(const SemidirectElement& g);
double semidirect_distance(const SemidirectElement& a, const SemidirectElement& b);

/// Coefficients of the translation part of exp(t (X1, X2)):
/// gamma(t) = t X2 - C [X1, X2] + D [X1, [X1, X2]].
struct ExpCoefficients {
  double C;
  double D;
};
/// Closed form for |Delta| >= 1e-6, Taylor series below. `force` selects a
/// branch regardless of Delta (0 = automatic, 1 = closed, 2 = series).
ExpCoefficients exp_coefficients(double delta, double t, int force = 0);

/// One-parameter subgroup of (X1, X2) at time t.
SemidirectElement exp_semidirect(const Mat2& X1, const Mat2& X2, double t = 1.0, int force = 0);

/// m-coordinates of the Bruck complement: X1 = l2 H + l3 T, X2 = -l1 U.
SemidirectElement exp_semidirect_m(double l1, double l2, double l3);

/// Translation part (r, s, v) of the reference closed-form solution with
/// parameters X1 = ((a, b), (c, -a)), X2 = ((k, u), (y, -k)). The reference
/// formulas solve gamma' = X1 gamma - gamma X1 + X2, which is the
/// exponential of the standard law (A1 A2, X1 + A1 X2 A1^-1).
struct RSV {
  double r;
  double s;
  double v;
};
RSV printed_rsv(double a, double b, double c, double k, double u, double y, double t, int force = 0);
/// The reference expression evaluated term by term; ill-conditioned as
/// a^2 + bc -> 0, kept as a cross-check of the regrouped form.
RSV printed_rsv_literal(double a, double b, double c, double k, double u, double y, double t);
/// Same specialised to the m-coordinates (r(1), s(1), v(1) in closed form).
RSV printed_rsv_m(double l1, double l2, double l3);
/// Closed-form lambda_1 = -4 u w / (e^{2w} - e^{-2w}), w = sqrt(l2^2 + l3^2).
double printed_lambda1(double u, double l2, double l3);

/// Classical RK4 integration of beta' = beta X1 and
/// gamma' = -X1 gamma + gamma X1 + X2 from the identity. Test oracle only.
SemidirectElement ode_exp_oracle(const Mat2& X1, const Mat2& X2, int steps = 2000, double t = 1.0);

// ---------------------------------------------------------------------------
// Decompositions

struct Iwasawa {
  double a;
  double b;
  double t;
};
/// g = ((a, 0), (b, 1/a)) R(t), a > 0, t in [0, 2 pi).
Iwasawa iwasawa_decompose(const Mat2& g);
Mat2 iwasawa_compose(const Iwasawa& d);

/// Iwasawa section of the hyperbolic plane loop.
Mat2 sigma1(double a, double b);

/// A = P R with P symmetric positive definite and R a rotation.
struct RealPolar {
  Mat2 P;
  Mat2 R;
};
RealPolar polar_decompose_sl2r(const Mat2& A);

struct ComplexPolar {
  Mat2c p;
  Mat2c u;
};
/// g = p u with p positive Hermitian, u in SU2.
ComplexPolar polar_decompose_sl2c(const Mat2c& g);

/// Square root of a positive 2x2 matrix with determinant one:
/// sqrt(P) = (P + I) / sqrt(tr P + 2).
template <typename S>
Eigen::Matrix<S, 2, 2> sqrt_positive_det1(const Eigen::Matrix<S, 2, 2>& P) {
  using std::sqrt;
  return (P + Eigen::Matrix<S, 2, 2>::Identity()) / sqrt(P.trace() + S(2));
}

/// (l2, l3) with P = exp(l2 H + l3 T), for symmetric positive P of det 1.
Eigen::Vector2d log_spd(const Mat2& P);
/// (x, y, z) with P = exp(x H + y T + z iU), for positive Hermitian P of det 1.
Vec3 log_hermitian(const Mat2c& P);
Mat2c hermitian_from_coords(const Vec3& c);

struct PseudoFactor {
  Vec3 lambda;  // (l1, l2, l3)
  SemidirectElement m;
  SemidirectElement h;
  double residual;
};
/// g = exp_semidirect_m(lambda) * h with h = (R(t), symmetric traceless).
PseudoFactor factor_pseudo_euclidean(const SemidirectElement& g);

/// Stabiliser membership: rotation part and symmetric translation part.
bool in_pseudo_stabilizer(const SemidirectElement& g, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Upper half space

struct JQuaternion {
  std::complex<double> x;
  double y;
};
/// (a w + b)(c w + d)^-1 evaluated in the quaternions.
JQuaternion mobius_J(const Mat2c& g, const JQuaternion& w);
/// Positive Hermitian translation taking j to w.
Mat2c hyperbolic_translation(const JQuaternion& w);

// ---------------------------------------------------------------------------
// E(2,1) and its affine model

/// ((k, l+n), (l-n, -k)) -> (k, l, n).
Vec3 omega(const Mat2& Y);
Mat2 omega_inv(const Vec3& v);
/// The 3x3 linear block of Omega.
Mat3 Omega_matrix(const Mat2& A);

/// Affine motion v -> B v + b of the model space.
struct AffineMotion {
  Mat3 B = Mat3::Identity();
  Vec3 b = Vec3::Zero();
};
AffineMotion Omega(const SemidirectElement& g);
/// The action (A, X) * Y = A^-1 Y A + X on E(2,1).
Mat2 star_action(const SemidirectElement& g, const Mat2& Y);
/// Norm x^2 + k^2 - l^2 = -det Y.
double e21_norm(const Mat2& Y);

/// Plane {v : <p, v>_Q = s} of the model space, Q = diag(1, 1, -1), p future
/// unit timelike.
struct PseudoPlane {
  Vec3 p = Vec3(0, 0, 1);
  double s = 0.0;
};
double q_inner(const Vec3& a, const Vec3& b);
PseudoPlane normalize_plane(const Vec3& p, double s);
PseudoPlane apply(const AffineMotion& g, const PseudoPlane& plane);
/// The plane of a coset gH under the left action g . Y = g^-1 * Y.
PseudoPlane coset_plane(const SemidirectElement& g);

}  // namespace bolkit
