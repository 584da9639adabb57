#pragma once

// Independent reference computations used by the unit tests and the
// acceptance harness. Nothing here calls the routine it is checking.

#include <array>
#include <complex>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "bolkit/rational.hpp"

namespace oracle {

using bolkit::Rational;

// Killing form of sl2(C) viewed as a real algebra, normalised so that
// k(H, H) = 1: k(X, Y) = Re tr(XY) / 2.
inline double sl2c_killing(const Eigen::Matrix2cd& x, const Eigen::Matrix2cd& y) { return (x * y).trace().real() / 2; }

// Basis H, T, U, iH, iT, iU as complex matrices.
inline std::array<Eigen::Matrix2cd, 6> sl2c_basis() {
  using C = std::complex<double>;
  Eigen::Matrix2cd H, T, U;
  H << 1, 0, 0, -1;
  T << 0, 1, 1, 0;
  U << 0, 1, -1, 0;
  const C i(0, 1);
  return {H, T, U, i * H, i * T, i * U};
}

// The nine isomorphism equations, typed out independently of the library.
inline bool psl2c_system_holds(const Rational& a, const Rational& c1, const Rational& c2, const Rational& d1,
                               const Rational& d2, const Rational& b) {
  const Rational cc = c1 * c1 - c2 * c2, dd = d2 * d2 - d1 * d1;
  return c1 * c1 + c2 * c2 + d1 * d1 + d2 * d2 == 1 && d1 * c2 == c1 * d2 && d1 * c1 + c2 * d2 == 0 &&
         c1 * d2 + c2 * d1 == 0 && c2 * d2 == c1 * d1 && (dd + a * cc) * b == cc - a * dd &&
         (d1 * d2 + c1 * c2 * a) * b == c1 * c2 - a * d1 * d2 && b * (-a * cc + dd) == -a * dd - cc &&
         b * (c1 * c2 * a - d1 * d2) == d1 * d2 * a + c1 * c2;
}

// Every b on the grid {k/20 : |k| <= 20 * b_range} for which some
// (c1, c2, d1, d2) on the 0.05 lattice satisfies the whole system.
inline std::set<Rational> psl2c_lattice_solutions(const Rational& a, int b_range = 4) {
  std::set<Rational> found;
  const int n = 20;
  for (int c1 = -n; c1 <= n; ++c1)
    for (int c2 = -n; c2 <= n; ++c2)
      for (int d1 = -n; d1 <= n; ++d1)
        for (int d2 = -n; d2 <= n; ++d2) {
          if (c1 * c1 + c2 * c2 + d1 * d1 + d2 * d2 != n * n) continue;
          // Cheap integer prefilter on the homogeneous equations 2-5.
          if (d1 * c2 != c1 * d2 || d1 * c1 + c2 * d2 != 0 || c1 * d2 + c2 * d1 != 0 || c2 * d2 != c1 * d1) continue;
          for (int k = -n * b_range; k <= n * b_range; ++k) {
            const Rational b(k, n);
            if (psl2c_system_holds(a, Rational(c1, n), Rational(c2, n), Rational(d1, n), Rational(d2, n), b))
              found.insert(b);
          }
        }
  return found;
}

// Classical RK4 for the one-parameter subgroup of (X1, X2) under the law
// (A1, G1)(A2, G2) = (A1 A2, A2^-1 G1 A2 + G2):
//   A' = A X1,  G' = G X1 - X1 G + X2.
struct SemidirectPoint {
  Eigen::Matrix2d A;
  Eigen::Matrix2d G;
};

inline SemidirectPoint rk4_semidirect(const Eigen::Matrix2d& X1, const Eigen::Matrix2d& X2, int steps = 4000,
                                      double t = 1.0) {
  const double h = t / steps;
  auto f = [&](const SemidirectPoint& p) {
    return SemidirectPoint{p.A * X1, p.G * X1 - X1 * p.G + X2};
  };
  auto axpy = [](const SemidirectPoint& p, double s, const SemidirectPoint& k) {
    return SemidirectPoint{p.A + s * k.A, p.G + s * k.G};
  };
  SemidirectPoint p{Eigen::Matrix2d::Identity(), Eigen::Matrix2d::Zero()};
  for (int i = 0; i < steps; ++i) {
    const auto k1 = f(p);
    const auto k2 = f(axpy(p, h / 2, k1));
    const auto k3 = f(axpy(p, h / 2, k2));
    const auto k4 = f(axpy(p, h, k3));
    p.A += h / 6 * (k1.A + 2 * k2.A + 2 * k3.A + k4.A);
    p.G += h / 6 * (k1.G + 2 * k2.G + 2 * k3.G + k4.G);
  }
  return p;
}

// Inertia of a symmetric matrix from a dense eigendecomposition, for
// cross-checking the exact congruence count.
inline std::array<int, 3> float_inertia(const Eigen::MatrixXd& s, double tol = 1e-9) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  std::array<int, 3> out{0, 0, 0};
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double v = es.eigenvalues()(i);
    if (v > tol) ++out[0];
    else if (v < -tol) ++out[1];
    else ++out[2];
  }
  return out;
}

}  // namespace oracle
