#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "bolkit/matrix_groups.hpp"
#include "oracles.hpp"

using namespace bolkit;

namespace {

// Plain Taylor series with scaling and squaring.
template <typename M>
M series_exp(const M& X) {
  int squarings = 0;
  double n = X.norm();
  while (n > 0.5) {
    n /= 2;
    ++squarings;
  }
  const M Y = X / std::pow(2.0, squarings);
  M term = M::Identity(), sum = M::Identity();
  for (int k = 1; k < 30; ++k) {
    term = term * Y / double(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

Mat2 random_sl2(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  Mat2 X;
  const double a = u(gen);
  X << a, u(gen), u(gen), -a;
  return exp_sl2(X);
}

}  // namespace

TEST_CASE("exp_sl2 against a Taylor series, real and complex") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 50; ++i) {
    Mat2 X;
    const double a = u(gen);
    X << a, u(gen), u(gen), -a;
    CHECK((exp_sl2(X) - series_exp(X)).norm() <= 1e-11 * std::max(1.0, series_exp(X).norm()));
    Mat2c Z;
    const std::complex<double> c(u(gen), u(gen));
    Z << c, std::complex<double>(u(gen), u(gen)), std::complex<double>(u(gen), u(gen)), -c;
    CHECK((exp_sl2(Z) - series_exp(Z)).norm() <= 1e-11 * std::max(1.0, series_exp(Z).norm()));
  }
  // Nilpotent: exp X = I + X.
  Mat2 N;
  N << 0, 3, 0, 0;
  CHECK((exp_sl2(N) - (Mat2::Identity() + N)).norm() == doctest::Approx(0.0));
}

TEST_CASE("inverse_det1 is the inverse on SL2") {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 20; ++i) {
    const Mat2 g = random_sl2(gen);
    CHECK((g * inverse_det1(g) - Mat2::Identity()).norm() <= 1e-12 * g.squaredNorm());
  }
}

TEST_CASE("Iwasawa decomposition round trip") {
  std::mt19937_64 gen(9);
  for (int i = 0; i < 50; ++i) {
    const Mat2 g = random_sl2(gen);
    const Iwasawa d = iwasawa_decompose(g);
    CHECK(d.a > 0);
    CHECK(d.t >= 0);
    CHECK(d.t < 2 * M_PI);
    CHECK((iwasawa_compose(d) - g).norm() <= 1e-12 * std::max(1.0, g.norm()));
  }
}

TEST_CASE("real and complex polar decompositions") {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 30; ++i) {
    const Mat2 g = random_sl2(gen);
    const RealPolar p = polar_decompose_sl2r(g);
    CHECK((p.P * p.R - g).norm() <= 1e-11);
    CHECK((p.P - p.P.transpose()).norm() <= 1e-12);
    CHECK(p.P.eigenvalues().real().minCoeff() > 0);
    CHECK((p.R * p.R.transpose() - Mat2::Identity()).norm() <= 1e-12);

    Mat2c X;
    const std::complex<double> a(u(gen), u(gen));
    X << a, std::complex<double>(u(gen), u(gen)), std::complex<double>(u(gen), u(gen)), -a;
    const Mat2c G = exp_sl2(X);
    const ComplexPolar c = polar_decompose_sl2c(G);
    CHECK((c.p * c.u - G).norm() <= 1e-11);
    CHECK((c.p - c.p.adjoint()).norm() <= 1e-12);
    CHECK((c.u * c.u.adjoint() - Mat2c::Identity()).norm() <= 1e-11);
    CHECK(std::abs(c.u.determinant() - 1.0) <= 1e-11);
    // log/exp round trip on the Hermitian factor.
    const Vec3 coords = log_hermitian(c.p);
    CHECK((exp_sl2(Mat2c(hermitian_from_coords(coords))) - c.p).norm() <= 1e-10);
  }
}

TEST_CASE("sqrt of a positive det-one matrix") {
  Mat2 P;
  P << 5, 2, 2, 1;
  const Mat2 s = sqrt_positive_det1(P);
  CHECK((s * s - P).norm() <= 1e-13);
}

TEST_CASE("hyperbolic translation moves j to w") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 30; ++i) {
    const JQuaternion w{{u(gen), u(gen)}, std::exp(u(gen))};
    const JQuaternion img = mobius_J(hyperbolic_translation(w), JQuaternion{{0, 0}, 1.0});
    CHECK(std::abs(img.x - w.x) <= 1e-11);
    CHECK(img.y == doctest::Approx(w.y).epsilon(1e-11));
  }
}

TEST_CASE("Moebius action on the upper half space is an action") {
  std::mt19937_64 gen(19);
  std::uniform_real_distribution<double> u(-1, 1);
  auto rnd = [&] {
    Mat2c X;
    const std::complex<double> a(u(gen), u(gen));
    X << a, std::complex<double>(u(gen), u(gen)), std::complex<double>(u(gen), u(gen)), -a;
    return Mat2c(exp_sl2(X));
  };
  for (int i = 0; i < 20; ++i) {
    const Mat2c g = rnd(), h = rnd();
    const JQuaternion w{{u(gen), u(gen)}, 0.5 + std::abs(u(gen))};
    const JQuaternion lhs = mobius_J(Mat2c(g * h), w), rhs = mobius_J(g, mobius_J(h, w));
    CHECK(std::abs(lhs.x - rhs.x) <= 1e-10);
    CHECK(std::abs(lhs.y - rhs.y) <= 1e-10);
  }
}

TEST_CASE("semidirect group law") {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> u(-1, 1);
  auto rnd = [&] {
    return SemidirectElement{random_sl2(gen), translation_matrix(u(gen), u(gen), u(gen))};
  };
  for (int i = 0; i < 20; ++i) {
    const auto a = rnd(), b = rnd(), c = rnd();
    CHECK(semidirect_distance(semidirect_mul(semidirect_mul(a, b), c), semidirect_mul(a, semidirect_mul(b, c))) <=
          1e-10);
    CHECK(semidirect_distance(semidirect_mul(a, semidirect_inv(a)), SemidirectElement{}) <= 1e-11);
    const Vec3 v(u(gen), u(gen), u(gen));
    CHECK((translation_coords(translation_matrix(v(0), v(1), v(2))) - v).norm() <= 1e-15);
  }
}

TEST_CASE("exp_semidirect against an independent RK4 integrator") {
  std::mt19937_64 gen(29);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 15; ++i) {
    Mat2 X1, X2;
    const double a = u(gen), b = u(gen);
    const double c = i < 4 ? -a * a / b : u(gen);  // nilpotent first
    X1 << a, b, c, -a;
    const double k = u(gen);
    X2 << k, u(gen), u(gen), -k;
    const auto got = exp_semidirect(X1, X2);
    const auto ref = oracle::rk4_semidirect(X1, X2, 3000);
    const double scale = std::max({1.0, ref.A.norm(), ref.G.norm()});
    CHECK((got.A - ref.A).norm() / scale <= 1e-9);
    CHECK((got.X - ref.G).norm() / scale <= 1e-9);
  }
}

TEST_CASE("closed form and series agree across the seam") {
  for (double d : {2e-6, 1e-6, 5e-7, -5e-7, -1e-6, -2e-6})
    for (double t : {0.3, 1.0, 1.7}) {
      const auto closed = exp_coefficients(d, t, 1), series = exp_coefficients(d, t, 2);
      CHECK(std::abs(closed.C - series.C) <= 1e-11);
      CHECK(std::abs(closed.D - series.D) <= 1e-11);
    }
}

TEST_CASE("printed translation part matches the regrouped form") {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 20; ++i) {
    const double a = u(gen), b = u(gen), c = u(gen), k = u(gen), uu = u(gen), y = u(gen), t = 1 + u(gen);
    if (std::abs(a * a + b * c) < 1e-2) continue;
    const RSV r = printed_rsv(a, b, c, k, uu, y, t), l = printed_rsv_literal(a, b, c, k, uu, y, t);
    CHECK(r.r == doctest::Approx(l.r).epsilon(1e-8));
    CHECK(r.s == doctest::Approx(l.s).epsilon(1e-8));
    CHECK(r.v == doctest::Approx(l.v).epsilon(1e-8));
  }
}

TEST_CASE("omega identifications and the norm") {
  std::mt19937_64 gen(37);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 20; ++i) {
    const Vec3 v(u(gen), u(gen), u(gen));
    CHECK((omega(omega_inv(v)) - v).norm() <= 1e-15);
    const Mat2 Y = omega_inv(v);
    CHECK(e21_norm(Y) == doctest::Approx(q_inner(v, v)));
    // A^-1 Y A preserves the norm.
    const SemidirectElement g{random_sl2(gen), Mat2::Zero()};
    CHECK(e21_norm(star_action(g, Y)) == doctest::Approx(e21_norm(Y)).epsilon(1e-9));
    // Omega intertwines the two actions.
    const SemidirectElement h{random_sl2(gen), translation_matrix(u(gen), u(gen), u(gen))};
    const AffineMotion m = Omega(h);
    CHECK((omega(star_action(h, Y)) - (m.B * v + m.b)).norm() <= 1e-10);
  }
}

TEST_CASE("pseudo-euclidean factorisation") {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 20; ++i) {
    const SemidirectElement g{random_sl2(gen), translation_matrix(u(gen), u(gen), u(gen))};
    const PseudoFactor f = factor_pseudo_euclidean(g);
    CHECK(f.residual <= 1e-9);
    CHECK(in_pseudo_stabilizer(f.h));
    CHECK(semidirect_distance(semidirect_mul(f.m, f.h), g) <= 1e-9);
  }
}
