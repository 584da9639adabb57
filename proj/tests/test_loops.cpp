#include <doctest.h>

#include "bolkit/loops.hpp"

using namespace bolkit;

namespace {
constexpr std::uint64_t kSeed = 4242;

template <class G>
void check_bol_loop(const LoopContext<G>& ctx, int n) {
  CAPTURE(ctx.label);
  CHECK(check_identity(ctx, n, kSeed).pass);
  CHECK(check_sharp_transitivity(ctx, n, kSeed).pass);
  CHECK(check_bol(ctx, n, kSeed).pass);
  CHECK(check_bol_identity(ctx, n, kSeed).pass);
  CHECK(check_divisions(ctx, n, kSeed).pass);
}
}  // namespace

TEST_CASE("damped Newton solves a small nonlinear system") {
  auto F = [](const VecX& x) -> VecX {
    VecX r(2);
    r << x(0) * x(0) + x(1) * x(1) - 4, x(0) - x(1);
    return r;
  };
  VecX x0(2);
  x0 << 1, 0.5;
  const NewtonResult n = newton_solve(F, x0);
  CHECK(n.converged);
  CHECK(n.x(0) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("global Bol loops") {
  check_bol_loop(hyperbolic_space_loop(), 40);
  check_bol_loop(scheerer_loop(), 40);
  check_bol_loop(pseudo_euclidean_loop(), 40);
}

TEST_CASE("polar and Moebius realisations of the hyperbolic space loop agree") {
  CHECK(check_l0_realizations(50, kSeed).pass);
  VecX x(3), y(3);
  x << 0.3, -0.2, 0.5;
  y << -0.4, 0.1, 0.2;
  const auto ctx = hyperbolic_space_loop();
  const JQuaternion direct = l0_point(loop_mul(ctx, x, y));
  const JQuaternion via = l0_mobius_mul(l0_point(x), l0_point(y));
  CHECK(std::abs(direct.x - via.x) <= 1e-10);
  CHECK(direct.y == doctest::Approx(via.y));
}

TEST_CASE("Scheerer loop has the circle as a normal subgroup") {
  CHECK(check_scheerer_normal_subgroup(40, kSeed).pass);
}

TEST_CASE("pseudo-euclidean bridge to the affine model") {
  for (const auto& r : check_pseudo_euclidean_bridge(40, kSeed)) {
    CAPTURE(r.check);
    CHECK(r.pass);
  }
}

TEST_CASE("local loops from the families") {
  check_bol_loop(loop_La(0.5), 15);
  check_bol_loop(loop_Lbcc(0.3, 0.4, 2.0), 15);
  CHECK(loop_Lbcc(0.3, 0.4, 2.0).global);
  CHECK_FALSE(loop_Lbcc(2.0, 0.0, 1.0).global);
}

TEST_CASE("outside the disc exp m has a nontrivial element fixing a coset") {
  const FixedPointWitness w = lbcc_fixed_point(2.0, 0.0, 1.0);
  CHECK(w.period_residual <= 1e-9);
  CHECK(w.fixed_residual <= 1e-9);
  CHECK(w.distance_from_identity > 0.1);
}

TEST_CASE("conjugating a Bol section keeps it sharply transitive") {
  const auto base = pseudo_euclidean_loop();
  const SemidirectElement g{rotation(0.4), translation_matrix(0.2, -0.1, 0.3)};
  const auto conj = conjugate_section(base, g);
  CHECK(check_identity(conj, 10, kSeed).pass);
  CHECK(check_sharp_transitivity(conj, 10, kSeed).pass);
}

TEST_CASE("non-Bol loops on the euclidean planes") {
  for (const Vec3& dir : {Vec3(0, 0, 1), Vec3(0.5, 0, 1)}) {
    const auto ctx = nonbol_loop(dir);
    CAPTURE(ctx.label);
    CHECK(check_sharp_transitivity(ctx, 30, kSeed).pass);
    CHECK(check_divisions(ctx, 30, kSeed).pass);
    const auto bol = check_bol(ctx, 30, kSeed);
    CHECK_FALSE(bol.pass);
    CHECK(bol.max_residual > 0.1);
    const NonBolWitness w = nonbol_witness(dir);
    CHECK(w.rr_residual > 0.1);
    CHECK(w.commutator_offset > 1e-6);
  }
  CHECK(check_k_conjugation(Vec3(0, 0, 1), 30, kSeed).pass);
  const auto tilted = check_k_conjugation(Vec3(0.5, 0, 1), 30, kSeed);
  CHECK_FALSE(tilted.pass);
  CHECK(tilted.max_residual > 0.1);
}

TEST_CASE("forced section elements diverge near c = -1") {
  const auto rows = divergence_demo(7);
  for (int k = 3; k <= 7; ++k) {
    const double c = -1 + std::pow(10.0, -k);
    const DivergenceRow r = divergence_element(c);
    CHECK(r.norm >= std::pow(10.0, k));
    CHECK(r.coset_residual <= 1e-6 * r.norm);
  }
  CHECK(check_divergence(3, 7).pass);
  CHECK(rows.size() >= 5);
}

TEST_CASE("loop checks are deterministic in the seed") {
  const auto ctx = scheerer_loop();
  const auto a = check_bol_identity(ctx, 20, 1), b = check_bol_identity(ctx, 20, 1);
  CHECK(a.max_residual == b.max_residual);
}
