#include <doctest.h>

#include <random>

#include "bolkit/catalog.hpp"
#include "bolkit/lie_core.hpp"
#include "oracles.hpp"

using namespace bolkit;

TEST_CASE("parse_rational accepts integers and fractions only") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2x"), std::invalid_argument);
}

TEST_CASE("exact inertia agrees with a floating-point eigensolver") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    // Low-rank products B D B^T exercise the zero count as well.
    MatQ B(n, n), D = MatQ::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) B(i, j) = coef(gen);
      D(i, i) = coef(gen) % 2;
    }
    const MatQ S = B * D * B.transpose();
    const Inertia in = inertia(S);
    const auto fl = oracle::float_inertia(cast_matrix<double>(S), 1e-7);
    CHECK(in.positive == fl[0]);
    CHECK(in.negative == fl[1]);
    CHECK(in.zero == fl[2]);
    CHECK(exact_rank(S) == in.positive + in.negative);
  }
}

TEST_CASE("null space and rref") {
  MatQ m(2, 3);
  m << 1, 2, 3, 2, 4, 6;
  CHECK(exact_rank(m) == 1);
  const MatQ ns = null_space(m);
  CHECK(ns.cols() == 2);
  CHECK((m * ns).isZero());
  const MatQ r = rref(m);
  CHECK(r.rows() == 1);
  CHECK(r(0, 0) == 1);
  CHECK(r(0, 2) == 3);
}

TEST_CASE("every catalog algebra satisfies Jacobi and has the trace Killing form") {
  const Catalog& cat = Catalog::builtin();
  for (const auto& e : cat.list()) {
    if (e.kind != EntryKind::algebra) continue;
    const auto alg = cat.algebra(e.id);
    CAPTURE(e.id);
    CHECK(check_jacobi(*alg).pass);
    for (int i = 0; i < alg->dim(); ++i)
      for (int j = 0; j < alg->dim(); ++j) CHECK(killing_by_trace(*alg, alg->e(i), alg->e(j)) == alg->killing_gram()(i, j));
  }
}

TEST_CASE("a broken bracket table fails Jacobi") {
  LieAlgebra::BracketTable t;
  VecQ v = VecQ::Zero(3);
  v(1) = 1;
  t[{0, 1}] = v;
  VecQ w = VecQ::Zero(3);
  w(0) = 1;
  t[{0, 2}] = w;
  LieAlgebra bad("bad", {"a", "b", "c"}, t, Rational(1));
  CHECK_FALSE(check_jacobi(bad).pass);
}

TEST_CASE("subspaces are canonical and obey the dimension formula") {
  const auto b1 = Catalog::builtin().algebra("B1");
  const VecQ H = b1->combo({{"H", 1}}), T = b1->combo({{"T", 1}}), U = b1->combo({{"U", 1}});
  const Subspace a(b1, std::vector<VecQ>{H, T});
  const Subspace a2(b1, std::vector<VecQ>{H + T, H - T});
  CHECK(a == a2);
  const Subspace b(b1, std::vector<VecQ>{T, U});
  CHECK(sum(a, b).rank() + intersect(a, b).rank() == a.rank() + b.rank());
  CHECK(intersect(a, b) == Subspace(b1, std::vector<VecQ>{T}));
  CHECK(a.contains(H + Rational(3) * T));
  CHECK_FALSE(a.contains(U));
  const VecQ c = a.coordinates(H + Rational(3) * T);
  CHECK((a.rows().transpose() * c) == H + Rational(3) * T);
}

TEST_CASE("sl2(R) inside B1: subalgebra, derived space and centre") {
  const auto b1 = Catalog::builtin().algebra("B1");
  const Subspace sl2r(b1, std::vector<VecQ>{b1->e(0), b1->e(1), b1->e(2)});
  CHECK(is_subalgebra(sl2r));
  CHECK_FALSE(is_ideal(sl2r));
  CHECK(center(b1).rank() == 0);
  CHECK(derived_space(sl2r) == sl2r);
  CHECK(generated_subalgebra(Subspace(b1, std::vector<VecQ>{b1->e(0), b1->e(1)})) == sl2r);
}

namespace {

// Closure [[x, y], z] in span(m), computed on 2x2 complex matrices through
// the realisation of B1, never through the structure constants.
bool closure_by_matrices(const std::vector<VecQ>& basis) {
  const auto mats = oracle::sl2c_basis();
  auto to_matrix = [&](const VecQ& v) {
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 6; ++i) out += v(i).convert_to<double>() * mats[i];
    return out;
  };
  auto flatten = [](const Eigen::Matrix2cd& m) {
    Eigen::VectorXd v(8);
    for (int i = 0; i < 4; ++i) {
      v(2 * i) = m(i / 2, i % 2).real();
      v(2 * i + 1) = m(i / 2, i % 2).imag();
    }
    return v;
  };
  Eigen::MatrixXd span(8, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) span.col(i) = flatten(to_matrix(basis[i]));
  const auto rank = [](const Eigen::MatrixXd& m) { return Eigen::FullPivLU<Eigen::MatrixXd>(m).setThreshold(1e-9).rank(); };
  const auto base = rank(span);
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        const Eigen::Matrix2cd X = to_matrix(x), Y = to_matrix(y), Z = to_matrix(z);
        const Eigen::Matrix2cd XY = X * Y - Y * X;
        Eigen::MatrixXd ext(8, span.cols() + 1);
        ext << span, flatten(XY * Z - Z * XY);
        if (rank(ext) != base) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("triple-system closure agrees with a matrix oracle on random planes of B1") {
  const auto b1 = Catalog::builtin().algebra("B1");
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> coef(-1, 1);
  int closed = 0, open = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<VecQ> basis;
    const int k = 2 + trial % 2;
    for (int i = 0; i < k; ++i) {
      VecQ v = VecQ::Zero(6);
      // Sparse vectors give both closed and non-closed planes.
      v(gen() % 6) = 1;
      v(gen() % 6) += coef(gen);
      basis.push_back(v);
    }
    const Subspace m(b1, basis);
    if (m.rank() < 2) continue;
    const bool want = closure_by_matrices(m.basis_vectors());
    CAPTURE(format_subspace(m));
    CHECK(triple_closed(m) == want);
    const auto r = is_lie_triple_system(m);
    if (!want) CHECK_FALSE(r.pass);
    (want ? closed : open)++;
  }
  CHECK(closed > 0);
  CHECK(open > 0);
}

TEST_CASE("catalog triple systems satisfy the triple-system identities") {
  const Catalog& cat = Catalog::builtin();
  for (const char* id : {"m_4.1", "m_4.2", "m_5.2", "m_5.3", "m_6.1", "m_6.2", "m_6.3", "m_7", "m_prod"}) {
    CAPTURE(id);
    CHECK(is_lie_triple_system(cat.subspace(id)).pass);
  }
}

TEST_CASE("Bol algebra check on a symmetric pair") {
  const Catalog& cat = Catalog::builtin();
  const Subspace m = cat.bol_family("m_a", {Rational(0)});
  const Subspace h = cat.subspace("h_sec4");
  CHECK(direct_sum_check(m, h));
  CHECK(is_bol_algebra(m, h).pass);
  const VecQ v = m.basis(0) + h.basis(0);
  CHECK(project_along(m, h, v) == m.basis(0));
}

TEST_CASE("largest ideal inside a subalgebra") {
  const Catalog& cat = Catalog::builtin();
  const auto b4 = cat.algebra("B4");
  const Subspace radical(b4, std::vector<VecQ>{b4->e(0), b4->e(4), b4->e(5)});
  CHECK(is_ideal(radical));
  CHECK(largest_ideal_in(radical) == radical);
  // h_sec7_f = <e4, e5, e6> meets the radical in <e5, e6>, which is not an ideal.
  const Subspace h = cat.subspace("h_sec7_f");
  CHECK_FALSE(is_ideal(h));
  CHECK(largest_ideal_in(h).rank() == 0);
  CHECK_FALSE(contains_nonzero_ideal(h));
  CHECK(largest_ideal_in(h) != h);
  CHECK_FALSE(contains_nonzero_ideal(cat.subspace("h_sec4")));
}
