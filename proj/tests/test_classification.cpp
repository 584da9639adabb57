#include <doctest.h>

#include "bolkit/catalog.hpp"
#include "bolkit/classification.hpp"
#include "oracles.hpp"

using namespace bolkit;

namespace {
const Catalog& cat() { return Catalog::builtin(); }
}  // namespace

TEST_CASE("psl2c isomorphism equations: solver against the typed system") {
  for (const char* text : {"1/2", "0", "1/4", "-3/4", "3/2", "-2"}) {
    const Rational a = parse_rational(text);
    CAPTURE(text);
    const auto sols = solve_iso_psl2c(a);
    CHECK(sols.size() == (a == 0 ? 1u : 2u));
    for (const auto& s : sols) {
      CHECK(oracle::psl2c_system_holds(a, s.witness[0], s.witness[1], s.witness[2], s.witness[3], s.b));
      for (const auto& r : s.residuals) CHECK(r == 0);
      CHECK(s.admissible == (abs(s.b) < 1));
      CHECK((s.b == -a || (a != 0 && s.b == 1 / a)));
    }
  }
}

TEST_CASE("psl2c lattice oracle finds nothing outside the solver output") {
  for (const Rational a : {Rational(1, 2), Rational(1, 4)}) {
    std::set<Rational> returned;
    for (const auto& s : solve_iso_psl2c(a)) returned.insert(s.b);
    const auto lattice = oracle::psl2c_lattice_solutions(a);
    CHECK_FALSE(lattice.empty());
    for (const auto& b : lattice) CHECK(returned.count(b) == 1);
  }
}

TEST_CASE("semidirect isomorphism to the representative") {
  const auto r = solve_iso_semidirect(Rational(3, 10), Rational(2, 5), Rational(7, 3));
  REQUIRE(r.d_exact);
  CHECK(*r.d_exact == Rational(1, 2));
  CHECK(r.gamma_verified);
  CHECK(r.alpha_verified);
  CHECK(r.exact);
  const auto f = solve_iso_semidirect(Rational(1, 2), Rational(1, 3), Rational(1));
  CHECK_FALSE(f.d_exact);
  CHECK(f.defect <= 1e-12);
  CHECK(f.d == doctest::Approx(std::sqrt(0.25 + 1.0 / 9)));
  CHECK_THROWS_AS(solve_iso_semidirect(Rational(1), Rational(1, 2), Rational(0)), DomainError);
  CHECK(is_automorphism(*cat().algebra("B4"), gamma_matrix(Rational(5))));
}

TEST_CASE("grading and reductivity") {
  const Subspace h4 = cat().subspace("h_sec4");
  CHECK(bruck_grading(cat().bol_family("m_a", {Rational(0)}), h4).all());
  CHECK_FALSE(left_a_check(cat().bol_family("m_a", {Rational(1, 2)}), h4).reductive);

  const Subspace hf = cat().subspace("h_sec7_f");
  CHECK(bruck_grading(cat().bol_family("m_b3c3c2", {0, 0, Rational(3)}), hf).all());
  const auto g = bruck_grading(cat().bol_family("m_b3c3c2", {Rational(1, 2), 0, 0}), hf);
  CHECK_FALSE(g.all());
  const auto b4 = cat().algebra("B4");
  const auto l = left_a_check(cat().bol_family("m_b3c3c2", {Rational(1, 2), 0, 0}), hf);
  REQUIRE(l.witness);
  CHECK(bracket<Rational>(*b4, b4->e(3), b4->combo({{"e1", 1}, {"e5", Rational(1, 2)}})) ==
        b4->combo({{"e6", Rational(1, 2)}}));

  const auto s = bruck_grading(cat().subspace("m_5.3"), cat().subspace("h3_sec5_k1"));
  CHECK(s.hh_in_h);
  CHECK(s.hm_in_m);
  CHECK_FALSE(s.mm_in_h);
  CHECK_THROWS_AS(bruck_grading(cat().subspace("m_4.1"), cat().subspace("m_4.1")), InputError);
}

TEST_CASE("compactness agrees with float inertia") {
  const auto b1 = cat().algebra("B1");
  for (const char* text : {"0", "1/4", "-1/2", "3/4", "3/2", "2", "-5"}) {
    const Rational a = parse_rational(text);
    const Subspace g = derived_space(cat().bol_family("m_a", {a}));
    const auto v = compactness_check(g);
    const MatQ gram = g.rows() * b1->killing_gram() * g.rows().transpose();
    const auto fl = oracle::float_inertia(cast_matrix<double>(gram));
    CAPTURE(text);
    CHECK(v.inertia.positive == fl[0]);
    CHECK(v.inertia.negative == fl[1]);
    CHECK(v.compact == (abs(a) < 1));
    if (!v.compact) {
      REQUIRE(v.witness);
      CHECK(killing<Rational>(*b1, *v.witness, *v.witness) >= 0);
      CHECK(g.contains(*v.witness));
    }
  }
}

TEST_CASE("angle invariant of the semisimple family") {
  const Subspace m0 = cat().bol_family("m_a", {Rational(0)});
  const auto inv = angle_invariant(cat().bol_family("m_a", {Rational(1, 2)}), m0);
  REQUIRE(inv.spectrum.size() == 3);
  CHECK(inv.spectrum[0].first == doctest::Approx(1.0));
  CHECK(inv.spectrum[1].first == doctest::Approx(4.0 / 3));
  CHECK(inv.spectrum[2].first == doctest::Approx(4.0 / 3));
  const auto self = angle_invariant(m0, m0);
  CHECK(spectrum_distance(self, angle_invariant(m0, m0)) == 0.0);
  CHECK(spectrum_distance(inv, self) > 0.1);
}

TEST_CASE("element types and sl2 projectors") {
  const auto b2 = cat().algebra("B2");
  const auto P = sl2_projectors(*b2);
  REQUIRE(P.size() == 1);
  CHECK(element_type(*b2, b2->e(0), P[0]).kind == ElementKind::zero);
  CHECK(element_type(*b2, b2->e(1), P[0]).kind == ElementKind::hyperbolic);
  CHECK(element_type(*b2, b2->e(3), P[0]).kind == ElementKind::elliptic);
  CHECK(element_type(*b2, b2->e(2) + b2->e(3), P[0]).kind == ElementKind::parabolic);
  CHECK(sl2_projectors(*cat().algebra("sl2xsl2")).size() == 2);
  CHECK_THROWS_AS(sl2_projectors(*cat().algebra("B1")), UnsupportedError);
  CHECK(to_string(ElementKind::parabolic) == "parabolic");
}

TEST_CASE("conjugacy-type obstruction") {
  const auto prod = lemma3_obstruction(cat().subspace("m_prod"), cat().subspace("h1_prod"));
  CHECK(prod.conflict);
  const auto p = lemma3_obstruction(cat().subspace("m_5.2"), cat().subspace("h2_sec5"));
  CHECK(p.conflict);
  CHECK(p.signature == "parabolic");
  CHECK_FALSE(lemma3_obstruction(cat().subspace("m_5.3"), cat().subspace("h2_sec5")).conflict);
  CHECK_FALSE(lemma3_obstruction(cat().subspace("m_4.1"), cat().subspace("h_sec4")).conflict);
  const auto P = cat().algebra("sl2xsl2");
  CHECK(product_conjugate_by_U(P->combo({{"H1", 1}, {"H2", 1}})) == P->combo({{"H1", 1}, {"H2", -1}}));
}

TEST_CASE("ansatz family points are Bol complements") {
  const Subspace h4 = cat().subspace("h_sec4"), hf = cat().subspace("h_sec7_f");
  for (const Rational a : {Rational(0), Rational(1, 2), Rational(-3)}) {
    CHECK(ansatz_subspace(Ansatz::semisimple, ansatz_point_ma(a)) == cat().bol_family("m_a", {a}));
    CHECK(test_complement(ansatz_subspace(Ansatz::semisimple, ansatz_point_ma(a)), h4).bol());
  }
  for (const Rational d : {Rational(1, 2), Rational(2)})
    CHECK(ansatz_subspace(Ansatz::semisimple, ansatz_point_md(d)) == cat().bol_family("m_d", {d}));
  const auto p = ansatz_point_bcc(Rational(1, 3), Rational(2), Rational(-1));
  CHECK(on_bcc_slice(p));
  CHECK(ansatz_subspace(Ansatz::semidirect, p) == cat().bol_family("m_b3c3c2", {Rational(1, 3), Rational(2), Rational(-1)}));
  CHECK(test_complement(ansatz_subspace(Ansatz::semidirect, p), hf).bol());
  auto q = p;
  q[0] += 1;
  CHECK_FALSE(on_bcc_slice(q));
  CHECK_FALSE(triple_closed(ansatz_subspace(Ansatz::semidirect, q)));
}

TEST_CASE("complement scans are deterministic and separate the families") {
  for (Ansatz an : {Ansatz::semisimple, Ansatz::semidirect}) {
    const auto a = bol_complement_scan(an, 60, 5), b = bol_complement_scan(an, 60, 5);
    CHECK(a.off_family == b.off_family);
    CHECK(a.off_family_closed == 0);
    CHECK(a.on_family_pass == a.on_family);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) CHECK(to_json(a.reports[i]) == to_json(b.reports[i]));
  }
}
