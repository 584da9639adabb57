#include <doctest.h>

#include "bolkit/catalog.hpp"

using namespace bolkit;

TEST_CASE("built-in catalog validates") {
  const Catalog& cat = Catalog::builtin();
  for (const auto& r : cat.validate()) {
    CAPTURE(r.context);
    CHECK(r.pass);
  }
}

TEST_CASE("catalog lists the expected entries") {
  const Catalog& cat = Catalog::builtin();
  for (const char* id : {"B1", "B2", "B3", "B4", "case5.1", "case7", "sl2xsl2", "m_4.1", "m_prod", "h_sec4",
                         "h_sec7_f", "m_a", "m_d", "m_b3c3c2"})
    CHECK(cat.has(id));
  CHECK_FALSE(cat.has("nope"));
  CHECK_THROWS_AS(cat.algebra("nope"), LookupError);
  CHECK_THROWS_AS(cat.subspace("nope"), LookupError);
}

TEST_CASE("family domains") {
  const Catalog& cat = Catalog::builtin();
  CHECK_THROWS_AS(cat.bol_family("m_a", {Rational(1)}), DomainError);
  CHECK_THROWS_AS(cat.bol_family("m_d", {Rational(0)}), DomainError);
  CHECK_THROWS_AS(cat.bol_family("m_b3c3c2", {Rational(3, 5), Rational(4, 5), Rational(0)}), DomainError);
  CHECK(cat.bol_family("m_b3c3c2", {Rational(3, 5), Rational(1, 5), Rational(2)}).rank() == 3);
  CHECK(cat.family("m_b3c3c2").stabilizer == "h_sec7_f");
}

TEST_CASE("matrix realisations reproduce the stored tables") {
  const Catalog& cat = Catalog::builtin();
  const auto b4 = derive_structure_constants_pairs("B4'", cat.algebra("B4")->labels(), b4_pairs(), Rational(1, 4));
  for (int i = 0; i < 6; ++i) CHECK(b4.ad_basis(i) == cat.algebra("B4")->ad_basis(i));
  const auto b3 = derive_structure_constants("B3'", cat.algebra("B3")->labels(), b3_matrices(), Rational(1, 4));
  for (int i = 0; i < 6; ++i) CHECK(b3.ad_basis(i) == cat.algebra("B3")->ad_basis(i));
}

TEST_CASE("a matrix set that is not closed is rejected") {
  MatQ a = MatQ::Zero(2, 2), b = MatQ::Zero(2, 2);
  a(0, 1) = 1;
  b(1, 0) = 1;
  CHECK_THROWS_AS(derive_structure_constants("x", {"a", "b"}, {a, b}, Rational(1)), RepresentationError);
}

TEST_CASE("realify doubles a complex matrix") {
  const MatQ r = realify(mat_H(), mat_U());
  CHECK(r.rows() == 4);
  CHECK(r.block(0, 0, 2, 2) == mat_H());
  CHECK(r.block(2, 2, 2, 2) == mat_H());
}

TEST_CASE("algebra JSON round trip") {
  const auto b2 = Catalog::builtin().algebra("B2");
  const LieAlgebra back = algebra_from_json(algebra_to_json(*b2));
  CHECK(back.labels() == b2->labels());
  for (int i = 0; i < b2->dim(); ++i) CHECK(back.ad_basis(i) == b2->ad_basis(i));
  CHECK(back.killing_normalization() == b2->killing_normalization());
}

TEST_CASE("merging a custom catalog") {
  Catalog cat = Catalog::builtin();
  const auto doc = nlohmann::json::parse(R"({
    "algebras": [{"name": "heis", "dim": 3, "basis": ["x", "y", "z"],
                  "brackets": {"0,1": ["0", "0", "1"]}, "killing_normalization": "1"}],
    "subspaces": [{"id": "m_heis", "algebra": "heis", "kind": "triple_system",
                   "basis": [["1", "0", "0"], ["0", "1", "0"]]}]})");
  cat.merge_json(doc);
  CHECK(cat.has("heis"));
  CHECK(cat.subspace("m_heis").rank() == 2);
  CHECK(cat.algebra("heis")->killing_gram().isZero());
  for (const auto& r : cat.validate()) CHECK(r.pass);

  Catalog other = Catalog::builtin();
  const auto bad = nlohmann::json::parse(R"({"algebras": [{"name": "bad", "dim": 3, "basis": ["a", "b", "c"],
      "brackets": {"0,1": ["0", "1", "0"], "0,2": ["1", "0", "0"]}, "killing_normalization": "1"}]})");
  CHECK_THROWS_AS(other.merge_json(bad), InputError);
  const auto unknown = nlohmann::json::parse(R"({"subspaces": [{"id": "s", "algebra": "none", "kind": "stabilizer",
      "basis": [["1"]]}]})");
  CHECK_THROWS(other.merge_json(unknown));
}

TEST_CASE("catalog JSON lists families with parameters") {
  const auto j = Catalog::builtin().to_json();
  bool seen = false;
  for (const auto& e : j)
    if (e.at("id") == "m_b3c3c2") {
      seen = true;
      CHECK(e.at("parameters").size() == 3);
    }
  CHECK(seen);
}
