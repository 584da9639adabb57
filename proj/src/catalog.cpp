#include "bolkit/catalog.hpp"

#include <sstream>

namespace bolkit {

std::string to_string(EntryKind k) {
  switch (k) {
    case EntryKind::algebra: return "algebra";
    case EntryKind::triple_system: return "triple_system";
    case EntryKind::stabilizer: return "stabilizer";
    case EntryKind::complement: return "complement";
    case EntryKind::bol_family: return "bol_family";
    case EntryKind::matrix_rep: return "matrix_rep";
  }
  return "unknown";
}

namespace {

MatQ m2(int a, int b, int c, int d) {
  MatQ m(2, 2);
  m << a, b, c, d;
  return m;
}

MatQ block_diag(const MatQ& a, const MatQ& b) {
  MatQ m = MatQ::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

VecQ flatten(const MatQ& m) {
  VecQ v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

// Coordinates of target in the basis given by the columns of span_cols.
VecQ solve_in_span(const MatQ& span_cols, const VecQ& target, const std::string& what) {
  const Eigen::Index n = span_cols.cols();
  MatQ aug(span_cols.rows(), n + 1);
  aug << span_cols, target;
  MatQ red = rref(aug);
  VecQ c = VecQ::Zero(n);
  for (Eigen::Index i = 0; i < red.rows(); ++i) {
    Eigen::Index p = 0;
    while (red(i, p) == 0) ++p;
    if (p == n) throw RepresentationError(what + ": commutator outside the span");
    c(p) = red(i, n);
  }
  return c;
}

const Rational half(1, 2);

}  // namespace

MatQ mat_H() { return m2(1, 0, 0, -1); }
MatQ mat_T() { return m2(0, 1, 1, 0); }
MatQ mat_U() { return m2(0, 1, -1, 0); }

MatQ realify(const MatQ& re, const MatQ& im) {
  const Eigen::Index n = re.rows();
  MatQ m(2 * n, 2 * n);
  m << re, -im, im, re;
  return m;
}

LieAlgebra derive_structure_constants(const std::string& name, const std::vector<std::string>& labels,
                                      const std::vector<MatQ>& matrices,
                                      const Rational& killing_normalization) {
  const int n = static_cast<int>(matrices.size());
  if (n == 0 || static_cast<int>(labels.size()) != n)
    throw InputError("derive_structure_constants: labels and matrices disagree");
  MatQ cols(matrices[0].size(), n);
  for (int i = 0; i < n; ++i) cols.col(i) = flatten(matrices[i]);
  if (exact_rank(cols.transpose()) != n)
    throw RepresentationError(name + ": matrices are linearly dependent");
  LieAlgebra::BracketTable table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MatQ c = matrices[i] * matrices[j] - matrices[j] * matrices[i];
      VecQ coords = solve_in_span(cols, flatten(c), name);
      if (!coords.isZero()) table[{i, j}] = coords;
    }
  return LieAlgebra(name, labels, table, killing_normalization);
}

LieAlgebra derive_structure_constants_pairs(const std::string& name,
                                            const std::vector<std::string>& labels,
                                            const std::vector<std::pair<MatQ, MatQ>>& pairs,
                                            const Rational& killing_normalization) {
  const int n = static_cast<int>(pairs.size());
  if (n == 0 || static_cast<int>(labels.size()) != n)
    throw InputError("derive_structure_constants_pairs: labels and pairs disagree");
  auto flat = [](const std::pair<MatQ, MatQ>& p) {
    VecQ a = flatten(p.first), b = flatten(p.second);
    VecQ v(a.size() + b.size());
    v << a, b;
    return v;
  };
  auto comm = [](const MatQ& a, const MatQ& b) -> MatQ { return a * b - b * a; };
  MatQ cols(flat(pairs[0]).size(), n);
  for (int i = 0; i < n; ++i) cols.col(i) = flat(pairs[i]);
  LieAlgebra::BracketTable table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& [x1, y1] = pairs[i];
      const auto& [x2, y2] = pairs[j];
      std::pair<MatQ, MatQ> b{comm(x1, x2), comm(x1, y2) + comm(y1, x2)};
      VecQ coords = solve_in_span(cols, flat(b), name);
      if (!coords.isZero()) table[{i, j}] = coords;
    }
  return LieAlgebra(name, labels, table, killing_normalization);
}

std::vector<std::pair<MatQ, MatQ>> b4_pairs() {
  // Half of the textbook pairs; with this scaling the pair bracket reproduces
  // the tabulated constants exactly.
  MatQ Z = MatQ::Zero(2, 2);
  return {{Z, -half * mat_U()},          {half * mat_H(), Z}, {half * mat_T(), Z},
          {half * mat_U(), Z},           {Z, -half * mat_H()}, {Z, half * mat_T()}};
}

std::vector<MatQ> b3_matrices() {
  auto unit = [](std::initializer_list<std::tuple<int, int, int>> entries) {
    MatQ m = MatQ::Zero(4, 4);
    for (auto [r, c, v] : entries) m(r - 1, c - 1) = v;
    return m;
  };
  return {unit({{1, 3, -1}}),
          unit({{3, 4, -1}, {4, 3, 1}}),
          unit({{2, 3, 1}, {3, 2, -1}}),
          unit({{2, 4, 1}, {4, 2, -1}}),
          unit({{1, 2, 1}}),
          unit({{1, 4, 1}})};
}

// ---------------------------------------------------------------------------

namespace {

VecQ vec(std::initializer_list<Rational> xs) {
  VecQ v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

LieAlgebra make_b1() {
  MatQ Z = MatQ::Zero(2, 2);
  return derive_structure_constants(
      "B1", {"H", "T", "U", "iH", "iT", "iU"},
      {realify(mat_H(), Z), realify(mat_T(), Z), realify(mat_U(), Z), realify(Z, mat_H()),
       realify(Z, mat_T()), realify(Z, mat_U())},
      Rational(1, 16));
}

LieAlgebra make_b2() {
  MatQ one = MatQ::Zero(1, 1);
  one(0, 0) = 1;
  MatQ z1 = MatQ::Zero(1, 1);
  MatQ Z = MatQ::Zero(2, 2);
  return derive_structure_constants(
      "B2", {"e1", "e2", "e3", "e4"},
      {block_diag(Z, one), block_diag(half * mat_H(), z1), block_diag(half * mat_T(), z1),
       block_diag(half * mat_U(), z1)},
      Rational(1, 2));
}

LieAlgebra make_b3() { return derive_structure_constants("B3", {"e1", "e2", "e3", "e4", "e5", "e6"}, b3_matrices(), Rational(1, 4)); }

LieAlgebra make_b4() {
  const int n = 6;
  auto e = [&](int k, int sign) {
    VecQ v = VecQ::Zero(n);
    v(k - 1) = sign;
    return v;
  };
  LieAlgebra::BracketTable t;
  t[{0, 1}] = e(6, 1);
  t[{0, 2}] = e(5, 1);
  t[{1, 2}] = e(4, 1);
  t[{1, 3}] = e(3, 1);
  t[{1, 5}] = e(1, -1);
  t[{2, 3}] = e(2, -1);
  t[{2, 4}] = e(1, -1);
  t[{3, 4}] = e(6, 1);
  t[{3, 5}] = e(5, -1);
  return LieAlgebra("B4", {"e1", "e2", "e3", "e4", "e5", "e6"}, t, Rational(1, 4));
}

LieAlgebra make_case51() {
  LieAlgebra::BracketTable t;
  t[{1, 2}] = vec({0, 0, 0, 1});
  t[{2, 3}] = vec({0, 1, 0, 0});
  t[{1, 3}] = vec({0, 0, -1, 0});
  return LieAlgebra("case5.1", {"e1", "e2", "e3", "e4"}, t, Rational(1, 2));
}

LieAlgebra make_case7() {
  // Area-preserving affine maps of the plane as 3x3 matrices: the sl2 part in
  // the top-left block, translations in the last column.
  auto affine = [](const MatQ& block, Rational tx, Rational ty) {
    MatQ m = MatQ::Zero(3, 3);
    m.topLeftCorner(2, 2) = block;
    m(0, 2) = tx;
    m(1, 2) = ty;
    return m;
  };
  MatQ Z = MatQ::Zero(2, 2);
  return derive_structure_constants(
      "case7", {"e1", "e2", "e3", "e4", "e5"},
      {affine(Z, 1, -1), affine(half * mat_H(), 0, 0), affine(half * mat_U(), 0, 0),
       affine(half * mat_T(), 0, 0), affine(Z, -half, -half)},
      Rational(2, 5));
}

LieAlgebra make_product() {
  MatQ Z = MatQ::Zero(2, 2);
  return derive_structure_constants(
      "sl2xsl2", {"H1", "T1", "U1", "H2", "T2", "U2"},
      {block_diag(mat_H(), Z), block_diag(mat_T(), Z), block_diag(mat_U(), Z), block_diag(Z, mat_H()),
       block_diag(Z, mat_T()), block_diag(Z, mat_U())},
      Rational(1, 8));
}

}  // namespace

// ---------------------------------------------------------------------------

void Catalog::add_algebra(AlgebraPtr alg, std::string tag) {
  const std::string id = alg->name();
  if (!has(id)) order_.push_back(id);
  algebras_[id] = {std::move(alg), std::move(tag)};
}

void Catalog::add_subspace(const std::string& id, EntryKind kind, Subspace s, std::string tag) {
  if (!has(id)) order_.push_back(id);
  subspaces_.insert_or_assign(id, SubspaceEntry{kind, s.with_role(to_string(kind)), std::move(tag)});
}

void Catalog::add_family(FamilyInfo info, std::function<Subspace(const std::vector<Rational>&)> make,
                         std::vector<std::vector<Rational>> samples, std::string tag) {
  const std::string id = info.id;
  if (!has(id)) order_.push_back(id);
  families_[id] = FamilyEntry{std::move(info), std::move(make), std::move(samples), std::move(tag)};
}

bool Catalog::has(const std::string& id) const {
  return algebras_.count(id) || subspaces_.count(id) || families_.count(id);
}

AlgebraPtr Catalog::algebra(const std::string& id) const {
  auto it = algebras_.find(id);
  if (it == algebras_.end()) throw LookupError("unknown algebra id: " + id);
  return it->second.first;
}

Subspace Catalog::subspace(const std::string& id) const {
  auto it = subspaces_.find(id);
  if (it == subspaces_.end()) throw LookupError("unknown subspace id: " + id);
  return it->second.space;
}

const FamilyInfo& Catalog::family(const std::string& id) const {
  auto it = families_.find(id);
  if (it == families_.end()) throw LookupError("unknown family id: " + id);
  return it->second.info;
}

Subspace Catalog::bol_family(const std::string& id, const std::vector<Rational>& params) const {
  auto it = families_.find(id);
  if (it == families_.end()) throw LookupError("unknown family id: " + id);
  if (params.size() != it->second.info.parameters.size())
    throw DomainError(id + " expects " + std::to_string(it->second.info.parameters.size()) + " parameters");
  return it->second.make(params).with_role("complement");
}

std::vector<EntryInfo> Catalog::list() const {
  std::vector<EntryInfo> out;
  for (const auto& id : order_) {
    if (auto a = algebras_.find(id); a != algebras_.end())
      out.push_back({id, EntryKind::algebra, "", a->second.second});
    else if (auto s = subspaces_.find(id); s != subspaces_.end())
      out.push_back({id, s->second.kind, s->second.space.algebra()->name(), s->second.tag});
    else if (auto f = families_.find(id); f != families_.end())
      out.push_back({id, EntryKind::bol_family, f->second.info.algebra, f->second.tag});
  }
  return out;
}

std::vector<VerificationReport> Catalog::validate() const {
  std::vector<VerificationReport> out;
  for (const auto& id : order_) {
    if (auto a = algebras_.find(id); a != algebras_.end()) {
      auto r = check_jacobi(*a->second.first);
      r.context = id;
      out.push_back(r);
    } else if (auto s = subspaces_.find(id); s != subspaces_.end()) {
      const auto& e = s->second;
      if (e.kind == EntryKind::triple_system) {
        auto r = is_lie_triple_system(e.space);
        r.context = id;
        out.push_back(r);
      } else if (e.kind == EntryKind::stabilizer) {
        VerificationReport r;
        r.context = id;
        r.check = "subalgebra_without_ideal";
        r.tag = e.tag;
        r.samples = 1;
        r.pass = is_subalgebra(e.space) && !contains_nonzero_ideal(e.space);
        r.max_residual = r.pass ? 0.0 : 1.0;
        out.push_back(r);
      }
    } else if (auto f = families_.find(id); f != families_.end()) {
      const auto& fam = f->second;
      Subspace h = subspace(fam.info.stabilizer);
      VerificationReport r;
      r.context = id;
      r.check = "family_members_are_bol_complements";
      r.tag = fam.tag;
      int bad = 0;
      for (const auto& p : fam.samples) {
        Subspace m = fam.make(p);
        bool ok = direct_sum_check(m, h) && is_lie_triple_system(m).pass &&
                  generated_subalgebra(m).rank() == m.algebra()->dim();
        if (!ok) ++bad;
        ++r.samples;
      }
      r.pass = bad == 0;
      r.max_residual = bad;
      out.push_back(r);
    }
  }
  return out;
}

nlohmann::json algebra_to_json(const LieAlgebra& alg) {
  nlohmann::json j;
  j["name"] = alg.name();
  j["dim"] = alg.dim();
  j["basis"] = alg.labels();
  nlohmann::json br = nlohmann::json::object();
  for (const auto& [key, v] : alg.table()) {
    std::vector<std::string> entries;
    for (Eigen::Index k = 0; k < v.size(); ++k) entries.push_back(to_string(v(k)));
    br[std::to_string(key.first) + "," + std::to_string(key.second)] = entries;
  }
  j["brackets"] = br;
  j["killing_normalization"] = to_string(alg.killing_normalization());
  return j;
}

LieAlgebra algebra_from_json(const nlohmann::json& j) {
  try {
    const std::string name = j.at("name").get<std::string>();
    const int dim = j.at("dim").get<int>();
    auto labels = j.at("basis").get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != dim) throw InputError(name + ": basis length differs from dim");
    if (dim > 8) throw InputError(name + ": dimensions above 8 are not supported");
    LieAlgebra::BracketTable table;
    for (const auto& [key, value] : j.at("brackets").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos) throw InputError(name + ": bracket key must look like \"i,j\"");
      int i = std::stoi(key.substr(0, comma));
      int k = std::stoi(key.substr(comma + 1));
      auto entries = value.get<std::vector<std::string>>();
      if (static_cast<int>(entries.size()) != dim) throw InputError(name + ": bracket vector length");
      VecQ v(dim);
      for (int t = 0; t < dim; ++t) v(t) = parse_rational(entries[t]);
      table[{i, k}] = v;
    }
    return LieAlgebra(name, labels, table, parse_rational(j.at("killing_normalization").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed algebra entry: ") + e.what());
  }
}

void Catalog::merge_json(const nlohmann::json& doc) {
  try {
    if (doc.contains("algebras"))
      for (const auto& a : doc.at("algebras")) {
        auto alg = std::make_shared<const LieAlgebra>(algebra_from_json(a));
        if (!check_jacobi(*alg).pass) throw InputError("custom algebra " + alg->name() + " fails Jacobi");
        add_algebra(alg, a.value("paper_section", "custom"));
      }
    if (doc.contains("subspaces"))
      for (const auto& s : doc.at("subspaces")) {
        AlgebraPtr alg = algebra(s.at("algebra").get<std::string>());
        std::vector<VecQ> vs;
        for (const auto& row : s.at("basis")) {
          auto entries = row.get<std::vector<std::string>>();
          if (static_cast<int>(entries.size()) != alg->dim()) throw InputError("subspace vector length");
          VecQ v(alg->dim());
          for (int t = 0; t < alg->dim(); ++t) v(t) = parse_rational(entries[t]);
          vs.push_back(v);
        }
        const std::string kind = s.value("kind", "triple_system");
        EntryKind k = kind == "stabilizer" ? EntryKind::stabilizer
                      : kind == "complement" ? EntryKind::complement
                                             : EntryKind::triple_system;
        add_subspace(s.at("id").get<std::string>(), k, Subspace(alg, vs), s.value("paper_section", "custom"));
      }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed catalog document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

nlohmann::json Catalog::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& id : order_) {
    nlohmann::json j;
    j["id"] = id;
    if (auto a = algebras_.find(id); a != algebras_.end()) {
      j["kind"] = "algebra";
      j["paper_section"] = a->second.second;
      j["algebra"] = algebra_to_json(*a->second.first);
    } else if (auto s = subspaces_.find(id); s != subspaces_.end()) {
      j["kind"] = to_string(s->second.kind);
      j["paper_section"] = s->second.tag;
      j["algebra"] = s->second.space.algebra()->name();
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& v : s->second.space.basis_vectors()) {
        std::vector<std::string> r;
        for (Eigen::Index k = 0; k < v.size(); ++k) r.push_back(to_string(v(k)));
        rows.push_back(r);
      }
      j["basis"] = rows;
      j["span"] = format_subspace(s->second.space);
    } else if (auto f = families_.find(id); f != families_.end()) {
      j["kind"] = "bol_family";
      j["paper_section"] = f->second.tag;
      j["algebra"] = f->second.info.algebra;
      j["stabilizer"] = f->second.info.stabilizer;
      j["parameters"] = f->second.info.parameters;
      j["domain"] = f->second.info.domain;
    }
    out.push_back(j);
  }
  return out;
}

// ---------------------------------------------------------------------------

Catalog make_builtin_catalog() {
  Catalog c;
  auto b1 = std::make_shared<const LieAlgebra>(make_b1());
  auto b2 = std::make_shared<const LieAlgebra>(make_b2());
  auto b3 = std::make_shared<const LieAlgebra>(make_b3());
  auto b4 = std::make_shared<const LieAlgebra>(make_b4());
  auto c51 = std::make_shared<const LieAlgebra>(make_case51());
  auto c7 = std::make_shared<const LieAlgebra>(make_case7());
  auto prod = std::make_shared<const LieAlgebra>(make_product());
  c.add_algebra(b1, "sl2C-real-basis");
  c.add_algebra(b2, "sl2R-plus-R");
  c.add_algebra(b3, "so3-semidirect-R3");
  c.add_algebra(b4, "sl2R-semidirect-R3");
  c.add_algebra(c51, "so3-plus-R");
  c.add_algebra(c7, "sl2R-semidirect-R2");
  c.add_algebra(prod, "sl2R-times-sl2R");

  auto sub = [](const AlgebraPtr& a, std::vector<std::vector<std::pair<std::string, Rational>>> gens) {
    std::vector<VecQ> vs;
    for (const auto& g : gens) vs.push_back(a->combo(g));
    return Subspace(a, vs);
  };
  using EK = EntryKind;
  const Rational one(1), mone(-1);

  c.add_subspace("m_4.1", EK::triple_system, sub(b1, {{{"H", one}}, {{"T", one}}, {{"iU", one}}}), "lts-sl2C");
  c.add_subspace("m_4.2", EK::triple_system, sub(b1, {{{"H", one}}, {{"iT", one}}, {{"U", one}}}), "lts-sl2C");
  c.add_subspace("m_5.2", EK::triple_system, sub(b2, {{{"e1", one}}, {{"e2", one}}, {{"e4", one}}}), "lts-sl2R-plus-R");
  c.add_subspace("m_5.3", EK::triple_system, sub(b2, {{{"e1", one}}, {{"e2", one}}, {{"e3", one}}}), "lts-sl2R-plus-R");
  c.add_subspace("m_6.1", EK::triple_system, sub(b3, {{{"e1", one}}, {{"e2", one}}, {{"e3", one}}}), "lts-euclidean-motions");
  c.add_subspace("m_6.2", EK::triple_system, sub(b4, {{{"e2", one}}, {{"e4", one}}, {{"e6", one}}}), "lts-sl2R-semidirect-R3");
  c.add_subspace("m_6.3", EK::triple_system, sub(b4, {{{"e1", one}}, {{"e2", one}}, {{"e3", one}}}), "lts-sl2R-semidirect-R3");
  c.add_subspace("m_7", EK::triple_system, sub(c7, {{{"e1", one}}, {{"e2", one}}, {{"e3", one}}}), "lts-sl2R-semidirect-R2");
  c.add_subspace("m_prod", EK::triple_system,
                 sub(prod, {{{"H1", one}, {"H2", mone}}, {{"T1", one}, {"T2", mone}}, {{"U1", one}, {"U2", mone}}}),
                 "product-case");

  c.add_subspace("h_sec4", EK::stabilizer, sub(b1, {{{"iH", one}}, {{"iT", one}}, {{"U", one}}}), "semisimple-stabilizer");
  c.add_subspace("h1_prod", EK::stabilizer,
                 sub(prod, {{{"H1", one}, {"H2", one}}, {{"T1", one}, {"T2", one}}, {{"U1", one}, {"U2", one}}}),
                 "product-case");
  c.add_subspace("h2_prod", EK::stabilizer,
                 sub(prod, {{{"H1", one}, {"H2", one}}, {{"U1", one}, {"T1", one}}, {{"U2", one}, {"T2", one}}}),
                 "product-case");
  for (int k : {0, 1}) {
    const std::string suffix = k == 0 ? "" : "_k1";
    const Rational kk(k);
    c.add_subspace("h1_sec5" + suffix, EK::stabilizer, sub(b2, {{{"e2", one}, {"e1", kk}}}), "four-dim-stabilizers");
    c.add_subspace("h2_sec5" + suffix, EK::stabilizer, sub(b2, {{{"e3", one}, {"e4", one}, {"e1", kk}}}),
                   "four-dim-stabilizers");
    c.add_subspace("h3_sec5" + suffix, EK::stabilizer, sub(b2, {{{"e4", one}, {"e1", kk}}}), "four-dim-stabilizers");
  }
  c.add_subspace("h_sec6.1", EK::stabilizer, sub(b3, {{{"e2", one}}, {{"e3", one}}, {{"e4", one}}}), "euclidean-motions");
  c.add_subspace("h_sec7_a", EK::stabilizer, sub(b4, {{{"e2", one}}, {{"e5", one}}, {{"e1", one}, {"e6", one}}}), "six-dim-stabilizers");
  c.add_subspace("h_sec7_b", EK::stabilizer, sub(b4, {{{"e2", one}, {"e5", one}}, {{"e1", one}}, {{"e6", one}}}), "six-dim-stabilizers");
  c.add_subspace("h_sec7_c", EK::stabilizer,
                 sub(b4, {{{"e3", one}, {"e4", one}}, {{"e5", one}}, {{"e1", one}, {"e6", mone}}}), "six-dim-stabilizers");
  c.add_subspace("h_sec7_d", EK::stabilizer,
                 sub(b4, {{{"e2", one}}, {{"e3", one}, {"e4", one}}, {{"e1", one}, {"e6", mone}}}), "six-dim-stabilizers");
  c.add_subspace("h_sec7_e", EK::stabilizer, sub(b4, {{{"e2", one}}, {{"e3", one}}, {{"e4", one}}}), "six-dim-stabilizers");
  c.add_subspace("h_sec7_f", EK::stabilizer, sub(b4, {{{"e4", one}}, {{"e5", one}}, {{"e6", one}}}), "six-dim-stabilizers");

  c.add_family(
      {"m_a", "B1", "h_sec4", {"a"}, "a not in {1, -1}"},
      [b1](const std::vector<Rational>& p) {
        const Rational& a = p[0];
        if (a == 1 || a == -1) throw DomainError("m_a: a must differ from 1 and -1");
        return Subspace(b1, {b1->combo({{"T", 1}, {"U", a}}), b1->combo({{"iU", 1}, {"iT", a}}), b1->combo({{"H", 1}})});
      },
      {{Rational(0)}, {Rational(1, 3)}, {Rational(-1, 2)}, {Rational(3, 4)}, {Rational(2)}}, "semisimple-families");
  c.add_family(
      {"m_d", "B1", "h_sec4", {"d"}, "d != 0"},
      [b1](const std::vector<Rational>& p) {
        const Rational& d = p[0];
        if (d == 0) throw DomainError("m_d: d must be nonzero");
        return Subspace(b1, {b1->combo({{"U", 1}, {"T", 1}}), b1->combo({{"iH", d}, {"iU", 1}, {"iT", 1}}),
                             b1->combo({{"H", 1}, {"U", d}})});
      },
      {{Rational(1, 2)}, {Rational(1)}, {Rational(-2)}, {Rational(3)}, {Rational(1, 5)}}, "semisimple-families");
  c.add_family(
      {"m_b3c3c2", "B4", "h_sec7_f", {"b3", "c3", "c2"}, "b3^2 + c3^2 != 1"},
      [b4](const std::vector<Rational>& p) {
        const Rational &b3 = p[0], &c3 = p[1], &c2 = p[2];
        if (b3 * b3 + c3 * c3 == 1) throw DomainError("m_b3c3c2: b3^2 + c3^2 must differ from 1");
        return Subspace(b4, {b4->combo({{"e1", 1}, {"e6", -c3}, {"e5", b3}}),
                             b4->combo({{"e2", 1}, {"e6", c2}, {"e4", b3}}),
                             b4->combo({{"e3", 1}, {"e5", c2}, {"e4", c3}})});
      },
      {{0, 0, 0}, {Rational(1, 2), 0, 0}, {Rational(3, 10), Rational(2, 5), Rational(7, 3)}, {2, 1, -1}, {0, 0, 5}},
      "semidirect-family");
  return c;
}

const Catalog& Catalog::builtin() {
  static const Catalog instance = [] {
    Catalog c = make_builtin_catalog();
    for (const auto& r : c.validate())
      if (!r.pass) throw RepresentationError("built-in catalog entry failed validation: " + r.context);
    return c;
  }();
  return instance;
}

}  // namespace bolkit
