#include "bolkit/lie_core.hpp"

#include <algorithm>
#include <sstream>

namespace bolkit {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, const BracketTable& table,
                       Rational killing_normalization)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      killing_normalization_(std::move(killing_normalization)) {
  const int n = dim();
  if (n <= 0) throw InputError("algebra " + name_ + ": empty basis");
  if (killing_normalization_ <= 0)
    throw InputError("algebra " + name_ + ": killing normalization must be positive");
  ad_basis_.assign(n, MatQ::Zero(n, n));
  for (const auto& [key, value] : table) {
    auto [i, j] = key;
    if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
      throw InputError("algebra " + name_ + ": bracket keys need 0 <= i < j < dim");
    if (value.size() != n) throw InputError("algebra " + name_ + ": bracket vector length");
    ad_basis_[i].col(j) = value;
    ad_basis_[j].col(i) = -value;
  }
  killing_gram_ = MatQ::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational t = (ad_basis_[i] * ad_basis_[j]).trace() * killing_normalization_;
      killing_gram_(i, j) = t;
      killing_gram_(j, i) = t;
    }
}

VecQ LieAlgebra::e(int i) const {
  VecQ v = VecQ::Zero(dim());
  v(i) = 1;
  return v;
}

int LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("algebra " + name_ + " has no basis element " + label);
  return static_cast<int>(it - labels_.begin());
}

VecQ LieAlgebra::combo(const std::vector<std::pair<std::string, Rational>>& terms) const {
  VecQ v = VecQ::Zero(dim());
  for (const auto& [label, c] : terms) v(index_of(label)) += c;
  return v;
}

LieAlgebra::BracketTable LieAlgebra::table() const {
  BracketTable t;
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j) {
      VecQ v = structure(i, j);
      if (!v.isZero()) t[{i, j}] = v;
    }
  return t;
}

Rational killing_by_trace(const LieAlgebra& alg, const VecQ& x, const VecQ& y) {
  return alg.killing_normalization() * (ad_matrix<Rational>(alg, x) * ad_matrix<Rational>(alg, y)).trace();
}

namespace {

double max_abs(const VecQ& v) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    m = std::max(m, std::abs(v(i).convert_to<double>()));
  return m;
}

}  // namespace

VerificationReport check_jacobi(const LieAlgebra& alg) {
  VerificationReport r;
  r.context = alg.name();
  r.check = "jacobi";
  r.tag = "algebra-catalog";
  const int n = alg.dim();
  int failures = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        VecQ x = alg.e(i), y = alg.e(j), z = alg.e(k);
        VecQ s = triple(alg, x, y, z) + triple(alg, y, z, x) + triple(alg, z, x, y);
        if (!s.isZero()) {
          ++failures;
          r.max_residual = std::max(r.max_residual, max_abs(s));
        }
        ++r.samples;
      }
  r.pass = failures == 0;
  if (!r.pass) r.detail = std::to_string(failures) + " basis triples violate Jacobi";
  return r;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(AlgebraPtr alg, const std::vector<VecQ>& spanning, std::string role)
    : alg_(std::move(alg)), role_(std::move(role)) {
  const int n = alg_->dim();
  MatQ m(static_cast<Eigen::Index>(spanning.size()), n);
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    if (spanning[i].size() != n) throw InputError("subspace: vector length mismatch");
    m.row(static_cast<Eigen::Index>(i)) = spanning[i].transpose();
  }
  rows_ = spanning.empty() ? MatQ(0, n) : rref(m);
}

Subspace::Subspace(AlgebraPtr alg, const MatQ& rows, std::string role)
    : alg_(std::move(alg)), role_(std::move(role)) {
  if (rows.cols() != alg_->dim()) throw InputError("subspace: column count mismatch");
  rows_ = rows.rows() == 0 ? MatQ(0, alg_->dim()) : rref(rows);
}

std::vector<VecQ> Subspace::basis_vectors() const {
  std::vector<VecQ> out;
  for (int i = 0; i < rank(); ++i) out.push_back(basis(i));
  return out;
}

Subspace Subspace::with_role(std::string role) const {
  Subspace s = *this;
  s.role_ = std::move(role);
  return s;
}

bool Subspace::contains(const VecQ& v) const {
  if (v.size() != alg_->dim()) throw InputError("contains: vector length mismatch");
  // Reduce v against the echelon rows; it lies in the span iff it reduces to zero.
  VecQ r = v;
  for (int i = 0; i < rank(); ++i) {
    Eigen::Index p = 0;
    while (rows_(i, p) == 0) ++p;
    if (r(p) != 0) r -= r(p) * rows_.row(i).transpose();
  }
  return r.isZero();
}

bool Subspace::contains(const Subspace& other) const {
  require_same_algebra(*this, other);
  for (int i = 0; i < other.rank(); ++i)
    if (!contains(other.basis(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  if (alg_.get() != other.alg_.get() && alg_->name() != other.alg_->name()) return false;
  return rows_.rows() == other.rows_.rows() && rows_.cols() == other.rows_.cols() && rows_ == other.rows_;
}

VecQ Subspace::coordinates(const VecQ& v) const {
  VecQ c(rank());
  for (int i = 0; i < rank(); ++i) {
    Eigen::Index p = 0;
    while (rows_(i, p) == 0) ++p;
    c(i) = v(p);
  }
  if (rows_.transpose() * c != v) throw InputError("coordinates: vector not in subspace");
  return c;
}

void require_same_algebra(const Subspace& a, const Subspace& b) {
  if (a.algebra().get() != b.algebra().get() && a.algebra()->name() != b.algebra()->name())
    throw InputError("subspaces of different algebras: " + a.algebra()->name() + " vs " +
                     b.algebra()->name());
}

Subspace span(AlgebraPtr alg, const std::vector<VecQ>& vectors) {
  return Subspace(std::move(alg), vectors);
}

Subspace zero_subspace(AlgebraPtr alg) { return Subspace(alg, std::vector<VecQ>{}); }

Subspace whole(AlgebraPtr alg) {
  const int n = alg->dim();
  return Subspace(alg, MatQ(MatQ::Identity(n, n)));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_algebra(a, b);
  MatQ m(a.rank() + b.rank(), a.algebra()->dim());
  m << a.rows(), b.rows();
  return Subspace(a.algebra(), m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_algebra(a, b);
  if (a.rank() == 0 || b.rank() == 0) return zero_subspace(a.algebra());
  // Solve sum_i s_i a_i = sum_j t_j b_j.
  MatQ system(a.algebra()->dim(), a.rank() + b.rank());
  system << a.rows().transpose(), -b.rows().transpose();
  MatQ kernel = null_space(system);
  std::vector<VecQ> vs;
  for (Eigen::Index k = 0; k < kernel.cols(); ++k)
    vs.push_back(a.rows().transpose() * kernel.col(k).head(a.rank()));
  return Subspace(a.algebra(), vs);
}

bool direct_sum_check(const Subspace& m, const Subspace& h) {
  require_same_algebra(m, h);
  return m.rank() + h.rank() == m.algebra()->dim() && intersect(m, h).rank() == 0;
}

Subspace bracket_space(const Subspace& a, const Subspace& b) {
  require_same_algebra(a, b);
  const LieAlgebra& alg = *a.algebra();
  std::vector<VecQ> vs;
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) vs.push_back(bracket(alg, a.basis(i), b.basis(j)));
  return Subspace(a.algebra(), vs);
}

Subspace derived_space(const Subspace& m) { return bracket_space(m, m); }

Subspace generated_subalgebra(const Subspace& m) {
  Subspace current = m;
  for (int step = 0; step <= m.algebra()->dim(); ++step) {
    Subspace next = sum(current, bracket_space(current, current));
    if (next.rank() == current.rank()) return current;
    current = next;
  }
  return current;
}

bool is_subalgebra(const Subspace& s) { return s.contains(bracket_space(s, s)); }

bool is_ideal(const Subspace& s) { return s.contains(bracket_space(whole(s.algebra()), s)); }

Subspace center(AlgebraPtr alg) {
  const int n = alg->dim();
  // [x, e_j] = sum_i x_i ad(e_i) e_j = 0 for all j.
  MatQ system(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) system.block(j * n, i, n, 1) = alg->ad_basis(i).col(j);
  MatQ kernel = null_space(system);
  std::vector<VecQ> vs;
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) vs.push_back(kernel.col(k));
  return Subspace(alg, vs);
}

Subspace largest_ideal_in(const Subspace& h) {
  const AlgebraPtr& alg = h.algebra();
  const int n = alg->dim();
  Subspace current = h;
  while (current.rank() > 0) {
    // x = B^T c stays in current under every ad(e_j) iff A ad(e_j) B^T c = 0,
    // where the rows of A annihilate current.
    MatQ B = current.rows();
    MatQ A = null_space(B).transpose();
    if (A.rows() == 0) return current;  // current is everything
    MatQ system(A.rows() * n, current.rank());
    for (int j = 0; j < n; ++j) system.block(j * A.rows(), 0, A.rows(), B.rows()) = A * alg->ad_basis(j) * B.transpose();
    MatQ kernel = null_space(system);
    std::vector<VecQ> vs;
    for (Eigen::Index k = 0; k < kernel.cols(); ++k) vs.push_back(B.transpose() * kernel.col(k));
    Subspace next(alg, vs);
    if (next.rank() == current.rank()) return current;
    current = next;
  }
  return current;
}

bool contains_nonzero_ideal(const Subspace& h) { return largest_ideal_in(h).rank() > 0; }

VecQ project_along(const Subspace& m, const Subspace& h, const VecQ& v) {
  require_same_algebra(m, h);
  if (!direct_sum_check(m, h)) throw InputError("project_along: m and h are not complementary");
  const int n = m.algebra()->dim();
  MatQ basis(n, n);
  basis << m.rows().transpose(), h.rows().transpose();
  // Solve basis * c = v exactly through the reduced form of [basis | v].
  MatQ aug(n, n + 1);
  aug << basis, v;
  MatQ red = rref(aug);
  VecQ c = red.col(n);
  return m.rows().transpose() * c.head(m.rank());
}

bool triple_closed(const Subspace& m) {
  const LieAlgebra& alg = *m.algebra();
  auto b = m.basis_vectors();
  const int k = m.rank();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      VecQ ij = bracket(alg, b[i], b[j]);
      for (int l = 0; l < k; ++l)
        if (!m.contains(bracket(alg, ij, b[l]))) return false;
    }
  return true;
}

VerificationReport is_lie_triple_system(const Subspace& m) {
  const LieAlgebra& alg = *m.algebra();
  VerificationReport r;
  r.context = alg.name() + ":" + format_subspace(m);
  r.check = "lie_triple_system";
  r.tag = "lts-identities";
  const int k = m.rank();
  auto b = m.basis_vectors();
  auto t = [&](const VecQ& x, const VecQ& y, const VecQ& z) { return triple(alg, x, y, z); };
  int closure_fail = 0, id1 = 0, id2 = 0, id3 = 0;
  // All basis triples once; idx(i, j, l) addresses [[b_i, b_j], b_l].
  auto idx = [k](int i, int j, int l) { return (i * k + j) * k + l; };
  std::vector<VecQ> tt(static_cast<std::size_t>(k) * k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        VecQ& v = tt[idx(i, j, l)];
        v = t(b[i], b[j], b[l]);
        if (!m.contains(v)) ++closure_fail;
        if (i == j && !v.isZero()) ++id1;
      }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        if (!(tt[idx(i, j, l)] + tt[idx(j, l, i)] + tt[idx(l, i, j)]).isZero()) ++id2;
  if (closure_fail == 0) {
    // Closed: the derivation identity is trilinear, so it can be checked on
    // coordinates in m using the tabulated triples.
    std::vector<VecQ> c(tt.size());
    for (std::size_t q = 0; q < tt.size(); ++q) c[q] = m.coordinates(tt[q]);
    auto tri = [&](int x, int y, const VecQ& zc) {  // [[b_x, b_y], z] in coordinates
      VecQ out = VecQ::Zero(k);
      for (int q = 0; q < k; ++q)
        if (zc(q) != 0) out += zc(q) * c[idx(x, y, q)];
      return out;
    };
    auto tri_mid = [&](int u, const VecQ& yc, int w) {  // [[b_u, y], b_w]
      VecQ out = VecQ::Zero(k);
      for (int q = 0; q < k; ++q)
        if (yc(q) != 0) out += yc(q) * c[idx(u, q, w)];
      return out;
    };
    auto tri_first = [&](const VecQ& xc, int v, int w) {  // [[x, b_v], b_w]
      VecQ out = VecQ::Zero(k);
      for (int q = 0; q < k; ++q)
        if (xc(q) != 0) out += xc(q) * c[idx(q, v, w)];
      return out;
    };
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        for (int u = 0; u < k; ++u)
          for (int v = 0; v < k; ++v)
            for (int w = 0; w < k; ++w) {
              VecQ lhs = tri(x, y, c[idx(u, v, w)]);
              VecQ rhs = tri_first(c[idx(x, y, u)], v, w) + tri_mid(u, c[idx(x, y, v)], w) +
                         tri(u, v, c[idx(x, y, w)]);
              if (lhs != rhs) ++id3;
            }
  } else {
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        for (int u = 0; u < k; ++u)
          for (int v = 0; v < k; ++v)
            for (int w = 0; w < k; ++w) {
              VecQ lhs = t(b[x], b[y], tt[idx(u, v, w)]);
              VecQ rhs = t(tt[idx(x, y, u)], b[v], b[w]) + t(b[u], tt[idx(x, y, v)], b[w]) +
                         t(b[u], b[v], tt[idx(x, y, w)]);
              if (lhs != rhs) ++id3;
            }
  }
  r.samples = static_cast<std::int64_t>(k) * k * k + static_cast<std::int64_t>(k) * k * k * k * k;
  int bad = closure_fail + id1 + id2 + id3;
  r.pass = bad == 0;
  r.max_residual = bad;
  if (!r.pass) {
    std::ostringstream os;
    os << "closure failures " << closure_fail << ", identity violations " << id1 << "/" << id2 << "/"
       << id3;
    r.detail = os.str();
  }
  return r;
}

VerificationReport is_bol_algebra(const Subspace& m, const Subspace& h) {
  require_same_algebra(m, h);
  if (!direct_sum_check(m, h)) throw InputError("is_bol_algebra: m and h are not complementary");
  const LieAlgebra& alg = *m.algebra();
  VerificationReport r;
  r.context = alg.name() + ":" + format_subspace(m);
  r.check = "bol_algebra";
  r.tag = "bol-algebra-identity";
  const int k = m.rank();
  auto b = m.basis_vectors();
  auto t = [&](const VecQ& x, const VecQ& y, const VecQ& z) { return triple(alg, x, y, z); };
  auto bb = [&](const VecQ& x, const VecQ& y) { return project_along(m, h, bracket(alg, x, y)); };
  int failures = 0;
  double worst = 0.0;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        for (int w = 0; w < k; ++w) {
          VecQ xy = bb(b[x], b[y]);
          VecQ zw = bb(b[z], b[w]);
          VecQ s = bb(t(b[x], b[y], b[z]), b[w]) - bb(t(b[x], b[y], b[w]), b[z]) + t(b[z], b[w], xy) -
                   t(b[x], b[y], zw) + bb(xy, zw);
          ++r.samples;
          if (!s.isZero()) {
            ++failures;
            worst = std::max(worst, max_abs(s));
          }
        }
  // The five-term identity presupposes a triple system, so closure is part of the verdict.
  VerificationReport lts = is_lie_triple_system(m);
  r.pass = failures == 0 && lts.pass;
  r.max_residual = lts.pass ? worst : std::max(worst, 1.0);
  if (!r.pass)
    r.detail = std::to_string(failures) + " basis quadruples violate the identity" +
               (lts.pass ? "" : "; m is not a triple system");
  return r;
}

std::string format_vector(const LieAlgebra& alg, const VecQ& v) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < alg.dim(); ++i) {
    if (v(i) == 0) continue;
    Rational c = v(i);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1) os << to_string(a) << "*";
    os << alg.labels()[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string format_subspace(const Subspace& s) {
  std::string out = "<";
  for (int i = 0; i < s.rank(); ++i) {
    if (i) out += ", ";
    out += format_vector(*s.algebra(), s.basis(i));
  }
  return out + ">";
}

}  // namespace bolkit
