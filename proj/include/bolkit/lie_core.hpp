#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bolkit/rational.hpp"
#include "bolkit/report.hpp"

namespace bolkit {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Finite-dimensional real Lie algebra given by exact structure constants.
///
/// ad_basis[i] is the matrix of ad(e_i); its column j holds the coordinates
/// of [e_i, e_j]. Antisymmetry is enforced by construction.
class LieAlgebra {
 public:
  using BracketTable = std::map<std::pair<int, int>, VecQ>;

  LieAlgebra(std::string name, std::vector<std::string> labels, const BracketTable& table,
             Rational killing_normalization);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rational& killing_normalization() const { return killing_normalization_; }
  const MatQ& ad_basis(int i) const { return ad_basis_[i]; }

  /// Coordinates of [e_i, e_j].
  VecQ structure(int i, int j) const { return ad_basis_[i].col(j); }

  /// Gram matrix of the normalised Killing form in the basis.
  const MatQ& killing_gram() const { return killing_gram_; }

  VecQ e(int i) const;
  int index_of(const std::string& label) const;
  /// Linear combination by label, e.g. {{"T", 1}, {"U", a}}.
  VecQ combo(const std::vector<std::pair<std::string, Rational>>& terms) const;

  /// Stored table with i<j, for serialisation.
  BracketTable table() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<MatQ> ad_basis_;
  Rational killing_normalization_;
  MatQ killing_gram_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

// Dense kernels, templated on the scalar so the same code serves exact
// checks and floating-point invariants.

template <typename Scalar>
Mat<Scalar> ad_matrix(const LieAlgebra& alg, const Vec<Scalar>& x) {
  if (x.size() != alg.dim()) throw InputError("ad_matrix: dimension mismatch");
  Mat<Scalar> out = Mat<Scalar>::Zero(alg.dim(), alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    if (x(i) == Scalar(0)) continue;
    out += x(i) * cast_matrix<Scalar>(alg.ad_basis(i));
  }
  return out;
}

template <>
inline MatQ ad_matrix<Rational>(const LieAlgebra& alg, const VecQ& x) {
  if (x.size() != alg.dim()) throw InputError("ad_matrix: dimension mismatch");
  MatQ out = MatQ::Zero(alg.dim(), alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    if (x(i) == 0) continue;
    out += x(i) * alg.ad_basis(i);
  }
  return out;
}

template <typename Scalar>
Vec<Scalar> bracket(const LieAlgebra& alg, const Vec<Scalar>& x, const Vec<Scalar>& y) {
  if (x.size() != alg.dim() || y.size() != alg.dim())
    throw InputError("bracket: dimension mismatch");
  return ad_matrix<Scalar>(alg, x) * y;
}

template <typename Scalar>
Vec<Scalar> triple(const LieAlgebra& alg, const Vec<Scalar>& x, const Vec<Scalar>& y,
                   const Vec<Scalar>& z) {
  return bracket<Scalar>(alg, bracket<Scalar>(alg, x, y), z);
}

template <typename Scalar>
Scalar killing(const LieAlgebra& alg, const Vec<Scalar>& x, const Vec<Scalar>& y) {
  if (x.size() != alg.dim() || y.size() != alg.dim())
    throw InputError("killing: dimension mismatch");
  return x.dot(cast_matrix<Scalar>(alg.killing_gram()) * y);
}

template <>
inline Rational killing<Rational>(const LieAlgebra& alg, const VecQ& x, const VecQ& y) {
  if (x.size() != alg.dim() || y.size() != alg.dim())
    throw InputError("killing: dimension mismatch");
  return x.dot(alg.killing_gram() * y);
}

/// Killing form straight from traces, used to cross-check killing_gram.
Rational killing_by_trace(const LieAlgebra& alg, const VecQ& x, const VecQ& y);

VerificationReport check_jacobi(const LieAlgebra& alg);

/// Subspace of an algebra stored as reduced row echelon rows, so equality is
/// independent of the spanning set it came from.
class Subspace {
 public:
  Subspace(AlgebraPtr alg, const std::vector<VecQ>& spanning, std::string role = {});
  Subspace(AlgebraPtr alg, const MatQ& rows, std::string role = {});

  const AlgebraPtr& algebra() const { return alg_; }
  int rank() const { return static_cast<int>(rows_.rows()); }
  /// Canonical basis, one vector per row.
  const MatQ& rows() const { return rows_; }
  VecQ basis(int i) const { return rows_.row(i).transpose(); }
  std::vector<VecQ> basis_vectors() const;
  const std::string& role() const { return role_; }
  Subspace with_role(std::string role) const;

  bool contains(const VecQ& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

  /// Coordinates of v in the canonical basis (v must lie in the span).
  VecQ coordinates(const VecQ& v) const;

 private:
  AlgebraPtr alg_;
  MatQ rows_;
  std::string role_;
};

Subspace span(AlgebraPtr alg, const std::vector<VecQ>& vectors);
Subspace zero_subspace(AlgebraPtr alg);
Subspace whole(AlgebraPtr alg);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// rank(m) + rank(h) = dim and m ∩ h = 0.
bool direct_sum_check(const Subspace& m, const Subspace& h);
Subspace derived_space(const Subspace& m);
Subspace generated_subalgebra(const Subspace& m);
bool is_subalgebra(const Subspace& s);
bool is_ideal(const Subspace& s);
Subspace center(AlgebraPtr alg);
/// Largest ideal of the algebra contained in h.
Subspace largest_ideal_in(const Subspace& h);
bool contains_nonzero_ideal(const Subspace& h);
/// [a, b] spanned over basis pairs.
Subspace bracket_space(const Subspace& a, const Subspace& b);

/// Projection of v onto m along h (requires m ⊕ h = g).
VecQ project_along(const Subspace& m, const Subspace& h, const VecQ& v);

VerificationReport is_lie_triple_system(const Subspace& m);
/// Closure [[m,m],m] ⊆ m only, stopping at the first failure.
bool triple_closed(const Subspace& m);
VerificationReport is_bol_algebra(const Subspace& m, const Subspace& h);

std::string format_vector(const LieAlgebra& alg, const VecQ& v);
std::string format_subspace(const Subspace& s);

void require_same_algebra(const Subspace& a, const Subspace& b);

}  // namespace bolkit
