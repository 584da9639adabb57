#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "bolkit/lie_core.hpp"

namespace bolkit {

struct RepresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct LookupError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

enum class EntryKind { algebra, triple_system, stabilizer, complement, bol_family, matrix_rep };

std::string to_string(EntryKind k);

/// The 2x2 matrices H, T, U used throughout.
MatQ mat_H();
MatQ mat_T();
MatQ mat_U();

/// Real 2n x 2n form of a complex n x n matrix given as (real part, imaginary part).
MatQ realify(const MatQ& re, const MatQ& im);

/// Structure constants of a matrix Lie algebra from pairwise commutators.
/// Throws RepresentationError when a commutator leaves the span.
LieAlgebra derive_structure_constants(const std::string& name, const std::vector<std::string>& labels,
                                      const std::vector<MatQ>& matrices,
                                      const Rational& killing_normalization);

/// Same for pairs (X, Y) with the semidirect bracket
/// [(X1,Y1),(X2,Y2)] = ([X1,X2], [X1,Y2] + [Y1,X2]).
LieAlgebra derive_structure_constants_pairs(const std::string& name,
                                            const std::vector<std::string>& labels,
                                            const std::vector<std::pair<MatQ, MatQ>>& pairs,
                                            const Rational& killing_normalization);

/// Pair realisation of the B4 table basis (X in sl2, Y the translation part).
std::vector<std::pair<MatQ, MatQ>> b4_pairs();
/// Reference 4x4 matrices of B3.
std::vector<MatQ> b3_matrices();

struct FamilyInfo {
  std::string id;
  std::string algebra;
  std::string stabilizer;
  std::vector<std::string> parameters;
  std::string domain;
};

struct EntryInfo {
  std::string id;
  EntryKind kind;
  std::string algebra;  // owning algebra (empty for algebras)
  std::string tag;
};

class Catalog {
 public:
  /// Built-in entries, validated the first time this is called.
  static const Catalog& builtin();

  AlgebraPtr algebra(const std::string& id) const;
  Subspace subspace(const std::string& id) const;
  /// Family member; throws DomainError for out-of-domain parameters.
  Subspace bol_family(const std::string& id, const std::vector<Rational>& params) const;
  const FamilyInfo& family(const std::string& id) const;

  std::vector<EntryInfo> list() const;
  bool has(const std::string& id) const;

  /// Jacobi for algebras, triple-system closure for triple systems,
  /// subalgebra property for stabilisers, sampled membership for families.
  std::vector<VerificationReport> validate() const;

  /// Merges entries from a custom catalog document (see README for the
  /// schema). Algebras failing Jacobi are rejected with InputError.
  void merge_json(const nlohmann::json& doc);

  nlohmann::json to_json() const;

  void add_algebra(AlgebraPtr alg, std::string tag);
  void add_subspace(const std::string& id, EntryKind kind, Subspace s, std::string tag);

 private:
  struct SubspaceEntry {
    EntryKind kind;
    Subspace space;
    std::string tag;
  };
  struct FamilyEntry {
    FamilyInfo info;
    std::function<Subspace(const std::vector<Rational>&)> make;
    std::vector<std::vector<Rational>> samples;
    std::string tag;
  };

  void add_family(FamilyInfo info, std::function<Subspace(const std::vector<Rational>&)> make,
                  std::vector<std::vector<Rational>> samples, std::string tag);

  std::vector<std::string> order_;
  std::map<std::string, std::pair<AlgebraPtr, std::string>> algebras_;
  std::map<std::string, SubspaceEntry> subspaces_;
  std::map<std::string, FamilyEntry> families_;

  friend Catalog make_builtin_catalog();
};

Catalog make_builtin_catalog();

nlohmann::json algebra_to_json(const LieAlgebra& alg);
LieAlgebra algebra_from_json(const nlohmann::json& j);

}  // namespace bolkit
