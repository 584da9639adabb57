#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bolkit/lie_core.hpp"
#include "bolkit/report.hpp"

namespace bolkit {

struct UnsupportedError : std::logic_error {
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Reductivity and grading

struct BracketWitness {
  VecQ left;
  VecQ right;
  VecQ bracket;
};

struct GradingVerdict {
  bool hh_in_h = false;
  bool hm_in_m = false;
  bool mm_in_h = false;
  std::optional<BracketWitness> witness;  // first failing basis pair
  bool all() const { return hh_in_h && hm_in_m && mm_in_h; }
};

/// Exact checks [h,h] ⊆ h, [h,m] ⊆ m, [m,m] ⊆ h on the canonical bases.
/// Throws InputError unless g = m ⊕ h.
GradingVerdict bruck_grading(const Subspace& m, const Subspace& h);

struct ReductivityVerdict {
  bool reductive = false;
  std::optional<BracketWitness> witness;
};
/// [h, m] ⊆ m.
ReductivityVerdict left_a_check(const Subspace& m, const Subspace& h);

// ---------------------------------------------------------------------------
// Compactness and Killing angles

struct CompactnessVerdict {
  bool compact = false;
  Inertia inertia;
  std::optional<VecQ> witness;  // non-negative Killing vector when not compact
  Rational witness_killing;
};
/// Killing form negative definite on the subalgebra s (exact inertia).
CompactnessVerdict compactness_check(const Subspace& s);

struct AngleInvariant {
  bool degenerate = false;
  int kernel_m1 = 0;
  int kernel_ref = 0;
  bool reduced = false;  // spectrum taken modulo Killing-radical kernels
  /// Sorted (real part, |imaginary part|) of the pencil spectrum.
  std::vector<std::pair<double, double>> spectrum;
  nlohmann::json to_json() const;
};
/// Spectrum of K11^-1 K12 K22^-1 K21 for the Killing Gram blocks of two
/// subspaces of equal dimension. When a restricted form is degenerate and
/// its kernel lies in the radical of the Killing form, the spectrum is taken
/// on the quotient and `reduced` is set; otherwise only the kernel
/// dimensions are reported.
AngleInvariant angle_invariant(const Subspace& m1, const Subspace& m_ref);
double spectrum_distance(const AngleInvariant& a, const AngleInvariant& b);

// ---------------------------------------------------------------------------
// Conjugacy-type obstruction

enum class ElementKind { zero, elliptic, parabolic, hyperbolic };
std::string to_string(ElementKind k);

struct ElementType {
  ElementKind kind = ElementKind::zero;
  Rational killing_value;
};
/// Type of the sl2(R) part P x, classified by the sign of its Killing value.
ElementType element_type(const LieAlgebra& alg, const VecQ& x, const MatQ& sl2_projector);

/// Coordinate projectors onto the sl2(R) components of the algebra: one for
/// sl2(R) + R, sl2(R) |x R^n, two for the product. Throws UnsupportedError
/// for algebras without such a component (B1 is handled by its complex
/// structure inside lemma3_obstruction).
std::vector<MatQ> sl2_projectors(const LieAlgebra& alg);

struct Lemma3Verdict {
  bool conflict = false;
  std::optional<VecQ> witness_m;
  std::optional<VecQ> witness_h;
  std::string signature;  // human-readable type of the witnesses
  int candidates_m = 0;
  int candidates_h = 0;
};
/// Searches small integer combinations of the bases of m and h for nonzero
/// elements with matching conjugacy-type signature (per-component Killing
/// values positively proportional with equal types, pure translations only
/// against pure translations; for the complex algebra the complex
/// determinant up to positive scaling).
Lemma3Verdict lemma3_obstruction(const Subspace& m, const Subspace& h, int coefficient_bound = 2);

/// Ad of (1, U) on sl2 x sl2 applied to x, in the product basis.
VecQ product_conjugate_by_U(const VecQ& x);

// ---------------------------------------------------------------------------
// Isomorphism equation systems

struct IsoPsl2cSolution {
  Rational b;
  std::array<Rational, 4> witness;  // (c1, c2, d1, d2)
  bool admissible = false;          // |b| < 1
  std::array<Rational, 9> residuals;
};
/// The nine reference equations at (c1, c2, d1, d2, b) for parameter a.
std::array<Rational, 9> iso_psl2c_equations(const Rational& a, const std::array<Rational, 4>& cd, const Rational& b);
/// Structured elimination: eqs 2-3 force c = 0 or d = 0; the remaining
/// linear equations in b then give b = -a, respectively b = 1/a.
std::vector<IsoPsl2cSolution> solve_iso_psl2c(const Rational& a);

/// Member of the automorphism family A of B4 as a 6x6 matrix whose
/// column i is the image of e_(i+1).
template <typename S>
Mat<S> family_a_matrix(const S& a, const S& b2, const S& b4, int eps, const S& d5, const S& d6, const S& f5,
                       const S& f6);
/// c2-elimination map e2 -> e2 - c2 e6, e3 -> e3 - c2 e5.
MatQ gamma_matrix(const Rational& c2);
/// Largest |alpha[x, y] - [alpha x, alpha y]| over basis pairs (0 when exact).
double automorphism_defect(const LieAlgebra& alg, const Eigen::MatrixXd& alpha);
bool is_automorphism(const LieAlgebra& alg, const MatQ& alpha);

struct IsoSemidirectResult {
  double d = 0.0;
  std::optional<Rational> d_exact;  // when b3^2 + c3^2 is a rational square
  bool gamma_verified = false;      // gamma is an automorphism with gamma(m_{b3,c3,c2}) = m_{b3,c3,0}
  bool alpha_verified = false;      // alpha in A with alpha(m_{d,0,0}) = m_{b3,c3,0}
  bool exact = false;               // both verified in rational arithmetic
  double defect = 0.0;              // float defect when not exact
  std::array<double, 2> alpha_b2_b4{0, 0};
};
/// Representative (d, 0, 0) of the class of m_{b3,c3,c2}, d = sqrt(b3^2+c3^2).
/// Throws DomainError outside the open unit disc.
IsoSemidirectResult solve_iso_semidirect(const Rational& b3, const Rational& c3, const Rational& c2);

// ---------------------------------------------------------------------------
// Bol-complement ansatz scans

enum class Ansatz { semisimple, semidirect };
/// Nine-parameter complement to h: for the semisimple ansatz
/// <T + aU + b iT + c iH, iU + dU + e iT + f iH, H + gU + h iT + k iH> in B1,
/// for the semidirect one <e1 + a1 e4 + a2 e5 + a3 e6, e2 + b1 e4 + ...,
/// e3 + c1 e4 + ...> in B4.
Subspace ansatz_subspace(Ansatz ansatz, const std::array<Rational, 9>& p);
std::array<Rational, 9> ansatz_point_ma(const Rational& a);
std::array<Rational, 9> ansatz_point_md(const Rational& d);
std::array<Rational, 9> ansatz_point_bcc(const Rational& b3, const Rational& c3, const Rational& c2);
/// a1 = 0, b1 = a2, b2 = 0, b3 = c2, c1 = -a3, c3 = 0.
bool on_bcc_slice(const std::array<Rational, 9>& p);

struct ComplementVerdict {
  bool direct_sum = false;
  bool closed = false;
  bool generates = false;
  bool bol() const { return direct_sum && closed && generates; }
};
ComplementVerdict test_complement(const Subspace& m, const Subspace& h);

struct ScanResult {
  std::vector<VerificationReport> reports;
  int on_family = 0, on_family_pass = 0;
  int off_family = 0, off_family_closed = 0;
  int perturbed = 0, perturbed_closed = 0;
};
/// On-family points must pass, random off-family points must fail closure.
/// For the semidirect ansatz single-coordinate perturbations off the slice
/// are scanned as well.
ScanResult bol_complement_scan(Ansatz ansatz, int n_samples, std::uint64_t seed);

}  // namespace bolkit
