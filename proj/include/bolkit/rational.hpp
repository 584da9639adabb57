#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace bolkit {

// Exact rational scalar. Expression templates are off so that Eigen sees a
// plain value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VecQ = Vec<Rational>;
using MatQ = Mat<Rational>;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& q);

template <typename Scalar>
inline Scalar scalar_cast(const Rational& q) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return q;
  } else {
    return static_cast<Scalar>(q.template convert_to<double>());
  }
}

template <typename Scalar>
inline Mat<Scalar> cast_matrix(const MatQ& m) {
  Mat<Scalar> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = scalar_cast<Scalar>(m(i, j));
  return out;
}

template <typename Scalar>
inline Vec<Scalar> cast_vector(const VecQ& v) {
  Vec<Scalar> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = scalar_cast<Scalar>(v(i));
  return out;
}

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(double x, double tol = 0.0) { return std::abs(x) <= tol; }

/// Exact rank of a rational matrix.
Eigen::Index exact_rank(const MatQ& m);

/// Reduced row echelon form with unit pivots, zero rows dropped.
MatQ rref(const MatQ& m);

/// Exact inertia (positive, negative, zero counts) of a symmetric matrix,
/// computed by congruence diagonalisation.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Inertia inertia(const MatQ& symmetric);

/// Basis of the right null space, one vector per column.
MatQ null_space(const MatQ& m);

}  // namespace bolkit
