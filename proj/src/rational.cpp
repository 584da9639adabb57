#include "bolkit/rational.hpp"

#include <stdexcept>
#include <vector>

namespace bolkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: " + std::string(s));
  Integer z{std::string(s)};
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw std::invalid_argument("bad denominator in " + std::string(text));
  Integer den(std::string{den_text});
  if (den == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

MatQ rref(const MatQ& input) {
  MatQ m = input;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    m.row(r).swap(m.row(pivot));
    Rational inv = Rational(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return m.topRows(r);
}

Eigen::Index exact_rank(const MatQ& m) { return rref(m).rows(); }

MatQ null_space(const MatQ& m) {
  MatQ R = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index i = 0; i < R.rows(); ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (R(i, j) != 0) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index j = 0; j < cols; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  MatQ basis = MatQ::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) basis(pivot_col[i], k) = -R(i, free_cols[k]);
  }
  return basis;
}

Inertia inertia(const MatQ& symmetric) {
  MatQ a = symmetric;
  const Eigen::Index n = a.rows();
  Inertia result;
  Eigen::Index k = 0;
  while (k < n) {
    // Bring a nonzero diagonal entry to position k, or manufacture one from an
    // off-diagonal entry via e_k <- e_k + e_j.
    Eigen::Index p = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (a(i, i) != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = k; i < n && pi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) {
        result.zero += static_cast<int>(n - k);
        break;
      }
      a.row(pi) += a.row(pj);
      a.col(pi) += a.col(pj);
      p = pi;
    }
    if (p != k) {
      a.row(p).swap(a.row(k));
      a.col(p).swap(a.col(k));
    }
    const Rational d = a(k, k);
    (d > 0 ? result.positive : result.negative) += 1;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / d;
      a.row(i) -= f * a.row(k);
      a.col(i) -= f * a.col(k);
    }
    ++k;
  }
  return result;
}

}  // namespace bolkit
