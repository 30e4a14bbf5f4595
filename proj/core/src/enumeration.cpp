#include "k3lm/enumeration.hpp"

#include <algorithm>
#include <functional>

#include "k3lm/errors.hpp"
#include "k3lm/lattice.hpp"

namespace k3lm {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

// Inverse of a positive definite rational matrix by Gauss-Jordan.
RatMatrix invert(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix m = a;
  RatMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw ConsistencyError("orthogonal complement form is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

SliceEnumerator::SliceEnumerator(const PicardLattice& lattice, const DivClass& direction)
    : lattice_(lattice), direction_(direction) {
  lattice.check_rank(direction);
  if (lattice.square(direction) <= 0) {
    throw DomainError("slice enumeration needs a direction with positive square, got " +
                      direction.to_string());
  }
  const std::size_t n = lattice.rank();

  // Column operations turning the row h = G P into (g, 0, ..., 0); the
  // accumulated unimodular matrix U gives the particular solution (first
  // column) and a kernel basis (remaining columns).
  std::vector<BigInt> row = lattice.pairing_row(direction);
  IntMatrix u(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  for (std::size_t j = 1; j < n; ++j) {
    if (row[j] == 0) continue;
    BigInt g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), row[0].get_mpz_t(),
               row[j].get_mpz_t());
    const BigInt a = row[0] / g;
    const BigInt b = row[j] / g;
    for (std::size_t i = 0; i < n; ++i) {
      BigInt c0 = x * u[i][0] + y * u[i][j];
      BigInt cj = -b * u[i][0] + a * u[i][j];
      u[i][0] = std::move(c0);
      u[i][j] = std::move(cj);
    }
    row[0] = g;
    row[j] = 0;
  }
  if (row[0] < 0) {
    row[0] = -row[0];
    for (std::size_t i = 0; i < n; ++i) u[i][0] = -u[i][0];
  }
  step_ = row[0];

  std::vector<BigInt> col(n);
  for (std::size_t i = 0; i < n; ++i) col[i] = u[i][0];
  unit_solution_ = DivClass(col);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = u[i][j];
    kernel_.emplace_back(col);
  }

  const std::size_t m = kernel_.size();
  form_.assign(m, std::vector<Rational>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      form_[i][j] = Rational(-lattice.intersect(kernel_[i], kernel_[j]));
    }
  }

  // Cohen, Algorithm 2.7.6: q(x) = sum_i Q_ii (x_i + sum_{j>i} Q_ij x_j)^2.
  chol_ = form_;
  for (std::size_t i = 0; i < m; ++i) {
    if (chol_[i][i] <= 0) {
      throw ConsistencyError("orthogonal complement of " + direction.to_string() +
                             " is not negative definite");
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      chol_[j][i] = chol_[i][j];
      chol_[i][j] /= chol_[i][i];
    }
    for (std::size_t k = i + 1; k < m; ++k) {
      for (std::size_t l = k; l < m; ++l) chol_[k][l] -= chol_[k][i] * chol_[i][l];
    }
  }
  if (m > 0) form_inverse_ = invert(form_);
}

std::vector<DivClass> SliceEnumerator::enumerate(const BigInt& degree,
                                                 const BigInt& min_square) const {
  std::vector<DivClass> out;
  if (!mpz_divisible_p(degree.get_mpz_t(), step_.get_mpz_t())) return out;
  const DivClass base = (degree / step_) * unit_solution_;
  const std::size_t m = kernel_.size();

  if (m == 0) {
    if (lattice_.square(base) >= min_square) out.push_back(base);
    return out;
  }

  // D^2 = base^2 + 2 b.y - y^T N y with N = form_, b_i = K_i . base.
  // Completing the square: (y - c)^T N (y - c) <= base^2 - min_square + c.b, c = N^-1 b.
  std::vector<Rational> b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = Rational(lattice_.intersect(kernel_[i], base));
  std::vector<Rational> center(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) center[i] += form_inverse_[i][j] * b[j];
  }
  Rational radius = Rational(lattice_.square(base) - min_square);
  for (std::size_t i = 0; i < m; ++i) radius += center[i] * b[i];
  if (radius < 0) return out;

  std::vector<BigInt> y(m, 0);
  std::function<void(std::size_t, const Rational&)> search = [&](std::size_t level,
                                                                  const Rational& budget) {
    const std::size_t i = level - 1;
    Rational shift = -center[i];
    for (std::size_t j = i + 1; j < m; ++j) shift += chol_[i][j] * (Rational(y[j]) - center[j]);
    shift.canonicalize();
    // Need chol_ii (y_i + p/q)^2 <= budget  <=>  |q y_i + p| <= isqrt(floor(budget q^2 / chol_ii)).
    const BigInt& p = shift.get_num();
    const BigInt& q = shift.get_den();
    Rational scaled = budget * Rational(q * q) / chol_[i][i];
    const BigInt s = isqrt(floor_rational(scaled));
    const BigInt lo = ceil_div(-s - p, q);
    const BigInt hi = floor_div(s - p, q);
    for (BigInt v = lo; v <= hi; ++v) {
      y[i] = v;
      Rational t = Rational(v) + shift;
      Rational rest = budget - chol_[i][i] * t * t;
      if (rest < 0) continue;
      if (i == 0) {
        DivClass d = base;
        for (std::size_t k = 0; k < m; ++k) {
          if (y[k] != 0) d += y[k] * kernel_[k];
        }
        if (lattice_.square(d) >= min_square) out.push_back(std::move(d));
      } else {
        search(level - 1, rest);
      }
    }
    y[i] = 0;
  };
  search(m, radius);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace k3lm
