#pragma once

#include <vector>

#include "k3lm/bigint.hpp"
#include "k3lm/div_class.hpp"

namespace k3lm {

class PicardLattice;

/// Exact enumeration of degree slices {D : D.P = degree, D^2 >= min_square}
/// for a class P with P^2 > 0.
///
/// Every D in a slice is written D = D0 + K y, where D0 is a particular
/// solution of D.P = degree and the columns of K are a basis of the integral
/// orthogonal complement P^perp. By the Hodge index theorem P^perp is
/// negative definite, so D^2 >= min_square bounds y inside an ellipsoid;
/// the ellipsoid is searched Fincke-Pohst style with rational arithmetic.
/// Results are sorted lexicographically.
class SliceEnumerator {
 public:
  SliceEnumerator(const PicardLattice& lattice, const DivClass& direction);

  std::vector<DivClass> enumerate(const BigInt& degree, const BigInt& min_square) const;

  /// gcd of the linear form D -> D.P; only multiples of it occur as degrees.
  const BigInt& degree_step() const { return step_; }

 private:
  const PicardLattice& lattice_;
  DivClass direction_;
  BigInt step_;
  DivClass unit_solution_;           // D.P = step_
  std::vector<DivClass> kernel_;     // basis of P^perp
  std::vector<std::vector<Rational>> form_;  // -(K^T G K), positive definite
  std::vector<std::vector<Rational>> chol_;  // Fincke-Pohst coefficients of form_
  std::vector<std::vector<Rational>> form_inverse_;
};

}  // namespace k3lm
