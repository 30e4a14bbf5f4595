#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3lm/bigint.hpp"
#include "k3lm/div_class.hpp"

namespace k3lm {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Inertia of a symmetric matrix.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Coefficients c_0..c_n of det(x I - A), c_n = 1. Exact (Faddeev-LeVerrier).
std::vector<BigInt> characteristic_polynomial(const IntMatrix& a);

/// Exact inertia of a symmetric integer matrix from its characteristic polynomial.
/// All roots are real, so Descartes' rule of signs counts them exactly.
Signature signature_of(const IntMatrix& symmetric);

/// D = k F with k the content of D and F primitive. Rejects the zero class.
std::pair<BigInt, DivClass> primitive_part(const DivClass& d);

/// Even hyperbolic lattice with a distinguished ample class H.
///
/// Construction validates every invariant: square matrix, symmetric, even
/// diagonal, signature (1, rank - 1), H^2 > 0 and H ample (no (-2)-vector is
/// orthogonal to H). A violated invariant raises LatticeError naming it.
/// The object is immutable after construction.
class PicardLattice {
 public:
  static PicardLattice create(IntMatrix gram, DivClass polarization,
                              std::vector<std::string> names = {});

  std::size_t rank() const { return gram_.size(); }
  const IntMatrix& gram() const { return gram_; }
  const DivClass& polarization() const { return polarization_; }
  const std::vector<std::string>& names() const { return names_; }

  BigInt intersect(const DivClass& a, const DivClass& b) const;
  BigInt square(const DivClass& d) const { return intersect(d, d); }
  /// D.H against the distinguished polarization.
  BigInt degree(const DivClass& d) const { return intersect(d, polarization_); }
  /// chi(D) = D^2/2 + 2 (Riemann-Roch on a K3).
  BigInt euler_char(const DivClass& d) const;
  /// Arithmetic genus D^2/2 + 1; DomainError when D^2 < -2.
  BigInt genus(const DivClass& d) const;
  /// G * v, the linear form "pair with v" in coordinates.
  std::vector<BigInt> pairing_row(const DivClass& v) const;

  DivClass zero() const { return DivClass::zero(rank()); }
  void check_rank(const DivClass& d) const;

 private:
  PicardLattice(IntMatrix gram, DivClass polarization, std::vector<std::string> names)
      : gram_(std::move(gram)), polarization_(std::move(polarization)), names_(std::move(names)) {}

  IntMatrix gram_;
  DivClass polarization_;
  std::vector<std::string> names_;
};

}  // namespace k3lm
