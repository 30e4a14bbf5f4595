#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k3lm/cone_oracle.hpp"

namespace k3lm {

struct MuResult {
  std::optional<BigInt> mu;
  std::vector<DivClass> minimizers;  // A^0(L)
};

/// Clifford data of a base point free and big class L.
struct CliffordReport {
  DivClass polarization;
  BigInt genus;
  std::vector<DivClass> a_set;
  std::optional<BigInt> mu;
  std::vector<DivClass> a0_set;
  BigInt cliff;
  /// Cliff + 2 <= gonality <= Cliff + 3; the lattice cannot tell which.
  std::pair<BigInt, BigInt> gonality_range;
  /// A class D in A^0(L) with 0 <= D^2 <= cliff + 2 and 2 D^2 <= D.L, found
  /// whenever cliff < floor((g - 1) / 2).
  std::optional<DivClass> bound_witness;
};

/// A(L) = {D : h^0(D) >= 2, h^0(L - D) >= 2}, sorted.
std::vector<DivClass> enumerate_a_set(const ConeOracle& oracle, const DivClass& l);

/// mu(L) = min D.(L - D) - 2 over A(L), with its minimizers A^0(L).
MuResult mu(const ConeOracle& oracle, const DivClass& l);

CliffordReport clifford_index(const ConeOracle& oracle, const DivClass& l);

}  // namespace k3lm
