#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k3lm/cone_oracle.hpp"

namespace k3lm {

/// ACM test for a line bundle with respect to a polarization H.
///
/// m is the least integer with H.L <= m H^2 - 1. If h^1(L - kH) vanishes for
/// 0 <= k <= m then L is ACM; a nonzero entry is itself a twist with
/// nonvanishing H^1, so the chain decides ACM-ness in both directions.
struct AcmReport {
  bool is_acm = false;
  bool is_initialized = false;
  BigInt m_used;
  std::vector<std::pair<BigInt, BigInt>> h1_chain;  // (k, h^1(L - kH))
  /// L in A(H): the two-term test h^1(L) = h^1(H - L) = 0 was run and agreed.
  bool shortcut_used = false;
};

bool in_a_set(const ConeOracle& oracle, const DivClass& l, const DivClass& h);

AcmReport acm_report(const ConeOracle& oracle, const DivClass& l, const DivClass& h);
inline AcmReport acm_report(const ConeOracle& oracle, const DivClass& l) {
  return acm_report(oracle, l, oracle.lattice().polarization());
}

/// h^0(L) > 0 and h^0(L - H) = 0.
bool is_initialized(const ConeOracle& oracle, const DivClass& l, const DivClass& h);
inline bool is_initialized(const ConeOracle& oracle, const DivClass& l) {
  return is_initialized(oracle, l, oracle.lattice().polarization());
}

}  // namespace k3lm
