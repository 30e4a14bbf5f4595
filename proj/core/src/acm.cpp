#include "k3lm/acm.hpp"

#include "k3lm/errors.hpp"

namespace k3lm {

bool in_a_set(const ConeOracle& oracle, const DivClass& l, const DivClass& h) {
  return oracle.h0(l) >= 2 && oracle.h0(h - l) >= 2;
}

bool is_initialized(const ConeOracle& oracle, const DivClass& l, const DivClass& h) {
  return oracle.h0(l) > 0 && oracle.h0(l - h) == 0;
}

AcmReport acm_report(const ConeOracle& oracle, const DivClass& l, const DivClass& h) {
  const auto& lat = oracle.lattice();
  lat.check_rank(l);
  lat.check_rank(h);
  if (!oracle.is_effective(l)) {
    throw DomainError("is_acm_line_bundle: " + l.to_string() + " is not effective");
  }
  const BigInt h2 = lat.square(h);
  if (h2 <= 0) throw DomainError("is_acm_line_bundle: polarization has non-positive square");

  AcmReport rep;
  const BigInt hl = lat.intersect(h, l);
  rep.m_used = ceil_div(hl + 1, h2);
  if (rep.m_used < 1) rep.m_used = 1;
  rep.is_acm = true;
  for (BigInt k = 0; k <= rep.m_used; ++k) {
    BigInt h1 = oracle.h1(l - k * h);
    if (h1 != 0) rep.is_acm = false;
    rep.h1_chain.emplace_back(k, std::move(h1));
  }
  rep.is_initialized = is_initialized(oracle, l, h);

  if (in_a_set(oracle, l, h)) {
    rep.shortcut_used = true;
    const bool shortcut = oracle.h1(l) == 0 && oracle.h1(h - l) == 0;
    if (shortcut != rep.is_acm) {
      throw ConsistencyError("ACM chain and two-term test disagree on " + l.to_string());
    }
    if (!rep.is_initialized) {
      throw ConsistencyError(l.to_string() + " lies in A(H) but is not initialized");
    }
  }
  return rep;
}

}  // namespace k3lm
