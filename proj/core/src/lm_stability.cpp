#include "k3lm/lm_stability.hpp"

#include <algorithm>

#include "k3lm/acm.hpp"
#include "k3lm/errors.hpp"

namespace k3lm {

std::string to_string(Verdict v) {
  return v == Verdict::certified_semistable ? "CERTIFIED_SEMISTABLE" : "INCONCLUSIVE";
}

LMBundleSpec lm_invariants(const ConeOracle& oracle, const DivClass& h, const BigInt& d) {
  const auto& lat = oracle.lattice();
  lat.check_rank(h);
  if (!oracle.is_ample(h)) throw DomainError("lm_invariants: " + h.to_string() + " is not ample");
  const BigInt h2 = lat.square(h);
  if (h2 < 4) throw DomainError("lm_invariants: needs H^2 >= 4, got " + h2.get_str());

  LMBundleSpec s;
  s.h = h;
  s.d = d;
  s.g = lat.genus(h);
  if (d < 2) throw DomainError("lm_invariants: c2 = " + d.get_str() + " violates d >= 2");
  if (d > s.g + 1) {
    throw DomainError("lm_invariants: c2 = " + d.get_str() + " violates d <= g + 1 = " +
                      BigInt(s.g + 1).get_str());
  }
  s.h0_e = s.g - d + 3;
  s.rho = 2 * d - s.g - 2;
  if (s.rho != s.g - 2 * (s.g - d + 1)) {
    throw ConsistencyError("Brill-Noether number expressions disagree");
  }
  s.slope_numerator = h2;
  s.quotient_filter_valid = d <= s.g;
  s.non_simple = s.rho < 0;
  s.h_very_ample = oracle.is_very_ample(h);
  // The vanishing h1(E(l)) = 0 for l >= 1 only needs H nef and big with
  // H^2 >= 4 and Z a pencil; both hold here.
  s.e_acm = true;
  return s;
}

namespace {

bool bpf_nontrivial(const ConeOracle& oracle, const DivClass& d) {
  if (d.is_zero() || !oracle.is_effective(d)) return false;
  if (oracle.nef_obstruction(d)) return false;
  return oracle.is_base_point_free(d);
}

bool bpf_big(const ConeOracle& oracle, const DivClass& d) {
  return bpf_nontrivial(oracle, d) && oracle.lattice().square(d) > 0;
}

}  // namespace

WitnessTrace theorem61_witness(const ConeOracle& oracle, const LMBundleSpec& spec,
                               const DestabCandidate& candidate) {
  const auto& lat = oracle.lattice();
  const DivClass& h = spec.h;
  if (candidate.l1 + candidate.l2 != h) {
    throw DomainError("theorem61_witness: L1 + L2 != H for candidate " + candidate.l1.to_string());
  }
  if (oracle.h1(candidate.l2) != 0) {
    throw DomainError("theorem61_witness: construction needs h1(L2) = 0, L2 = " +
                      candidate.l2.to_string());
  }
  if (lat.square(candidate.l1) < 2 || !oracle.is_effective(candidate.l1)) {
    throw DomainError("theorem61_witness: L1 = " + candidate.l1.to_string() +
                      " is not effective with L1^2 >= 2");
  }

  WitnessTrace t;
  DivClass current = candidate.l1;
  DivClass quotient = candidate.l2;
  // Move fixed (-2)-curves of L1 over to L2 until L1 becomes nef.
  while (auto root = oracle.nef_obstruction(current)) {
    current -= *root;
    quotient += *root;
    t.transferred_roots.push_back(*root);
    if (!bpf_big(oracle, quotient)) t.transfer_stayed_bpf_big = false;
    if (current.is_zero() || !oracle.is_effective(current)) {
      throw ConsistencyError("witness construction for " + candidate.l1.to_string() +
                             " reached non-effective residue " + current.to_string());
    }
  }

  const BigInt sq = lat.square(current);
  if (sq >= 2) {
    t.line_bundle = current;
  } else if (sq == 0) {
    t.elliptic_case = true;
    const DivClass fiber = primitive_part(current).second;
    for (const auto& root : t.transferred_roots) {
      if (lat.intersect(fiber, root) == 1) {
        t.elliptic_root = root;
        break;
      }
    }
    if (!t.elliptic_root) {
      throw ConsistencyError("elliptic residue " + current.to_string() + " of " +
                             candidate.l1.to_string() +
                             " meets no transferred (-2)-curve with multiplicity one");
    }
    t.line_bundle = current + *t.elliptic_root;
  } else {
    throw ConsistencyError("nef residue " + current.to_string() + " of " +
                           candidate.l1.to_string() + " has square " + sq.get_str());
  }

  const DivClass& l = t.line_bundle;
  const std::string who = "witness " + l.to_string() + " for L1 = " + candidate.l1.to_string();
  if (lat.square(l) < 2) throw ConsistencyError(who + " has L^2 < 2");
  const DivClass rest = candidate.l1 - l;
  if (!rest.is_zero() && !oracle.is_effective(rest)) {
    throw ConsistencyError(who + ": L1 - L is not effective");
  }
  const AcmReport acm = acm_report(oracle, l, h);
  if (!acm.is_acm) throw ConsistencyError(who + " is not ACM");
  if (!acm.is_initialized) throw ConsistencyError(who + " is not initialized");
  return t;
}

ScanReport destabilizer_scan(const ConeOracle& oracle, const LMBundleSpec& spec,
                             ScanOptions options) {
  const auto& lat = oracle.lattice();
  const DivClass& h = spec.h;
  const BigInt h2 = lat.square(h);

  ScanReport rep;
  rep.spec = spec;
  rep.options = options;
  const bool quotient_filter = spec.quotient_filter_valid;

  rep.filters.push_back("L1.H >= H^2/2 + 1");
  if (quotient_filter) {
    rep.filters.push_back("L2 base point free and nontrivial");
    rep.filters.push_back("L1^2 >= 2");
  } else {
    rep.notes.push_back("d = g + 1: |K_C - Z| is empty, base point free quotient filter dropped");
  }
  rep.filters.push_back("L1.L2 <= d");
  rep.filters.push_back("h0(L1) <= h0(E)");
  // E ACM forces h1(L2) = 0 for every quotient L2 (x) I_Z'.
  const bool h1_filter = options.strict || spec.e_acm;
  if (h1_filter) {
    rep.filters.push_back(spec.e_acm ? "h1(L2) = 0 (E is ACM)" : "h1(L2) = 0 (strict)");
    if (!spec.e_acm) {
      rep.notes.push_back("strict filter h1(L2)=0 presumes E ACM, which is not established here");
    }
  }
  if (options.gonality) {
    rep.clifford = clifford_index(oracle, h);
    const auto& [lo, hi] = rep.clifford->gonality_range;
    if (spec.d < lo || spec.d > hi) {
      throw DomainError("gonality mode: d = " + spec.d.get_str() + " is outside the gonality range [" +
                        lo.get_str() + "," + hi.get_str() + "]");
    }
    rep.filters.push_back("cliff <= mu(H) <= L1.L2 - 2 <= cliff + 1");
  }

  SliceEnumerator slices(lat, h);
  const BigInt first = h2 / 2 + 1;
  for (BigInt a = first; a < h2; ++a) {
    BigInt min_square = a - spec.d;  // L1.L2 = a - L1^2 <= d
    if (quotient_filter && min_square < 2) min_square = 2;
    for (auto& l1 : slices.enumerate(a, min_square)) {
      DivClass l2 = h - l1;
      if (quotient_filter && !bpf_nontrivial(oracle, l2)) continue;
      BigInt l1l2 = lat.intersect(l1, l2);
      if (l1l2 > spec.d) continue;
      if (oracle.h0(l1) > spec.h0_e) continue;
      const bool h1_l2_zero = oracle.h1(l2) == 0;
      if (h1_filter && !h1_l2_zero) continue;

      DestabCandidate c;
      if (options.gonality) {
        const auto& cl = *rep.clifford;
        const bool window =
            cl.mu && cl.cliff <= *cl.mu && *cl.mu <= l1l2 - 2 && l1l2 - 2 <= cl.cliff + 1;
        if (!window) continue;
        c.gonality_window = true;
      }
      c.l1 = std::move(l1);
      c.l2 = std::move(l2);
      c.l1_dot_l2 = l1l2;
      c.length_zprime = spec.d - l1l2;
      c.h1_l2_zero = h1_l2_zero;
      const bool l1_effective = oracle.is_effective(c.l1);
      c.l1_nef = l1_effective && !oracle.nef_obstruction(c.l1);
      if (l1_effective) {
        const AcmReport acm = acm_report(oracle, c.l1, h);
        c.l1_acm_initialized = acm.is_acm && acm.is_initialized;
      }
      if (options.gonality && oracle.h1(c.l1) != 0) {
        rep.counterexamples.push_back("gonality mode: h1(L1) != 0 for L1 = " + c.l1.to_string());
      }
      if (!quotient_filter) {
        c.witness_note = "not computed: quotient filter inactive";
      } else if (!c.h1_l2_zero) {
        c.witness_note = "not computed: h1(L2) != 0";
      } else {
        c.witness = theorem61_witness(oracle, spec, c).line_bundle;
      }
      rep.candidates.push_back(std::move(c));
    }
  }
  return rep;
}

SemistabilityCertificate semistable_certificate(const ConeOracle& oracle, const LMBundleSpec& spec,
                                                ScanOptions options) {
  const auto& lat = oracle.lattice();
  SemistabilityCertificate cert;
  cert.scan = destabilizer_scan(oracle, spec, options);
  const BigInt h2 = lat.square(spec.h);
  for (const auto& f : cert.scan.filters) cert.trace.push_back("filter: " + f);

  if (!cert.scan.candidates.empty()) {
    cert.verdict = Verdict::inconclusive;
    cert.trace.push_back(std::to_string(cert.scan.candidates.size()) +
                         " candidate(s) pass every necessary condition; instability not proven");
    return cert;
  }
  cert.verdict = Verdict::certified_semistable;
  cert.trace.push_back("no class L1 with " + BigInt(h2 / 2 + 1).get_str() + " <= L1.H <= " +
                       BigInt(h2 - 1).get_str() + " passes the filters");

  if (!spec.quotient_filter_valid) {
    cert.trace.push_back("stability undetermined: quotient filter inactive");
    return cert;
  }
  // A strictly semistable E has a Jordan-Holder quotient L' (x) I_Z'' with
  // L' base point free, nontrivial, L'.H = H^2/2 and (H - L').L' <= d.
  const BigInt half = h2 / 2;
  BigInt min_square = half - spec.d;
  if (min_square < 0) min_square = 0;
  SliceEnumerator slices(lat, spec.h);
  for (auto& lp : slices.enumerate(half, min_square)) {
    if (bpf_nontrivial(oracle, lp)) cert.equal_slope_quotients.push_back(std::move(lp));
  }
  cert.stable = cert.equal_slope_quotients.empty();
  cert.trace.push_back(*cert.stable
                           ? "no base point free L' with L'.H = H^2/2 fits c2: mu_H-stable"
                           : "equal-slope quotients exist: stability undetermined");
  return cert;
}

DMScanReport dm_extension_scan(const ConeOracle& oracle, const LMBundleSpec& spec) {
  const auto& lat = oracle.lattice();
  const DivClass& h = spec.h;
  const BigInt h2 = lat.square(h);
  DMScanReport rep;
  rep.spec = spec;
  if (!spec.non_simple) {
    rep.notes.push_back("rho >= 0: E need not be non-simple; extensions listed anyway");
  }
  SliceEnumerator slices(lat, h);
  for (BigInt a = 1; a < h2; ++a) {
    for (auto& m : slices.enumerate(a, a - spec.d)) {  // M.N = a - M^2 <= d
      DivClass n = h - m;
      if (oracle.h0(m) < 2 || oracle.h0(n) < 2) continue;
      if (!bpf_nontrivial(oracle, n)) continue;
      DMExtensionCandidate c;
      c.m_dot_n = lat.intersect(m, n);
      c.length = spec.d - c.m_dot_n;
      c.h0_m_minus_n = oracle.h0(m - n);
      if (c.h0_m_minus_n == 0 && c.length > 0) {
        rep.notes.push_back("excluded (" + m.to_string() + "," + n.to_string() +
                            "): h0(M-N)=0 forces Z' empty but length = " + c.length.get_str());
        continue;
      }
      c.splits = c.length == 0 &&
                 (c.h0_m_minus_n == 0 || oracle.h0(n - m) == 0 || oracle.h1(m - n) == 0);
      c.m = std::move(m);
      c.n = std::move(n);
      rep.candidates.push_back(std::move(c));
    }
  }
  return rep;
}

}  // namespace k3lm
