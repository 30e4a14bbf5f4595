#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3lm/clifford.hpp"
#include "k3lm/cone_oracle.hpp"

namespace k3lm {

/// Numerical data of a rank-2 Lazarsfeld-Mukai bundle E_{C,Z} attached to a
/// curve C in |H| and a base point free pencil Z of degree d on C.
struct LMBundleSpec {
  DivClass h;             // c_1(E)
  BigInt d;               // c_2(E) = deg Z
  BigInt g;               // H^2/2 + 1
  int r = 1;              // dim |Z|
  BigInt h0_e;            // g - d + 3
  BigInt rho;             // 2d - g - 2
  BigInt slope_numerator; // c_1(E).H = H^2, so mu_H(E) = H^2 / 2

  bool quotient_filter_valid = false;  // d <= g, i.e. |K_C - Z| nonempty
  bool non_simple = false;             // rho < 0
  bool h_very_ample = false;
  bool e_acm = false;                  // E is ACM and initialized w.r.t. H
};

LMBundleSpec lm_invariants(const ConeOracle& oracle, const DivClass& h, const BigInt& d);

/// A potential maximal destabilizing line subbundle L1 with quotient L2 (x) I_Z'.
struct DestabCandidate {
  DivClass l1;
  DivClass l2;
  BigInt l1_dot_l2;
  BigInt length_zprime;  // d - L1.L2
  bool l1_nef = false;
  bool l1_acm_initialized = false;
  bool h1_l2_zero = false;
  std::optional<bool> gonality_window;  // set in gonality mode
  std::optional<DivClass> witness;      // initialized ACM L inside L1
  std::string witness_note;
};

struct ScanOptions {
  bool strict = false;
  bool gonality = false;
};

struct ScanReport {
  LMBundleSpec spec;
  ScanOptions options;
  std::vector<std::string> filters;  // applied necessary conditions, in order
  std::vector<DestabCandidate> candidates;
  std::optional<CliffordReport> clifford;  // gonality mode only
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
};

/// Every L1 satisfying the necessary conditions a maximal destabilizing
/// subsheaf of E must meet, sorted by (L1.H, L1).
ScanReport destabilizer_scan(const ConeOracle& oracle, const LMBundleSpec& spec,
                             ScanOptions options = {});

enum class Verdict { certified_semistable, inconclusive };
std::string to_string(Verdict v);

struct SemistabilityCertificate {
  Verdict verdict = Verdict::inconclusive;
  ScanReport scan;
  /// For certified bundles: true when no base point free quotient of slope
  /// exactly mu_H(E) fits the c_2 budget, so E is even mu_H-stable.
  std::optional<bool> stable;
  std::vector<DivClass> equal_slope_quotients;
  std::vector<std::string> trace;
};

SemistabilityCertificate semistable_certificate(const ConeOracle& oracle, const LMBundleSpec& spec,
                                                ScanOptions options = {});

/// Replay of the construction producing an initialized ACM line bundle
/// inside a destabilizer.
struct WitnessTrace {
  DivClass line_bundle;
  std::vector<DivClass> transferred_roots;
  bool elliptic_case = false;
  std::optional<DivClass> elliptic_root;
  /// L2 + Gamma_1 + ... + Gamma_i stayed base point free and big at each step.
  bool transfer_stayed_bpf_big = true;
};

/// Produces L with L^2 >= 2, ACM, initialized and L1 - L effective or zero.
/// Throws ConsistencyError when the construction cannot deliver that.
WitnessTrace theorem61_witness(const ConeOracle& oracle, const LMBundleSpec& spec,
                               const DestabCandidate& candidate);

struct DMExtensionCandidate {
  DivClass m;
  DivClass n;
  BigInt m_dot_n;
  BigInt length;  // d - M.N
  BigInt h0_m_minus_n;
  bool splits = false;
};

struct DMScanReport {
  LMBundleSpec spec;
  std::vector<DMExtensionCandidate> candidates;
  std::vector<std::string> notes;
};

/// Numerically admissible Donagi-Morrison extensions 0 -> M -> E -> N (x) I_Z' -> 0.
DMScanReport dm_extension_scan(const ConeOracle& oracle, const LMBundleSpec& spec);

}  // namespace k3lm
