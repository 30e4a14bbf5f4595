#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k3lm/bigint.hpp"
#include "k3lm/div_class.hpp"
#include "k3lm/enumeration.hpp"
#include "k3lm/lattice.hpp"
#include "k3lm/memo.hpp"

namespace k3lm {

/// D = k F + Gamma with F elliptic (primitive, F^2 = 0, nef), Gamma an
/// irreducible (-2)-curve and F.Gamma = 1: the only way a nef class on a K3
/// fails to be base point free.
struct BpfObstruction {
  BigInt k;
  DivClass elliptic;
  DivClass root;
};

struct VeryAmpleObstruction {
  enum class Kind {
    small_square,        // D^2 < 4, the numerical criterion does not apply
    elliptic_low_degree, // E^2 = 0 and E.D in {1, 2}
    double_of_genus_two, // D = 2E with E^2 = 2
    orthogonal_root,     // E^2 = -2 and E.D = 0
  };
  Kind kind;
  std::optional<DivClass> curve;
};

std::string to_string(VeryAmpleObstruction::Kind kind);

struct ConeFlags {
  bool effective = false;
  bool nef = false;
  bool base_point_free = false;
  bool ample = false;
  bool very_ample = false;

  std::optional<DivClass> nef_witness;  // irreducible root with D.Gamma < 0
  std::optional<BpfObstruction> bpf_witness;
  std::optional<DivClass> ample_witness;  // effective root with D.Gamma <= 0
  std::optional<VeryAmpleObstruction> very_ample_witness;
};

struct EllipticMultiple {
  BigInt k;
  DivClass fiber;
};

/// h^i of a line bundle together with its fixed/mobile decomposition.
///
/// For effective D, mobile_part is the nef class reached by stripping fixed
/// (-2)-curves and fixed_part is their sum. For non-effective D both parts
/// are zero and effective is false. elliptic_multiple describes the mobile
/// part when it is k F with F elliptic; then h^1(mobile_part) = k - 1.
struct CohomologyProfile {
  BigInt h0;
  BigInt h1;
  BigInt h2;
  bool effective = false;
  DivClass fixed_part;
  DivClass mobile_part;
  std::optional<EllipticMultiple> elliptic_multiple;
  std::vector<DivClass> reduction_steps;
};

/// Decision procedures for the effective, nef, base-point-free, ample and
/// very ample cones of a K3 Picard lattice, plus line-bundle cohomology.
///
/// Everything is derived from the lattice and its ample class H:
///  - every (-2)-class of positive degree is effective (Riemann-Roch);
///  - an effective class of degree e has D^2 >= -2 e^2 (it is a sum of at
///    most e curves, each with self-intersection >= -2);
///  - a class that fails nefness meets some irreducible (-2)-curve of degree
///    at most its own negatively.
///
/// The oracle keeps per-lattice memo tables that are safe for concurrent
/// readers. `threads` > 1 lets root enumeration fan out over degree slices;
/// results are identical for every thread count.
class ConeOracle {
 public:
  explicit ConeOracle(PicardLattice lattice, unsigned threads = 1);
  ConeOracle(const ConeOracle&) = delete;
  ConeOracle& operator=(const ConeOracle&) = delete;

  const PicardLattice& lattice() const { return lattice_; }
  unsigned threads() const { return threads_; }

  bool is_effective(const DivClass& d) const;

  /// All Gamma with Gamma^2 = -2 and 0 < Gamma.H <= cap, sorted lexicographically.
  std::vector<DivClass> effective_roots_up_to(const BigInt& cap) const;
  /// (-2)-classes with Gamma.H == degree (sorted; cached).
  std::vector<DivClass> roots_of_degree(const BigInt& degree) const;
  /// Irreducible roots of degree <= cap ordered by (degree, coordinates).
  std::vector<DivClass> irreducible_roots_up_to(const BigInt& cap) const;
  bool is_irreducible_root(const DivClass& gamma) const;

  /// Effective classes with D.H == degree (degree >= 1), sorted.
  std::vector<DivClass> effective_classes_of_degree(const BigInt& degree) const;

  /// Lowest-degree (then lexicographically first) irreducible root meeting d negatively.
  std::optional<DivClass> nef_obstruction(const DivClass& d) const;
  bool is_nef(const DivClass& d) const;

  std::optional<BpfObstruction> bpf_obstruction(const DivClass& d) const;
  bool is_base_point_free(const DivClass& d) const;

  /// First effective (-2)-class orthogonal to d; requires d^2 > 0.
  std::optional<DivClass> orthogonal_root(const DivClass& d) const;
  bool is_ample(const DivClass& d) const;

  std::optional<VeryAmpleObstruction> very_ample_obstruction(const DivClass& d) const;
  bool is_very_ample(const DivClass& d) const;

  BigInt h0(const DivClass& d) const;
  BigInt h1(const DivClass& d) const;
  CohomologyProfile cohomology(const DivClass& d) const;

  /// All cone predicates with witnesses. Rejects the zero class.
  ConeFlags analyze(const DivClass& d) const;

 private:
  struct Reduction {
    DivClass mobile;
    DivClass fixed;
    std::vector<DivClass> steps;
  };
  // A rank-one hyperbolic lattice is positive definite: no (-2)-classes.
  bool rootless() const { return lattice_.rank() == 1; }
  Reduction reduce_to_nef(const DivClass& d) const;
  BigInt h0_of_nef(const DivClass& mobile) const;
  void require_effective_nonzero(const DivClass& d, const char* op) const;

  PicardLattice lattice_;
  unsigned threads_;
  SliceEnumerator polarization_slices_;
  mutable detail::ConcurrentMemo<std::string, std::vector<DivClass>> roots_by_degree_;
  mutable detail::ConcurrentMemo<DivClass, bool, DivClassHash> effective_memo_;
  mutable detail::ConcurrentMemo<DivClass, bool, DivClassHash> irreducible_memo_;
  mutable detail::ConcurrentMemo<DivClass, BigInt, DivClassHash> h0_memo_;
};

}  // namespace k3lm
