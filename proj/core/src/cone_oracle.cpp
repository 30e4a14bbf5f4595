#include "k3lm/cone_oracle.hpp"

#include <algorithm>
#include <future>

#include "k3lm/errors.hpp"

namespace k3lm {

std::string to_string(VeryAmpleObstruction::Kind kind) {
  switch (kind) {
    case VeryAmpleObstruction::Kind::small_square:
      return "D^2 < 4";
    case VeryAmpleObstruction::Kind::elliptic_low_degree:
      return "E^2=0 and E.D in {1,2}";
    case VeryAmpleObstruction::Kind::double_of_genus_two:
      return "D=2E with E^2=2";
    case VeryAmpleObstruction::Kind::orthogonal_root:
      return "E^2=-2 and E.D=0";
  }
  return "unknown";
}

ConeOracle::ConeOracle(PicardLattice lattice, unsigned threads)
    : lattice_(std::move(lattice)),
      threads_(std::max(1u, threads)),
      polarization_slices_(lattice_, lattice_.polarization()) {}

std::vector<DivClass> ConeOracle::roots_of_degree(const BigInt& degree) const {
  const std::string key = degree.get_str();
  if (auto hit = roots_by_degree_.find(key)) return *hit;
  std::vector<DivClass> roots;
  for (auto& d : polarization_slices_.enumerate(degree, -2)) {
    if (lattice_.square(d) == -2) roots.push_back(std::move(d));
  }
  return roots_by_degree_.insert(key, std::move(roots));
}

std::vector<DivClass> ConeOracle::effective_roots_up_to(const BigInt& cap) const {
  std::vector<DivClass> out;
  if (rootless()) return out;
  if (threads_ > 1) {
    // Slices are independent; warm the cache concurrently, then merge in order.
    std::vector<std::future<void>> jobs;
    for (BigInt e = 1; e <= cap; ++e) {
      jobs.push_back(std::async(std::launch::async, [this, e] { roots_of_degree(e); }));
      if (jobs.size() >= threads_) {
        for (auto& j : jobs) j.get();
        jobs.clear();
      }
    }
    for (auto& j : jobs) j.get();
  }
  for (BigInt e = 1; e <= cap; ++e) {
    auto slice = roots_of_degree(e);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ConeOracle::is_irreducible_root(const DivClass& gamma) const {
  lattice_.check_rank(gamma);
  if (lattice_.square(gamma) != -2) {
    throw DomainError("is_irreducible_root: " + gamma.to_string() + " is not a (-2)-class");
  }
  const BigInt deg = lattice_.degree(gamma);
  if (deg <= 0) {
    throw DomainError("is_irreducible_root: " + gamma.to_string() + " is not effective");
  }
  if (auto hit = irreducible_memo_.find(gamma)) return *hit;

  // A reducible effective root has a component C of smaller degree with
  // Gamma.C < 0 (since Gamma^2 < 0), and that component is itself an
  // irreducible (-2)-curve. Conversely distinct irreducible curves meet
  // non-negatively.
  bool irreducible = true;
  for (BigInt e = 1; e < deg && irreducible; ++e) {
    for (const auto& other : roots_of_degree(e)) {
      if (lattice_.intersect(gamma, other) < 0 && is_irreducible_root(other)) {
        irreducible = false;
        break;
      }
    }
  }
  return irreducible_memo_.insert(gamma, irreducible);
}

std::vector<DivClass> ConeOracle::irreducible_roots_up_to(const BigInt& cap) const {
  if (rootless()) return {};
  if (threads_ > 1) effective_roots_up_to(cap);
  std::vector<DivClass> out;
  for (BigInt e = 1; e <= cap; ++e) {
    for (const auto& r : roots_of_degree(e)) {
      if (is_irreducible_root(r)) out.push_back(r);
    }
  }
  return out;
}

bool ConeOracle::is_effective(const DivClass& d) const {
  lattice_.check_rank(d);
  if (d.is_zero()) return true;
  const BigInt deg = lattice_.degree(d);
  if (deg <= 0) return false;
  const BigInt sq = lattice_.square(d);
  if (sq >= -2) return true;
  if (auto hit = effective_memo_.find(d)) return *hit;

  // D^2 < -2: D is effective iff it contains a (-2)-curve meeting it
  // negatively, and what is left over is effective. Removing such a root
  // raises D^2, so the recursion stays inside finitely many slices.
  bool effective = false;
  for (BigInt e = 1; e < deg && !effective; ++e) {
    for (const auto& root : roots_of_degree(e)) {
      if (lattice_.intersect(d, root) < 0 && is_effective(d - root)) {
        effective = true;
        break;
      }
    }
  }
  return effective_memo_.insert(d, effective);
}

std::vector<DivClass> ConeOracle::effective_classes_of_degree(const BigInt& degree) const {
  if (degree < 1) throw DomainError("effective_classes_of_degree: degree must be positive");
  std::vector<DivClass> out;
  const BigInt bound = -2 * degree * degree;
  for (auto& d : polarization_slices_.enumerate(degree, bound)) {
    if (is_effective(d)) out.push_back(std::move(d));
  }
  return out;
}

void ConeOracle::require_effective_nonzero(const DivClass& d, const char* op) const {
  lattice_.check_rank(d);
  if (d.is_zero()) throw DomainError(std::string(op) + ": the zero class is not analyzable");
  if (!is_effective(d)) {
    throw DomainError(std::string(op) + ": " + d.to_string() + " is not effective");
  }
}

std::optional<DivClass> ConeOracle::nef_obstruction(const DivClass& d) const {
  lattice_.check_rank(d);
  if (rootless()) return std::nullopt;
  const BigInt deg = lattice_.degree(d);
  // The lowest-degree root meeting D negatively is irreducible: a reducible
  // one would have a component of smaller degree doing the same.
  for (BigInt e = 1; e <= deg; ++e) {
    for (const auto& root : roots_of_degree(e)) {
      if (lattice_.intersect(d, root) < 0) return root;
    }
  }
  return std::nullopt;
}

bool ConeOracle::is_nef(const DivClass& d) const {
  require_effective_nonzero(d, "is_nef");
  return !nef_obstruction(d).has_value();
}

std::optional<BpfObstruction> ConeOracle::bpf_obstruction(const DivClass& d) const {
  require_effective_nonzero(d, "is_base_point_free");
  if (nef_obstruction(d)) {
    throw DomainError("is_base_point_free: " + d.to_string() + " is not nef");
  }
  const BigInt deg = lattice_.degree(d);
  for (const auto& root : irreducible_roots_up_to(deg)) {
    const DivClass rest = d - root;
    if (rest.is_zero()) continue;
    auto [k, fiber] = primitive_part(rest);
    if (k < 2) continue;
    if (lattice_.square(fiber) != 0 || lattice_.intersect(fiber, root) != 1) continue;
    if (lattice_.degree(fiber) <= 0 || nef_obstruction(fiber)) continue;
    return BpfObstruction{k, fiber, root};
  }
  return std::nullopt;
}

bool ConeOracle::is_base_point_free(const DivClass& d) const {
  return !bpf_obstruction(d).has_value();
}

std::optional<DivClass> ConeOracle::orthogonal_root(const DivClass& d) const {
  lattice_.check_rank(d);
  if (lattice_.square(d) <= 0) {
    throw DomainError("orthogonal_root: " + d.to_string() + " does not have positive square");
  }
  SliceEnumerator perp(lattice_, d);
  for (auto& r : perp.enumerate(0, -2)) {
    if (lattice_.square(r) != -2) continue;
    // Exactly one of +-r is effective; H is ample so r.H != 0.
    return lattice_.degree(r) > 0 ? r : -r;
  }
  return std::nullopt;
}

bool ConeOracle::is_ample(const DivClass& d) const {
  lattice_.check_rank(d);
  if (d.is_zero()) return false;
  if (lattice_.square(d) <= 0 || lattice_.degree(d) <= 0) return false;
  if (nef_obstruction(d)) return false;
  return !orthogonal_root(d).has_value();
}

std::optional<VeryAmpleObstruction> ConeOracle::very_ample_obstruction(const DivClass& d) const {
  require_effective_nonzero(d, "is_very_ample");
  if (nef_obstruction(d)) throw DomainError("is_very_ample: " + d.to_string() + " is not nef");
  if (lattice_.square(d) < 4) {
    throw DomainError("is_very_ample: needs D^2 >= 4, got " + lattice_.square(d).get_str());
  }
  using Kind = VeryAmpleObstruction::Kind;

  // (i) E^2 = 0 with E.D in {1, 2}. The slice E.D = j is finite because
  // D^perp is negative definite.
  SliceEnumerator along_d(lattice_, d);
  for (long j : {1L, 2L}) {
    for (auto& e : along_d.enumerate(j, 0)) {
      if (lattice_.square(e) == 0 && is_effective(e)) {
        return VeryAmpleObstruction{Kind::elliptic_low_degree, std::move(e)};
      }
    }
  }
  // (ii) D = 2E with E^2 = 2.
  auto [k, prim] = primitive_part(d);
  if (mpz_even_p(k.get_mpz_t())) {
    DivClass half = (k / 2) * prim;
    if (lattice_.square(half) == 2) return VeryAmpleObstruction{Kind::double_of_genus_two, half};
  }
  // (iii) a (-2)-curve contracted by D.
  if (auto root = orthogonal_root(d)) return VeryAmpleObstruction{Kind::orthogonal_root, *root};
  return std::nullopt;
}

bool ConeOracle::is_very_ample(const DivClass& d) const {
  return !very_ample_obstruction(d).has_value();
}

ConeOracle::Reduction ConeOracle::reduce_to_nef(const DivClass& d) const {
  Reduction r{d, lattice_.zero(), {}};
  while (auto root = nef_obstruction(r.mobile)) {
    r.mobile -= *root;
    r.fixed += *root;
    r.steps.push_back(*root);
    if (!r.mobile.is_zero() && !is_effective(r.mobile)) {
      throw ConsistencyError("fixed-part reduction of " + d.to_string() +
                             " reached non-effective residue " + r.mobile.to_string());
    }
  }
  return r;
}

BigInt ConeOracle::h0_of_nef(const DivClass& mobile) const {
  if (mobile.is_zero()) return 1;
  const BigInt sq = lattice_.square(mobile);
  if (sq > 0) return sq / 2 + 2;
  if (sq == 0) return primitive_part(mobile).first + 1;
  throw ConsistencyError("nef residue " + mobile.to_string() + " has negative square");
}

BigInt ConeOracle::h0(const DivClass& d) const {
  lattice_.check_rank(d);
  if (d.is_zero()) return 1;
  if (!is_effective(d)) return 0;
  if (auto hit = h0_memo_.find(d)) return *hit;
  BigInt value = h0_of_nef(reduce_to_nef(d).mobile);
  return h0_memo_.insert(d, std::move(value));
}

BigInt ConeOracle::h1(const DivClass& d) const {
  BigInt value = h0(d) + h0(-d) - lattice_.euler_char(d);
  if (value < 0) {
    throw ConsistencyError("h^1(" + d.to_string() + ") computed negative: " + value.get_str());
  }
  return value;
}

CohomologyProfile ConeOracle::cohomology(const DivClass& d) const {
  lattice_.check_rank(d);
  CohomologyProfile p;
  p.fixed_part = lattice_.zero();
  p.mobile_part = lattice_.zero();
  p.effective = is_effective(d);
  if (d.is_zero()) {
    p.h0 = 1;
  } else if (p.effective) {
    Reduction r = reduce_to_nef(d);
    p.h0 = h0_of_nef(r.mobile);
    p.fixed_part = std::move(r.fixed);
    p.mobile_part = std::move(r.mobile);
    p.reduction_steps = std::move(r.steps);
    if (!p.mobile_part.is_zero() && lattice_.square(p.mobile_part) == 0) {
      auto [k, fiber] = primitive_part(p.mobile_part);
      p.elliptic_multiple = EllipticMultiple{k, fiber};
    }
  } else {
    p.h0 = 0;
  }
  p.h2 = h0(-d);
  p.h1 = p.h0 + p.h2 - lattice_.euler_char(d);
  if (p.h1 < 0) {
    throw ConsistencyError("h^1(" + d.to_string() + ") computed negative: " + p.h1.get_str());
  }
  return p;
}

ConeFlags ConeOracle::analyze(const DivClass& d) const {
  lattice_.check_rank(d);
  if (d.is_zero()) throw DomainError("analyze: the zero class is not analyzable");
  ConeFlags f;
  f.effective = is_effective(d);
  if (!f.effective) return f;

  f.nef_witness = nef_obstruction(d);
  f.nef = !f.nef_witness;
  if (!f.nef) {
    f.ample_witness = f.nef_witness;
    return f;
  }
  f.bpf_witness = bpf_obstruction(d);
  f.base_point_free = !f.bpf_witness;

  const BigInt sq = lattice_.square(d);
  if (sq > 0) {
    f.ample_witness = orthogonal_root(d);
    f.ample = !f.ample_witness;
  }
  if (sq >= 4) {
    f.very_ample_witness = very_ample_obstruction(d);
    f.very_ample = !f.very_ample_witness;
  } else {
    f.very_ample_witness = VeryAmpleObstruction{VeryAmpleObstruction::Kind::small_square, {}};
  }
  if (f.very_ample && !f.ample) {
    throw ConsistencyError("cone chain broken for " + d.to_string() + ": very ample but not ample");
  }
  return f;
}

}  // namespace k3lm
