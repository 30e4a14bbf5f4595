#include "k3lm/clifford.hpp"

#include <algorithm>

#include "k3lm/errors.hpp"

namespace k3lm {

namespace {

void require_bpf_big(const ConeOracle& oracle, const DivClass& l, const char* op) {
  const auto& lat = oracle.lattice();
  lat.check_rank(l);
  if (l.is_zero() || !oracle.is_effective(l)) {
    throw DomainError(std::string(op) + ": " + l.to_string() + " is not a nonzero effective class");
  }
  if (lat.square(l) <= 0) throw DomainError(std::string(op) + ": " + l.to_string() + " is not big");
  if (oracle.nef_obstruction(l) || !oracle.is_base_point_free(l)) {
    throw DomainError(std::string(op) + ": " + l.to_string() + " is not base point free");
  }
}

}  // namespace

std::vector<DivClass> enumerate_a_set(const ConeOracle& oracle, const DivClass& l) {
  require_bpf_big(oracle, l, "enumerate_A");
  const BigInt deg = oracle.lattice().degree(l);
  std::vector<DivClass> out;
  // h^0(D) >= 2 and h^0(L - D) >= 2 make both classes nonzero and effective.
  for (BigInt a = 1; a < deg; ++a) {
    for (auto& d : oracle.effective_classes_of_degree(a)) {
      if (oracle.h0(d) >= 2 && oracle.h0(l - d) >= 2) out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

MuResult mu_of(const ConeOracle& oracle, const DivClass& l, const std::vector<DivClass>& a_set) {
  const auto& lat = oracle.lattice();
  MuResult r;
  for (const auto& d : a_set) {
    BigInt value = lat.intersect(d, l - d) - 2;
    if (!r.mu || value < *r.mu) {
      r.mu = value;
      r.minimizers.clear();
    }
    if (value == *r.mu) r.minimizers.push_back(d);
  }
  if (r.mu && *r.mu < 0) {
    throw ConsistencyError("mu(" + l.to_string() + ") = " + r.mu->get_str() + " is negative");
  }
  return r;
}

}  // namespace

MuResult mu(const ConeOracle& oracle, const DivClass& l) {
  return mu_of(oracle, l, enumerate_a_set(oracle, l));
}

CliffordReport clifford_index(const ConeOracle& oracle, const DivClass& l) {
  const auto& lat = oracle.lattice();
  CliffordReport rep;
  rep.polarization = l;
  rep.a_set = enumerate_a_set(oracle, l);
  rep.genus = lat.genus(l);
  MuResult m = mu_of(oracle, l, rep.a_set);
  rep.mu = m.mu;
  rep.a0_set = std::move(m.minimizers);

  for (const auto& d : rep.a_set) {
    if (!std::binary_search(rep.a_set.begin(), rep.a_set.end(), l - d)) {
      throw ConsistencyError("A(L) not symmetric: " + d.to_string() + " present, L-D absent");
    }
  }
  for (const auto& d : rep.a0_set) {
    auto prof = oracle.cohomology(d);
    if (prof.h1 != 0) {
      throw ConsistencyError("A^0(L) member " + d.to_string() + " has h^1 = " + prof.h1.get_str());
    }
    if (lat.intersect(l, prof.fixed_part) != 0) {
      throw ConsistencyError("A^0(L) member " + d.to_string() + " has fixed part " +
                             prof.fixed_part.to_string() + " of positive L-degree");
    }
  }

  const BigInt generic = floor_div(rep.genus - 1, 2);
  rep.cliff = (rep.mu && *rep.mu < generic) ? *rep.mu : generic;
  rep.gonality_range = {rep.cliff + 2, rep.cliff + 3};

  if (rep.cliff < generic) {
    const BigInt& c = rep.cliff;
    for (const auto& d : rep.a0_set) {
      const BigInt sq = lat.square(d);
      const BigInt dl = lat.intersect(d, l);
      if (sq < 0 || sq > c + 2 || 2 * sq > dl) continue;
      const bool equality = (sq == c + 2) || (2 * sq == dl);
      if (equality && l != 2 * d) continue;
      if (dl - sq - 2 != c) continue;
      rep.bound_witness = d;
      break;
    }
    if (!rep.bound_witness) {
      throw ConsistencyError("no D in A^0(" + l.to_string() +
                             ") satisfies 0 <= D^2 <= cliff+2 and 2D^2 <= D.L");
    }
  }
  return rep;
}

}  // namespace k3lm
