#include "oracles.hpp"

#include <algorithm>

namespace k3lm::testing {

Signature ldl_signature(const IntMatrix& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram[i][j]);
  }
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      // Bring a nonzero diagonal entry to position k, or create one by
      // adding a row/column that pairs nontrivially with e_k.
      std::size_t swap_with = n;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[j][j] != 0) {
          swap_with = j;
          break;
        }
      }
      if (swap_with < n) {
        std::swap(a[k], a[swap_with]);
        for (auto& row : a) std::swap(row[k], row[swap_with]);
      } else {
        std::size_t partner = n;
        for (std::size_t j = k + 1; j < n; ++j) {
          if (a[k][j] != 0) {
            partner = j;
            break;
          }
        }
        if (partner == n) {
          ++sig.zero;
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) a[k][j] += a[partner][j];
        for (std::size_t j = 0; j < n; ++j) a[j][k] += a[j][partner];
      }
    }
    const Rational pivot = a[k][k];
    if (pivot > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[j][i] = a[i][j];
    }
  }
  return sig;
}

std::vector<DivClass> box_vectors(std::size_t rank, long box) {
  std::vector<DivClass> out;
  std::vector<long> v(rank, -box);
  for (;;) {
    out.emplace_back(std::vector<BigInt>(v.begin(), v.end()));
    std::size_t i = rank;
    while (i > 0 && v[i - 1] == box) {
      v[i - 1] = -box;
      --i;
    }
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

std::vector<DivClass> box_slice(const PicardLattice& lat, const DivClass& p, const BigInt& degree,
                                const BigInt& min_square, long box) {
  std::vector<DivClass> out;
  for (auto& d : box_vectors(lat.rank(), box)) {
    if (lat.intersect(d, p) == degree && lat.square(d) >= min_square) out.push_back(std::move(d));
  }
  return out;
}

BoxOracle::BoxOracle(const PicardLattice& lat, long box)
    : lat_(lat), box_(box_vectors(lat.rank(), box)) {
  for (const auto& d : box_) {
    if (lat_.square(d) == -2 && lat_.degree(d) > 0) roots_.push_back(d);
  }
}

std::vector<DivClass> BoxOracle::roots_up_to(const BigInt& cap) const {
  std::vector<DivClass> out;
  for (const auto& r : roots_) {
    if (lat_.degree(r) <= cap) out.push_back(r);
  }
  return out;
}

bool BoxOracle::effective(const DivClass& d) {
  if (d.is_zero()) return true;
  const BigInt deg = lat_.degree(d);
  if (deg <= 0) return false;
  if (lat_.square(d) >= 0) return true;
  if (auto it = memo_.find(d); it != memo_.end()) return it->second;
  bool result = false;
  for (const auto& r : roots_) {
    if (lat_.degree(r) <= deg && effective(d - r)) {
      result = true;
      break;
    }
  }
  memo_[d] = result;
  return result;
}

bool BoxOracle::irreducible_by_decomposition(const DivClass& gamma) {
  const BigInt deg = lat_.degree(gamma);
  for (const auto& a : box_) {
    const BigInt ad = lat_.degree(a);
    if (ad <= 0 || ad >= deg) continue;
    if (effective(a) && effective(gamma - a)) return false;
  }
  return true;
}

}  // namespace k3lm::testing
