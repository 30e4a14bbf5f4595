#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "k3lm/bigint.hpp"

namespace k3lm {

/// A divisor class (line bundle) written in the lattice basis.
class DivClass {
 public:
  DivClass() = default;
  explicit DivClass(std::vector<BigInt> coords) : coords_(std::move(coords)) {}
  DivClass(std::initializer_list<long> coords);

  static DivClass zero(std::size_t rank) { return DivClass(std::vector<BigInt>(rank, 0)); }

  std::size_t rank() const { return coords_.size(); }
  std::span<const BigInt> coords() const { return coords_; }
  const BigInt& operator[](std::size_t i) const { return coords_[i]; }
  BigInt& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;

  DivClass& operator+=(const DivClass& other);
  DivClass& operator-=(const DivClass& other);
  DivClass& operator*=(const BigInt& k);

  friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
  friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
  friend DivClass operator*(const BigInt& k, DivClass a) { return a *= k; }
  friend DivClass operator*(DivClass a, const BigInt& k) { return a *= k; }
  DivClass operator-() const;

  friend bool operator==(const DivClass& a, const DivClass& b) { return a.coords_ == b.coords_; }
  /// Lexicographic on coordinates; shorter vectors first.
  friend bool operator<(const DivClass& a, const DivClass& b);

  /// "(1,-1)"
  std::string to_string() const;
  /// "1,-1", the command-line spelling.
  std::string key() const;

 private:
  std::vector<BigInt> coords_;
};

std::ostream& operator<<(std::ostream& os, const DivClass& d);

/// Parses "1,-1" (comma separated integers, optional surrounding parentheses).
DivClass parse_div_class(const std::string& text);

struct DivClassHash {
  std::size_t operator()(const DivClass& d) const;
};

}  // namespace k3lm
