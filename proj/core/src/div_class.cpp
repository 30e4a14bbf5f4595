#include "k3lm/div_class.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "k3lm/errors.hpp"

namespace k3lm {

DivClass::DivClass(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool DivClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& c) { return c == 0; });
}

DivClass& DivClass::operator+=(const DivClass& other) {
  if (other.rank() != rank()) throw InputError("class rank mismatch in addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

DivClass& DivClass::operator-=(const DivClass& other) {
  if (other.rank() != rank()) throw InputError("class rank mismatch in subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

DivClass& DivClass::operator*=(const BigInt& k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

DivClass DivClass::operator-() const {
  DivClass r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator<(const DivClass& a, const DivClass& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string DivClass::key() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += coords_[i].get_str();
  }
  return out;
}

std::string DivClass::to_string() const { return "(" + key() + ")"; }

std::ostream& operator<<(std::ostream& os, const DivClass& d) { return os << d.to_string(); }

DivClass parse_div_class(const std::string& text) {
  const auto trim = [](std::string v) {
    const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!v.empty() && is_space(v.front())) v.erase(v.begin());
    while (!v.empty() && is_space(v.back())) v.pop_back();
    return v;
  };
  std::string s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) throw InputError("empty class vector");
  if (s.back() == ',') throw InputError("trailing comma in class vector");

  std::vector<BigInt> coords;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t start = (item.size() > 1 && (item[0] == '-' || item[0] == '+')) ? 1 : 0;
    if (item.size() == start ||
        !std::all_of(item.begin() + static_cast<std::ptrdiff_t>(start), item.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InputError("not an integer in class vector: '" + item + "'");
    }
    if (item[0] == '+') item.erase(0, 1);
    coords.emplace_back(item, 10);
  }
  return DivClass(std::move(coords));
}

std::size_t DivClassHash::operator()(const DivClass& d) const {
  std::size_t h = d.rank();
  for (const auto& c : d.coords()) {
    std::size_t v = std::hash<long>{}(mpz_get_si(c.get_mpz_t())) ^ mpz_size(c.get_mpz_t());
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace k3lm
