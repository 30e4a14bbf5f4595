#include "k3lm/lattice.hpp"

#include "k3lm/enumeration.hpp"
#include "k3lm/errors.hpp"

namespace k3lm {

std::vector<BigInt> characteristic_polynomial(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  IntMatrix am(n, std::vector<BigInt>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        am[i][j] = s;
      }
      am[i][i] += c[n - k + 1];
    }
    m.swap(am);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), k);
    c[n - k] = -q;
  }
  return c;
}

namespace {

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Signature signature_of(const IntMatrix& symmetric) {
  const auto c = characteristic_polynomial(symmetric);
  Signature sig;
  while (sig.zero < c.size() && c[sig.zero] == 0) ++sig.zero;
  std::vector<int> pos, neg;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int s = sgn(c[i]);
    pos.push_back(s);
    neg.push_back((i % 2 == 1) ? -s : s);
  }
  sig.positive = sign_changes(pos);
  sig.negative = sign_changes(neg);
  return sig;
}

std::pair<BigInt, DivClass> primitive_part(const DivClass& d) {
  if (d.is_zero()) throw DomainError("primitive_part: zero class has no primitive part");
  BigInt g = 0;
  for (const auto& c : d.coords()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  std::vector<BigInt> f;
  f.reserve(d.rank());
  for (const auto& c : d.coords()) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    f.push_back(std::move(q));
  }
  return {g, DivClass(std::move(f))};
}

PicardLattice PicardLattice::create(IntMatrix gram, DivClass polarization,
                                    std::vector<std::string> names) {
  const std::size_t n = gram.size();
  if (n == 0) throw LatticeError("gram matrix is empty");
  for (const auto& row : gram) {
    if (row.size() != n) throw LatticeError("gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram[i][j] != gram[j][i]) throw LatticeError("gram matrix is not symmetric");
    }
    if (!mpz_even_p(gram[i][i].get_mpz_t())) {
      throw LatticeError("gram matrix has odd diagonal entry at index " + std::to_string(i) +
                         " (lattice must be even)");
    }
  }
  if (polarization.rank() != n) {
    throw LatticeError("polarization has length " + std::to_string(polarization.rank()) +
                       ", expected " + std::to_string(n));
  }
  if (!names.empty() && names.size() != n) {
    throw LatticeError("names has " + std::to_string(names.size()) + " entries, expected " +
                       std::to_string(n));
  }
  const Signature sig = signature_of(gram);
  if (sig.zero != 0 || sig.positive != 1) {
    throw LatticeError("gram matrix has signature (" + std::to_string(sig.positive) + "," +
                       std::to_string(sig.negative) + ") with " + std::to_string(sig.zero) +
                       " zero eigenvalues; expected (1," + std::to_string(n - 1) + ")");
  }

  PicardLattice lattice(std::move(gram), std::move(polarization), std::move(names));
  const DivClass& h = lattice.polarization_;
  if (lattice.square(h) <= 0) throw LatticeError("polarization is not ample: H^2 <= 0");
  SliceEnumerator perp(lattice, h);
  for (const auto& d : perp.enumerate(0, -2)) {
    if (lattice.square(d) == -2) {
      throw LatticeError("polarization is not ample: (-2)-class " + d.to_string() +
                         " is orthogonal to H");
    }
  }
  return lattice;
}

void PicardLattice::check_rank(const DivClass& d) const {
  if (d.rank() != rank()) {
    throw InputError("class " + d.to_string() + " has length " + std::to_string(d.rank()) +
                     ", lattice rank is " + std::to_string(rank()));
  }
}

std::vector<BigInt> PicardLattice::pairing_row(const DivClass& v) const {
  check_rank(v);
  std::vector<BigInt> row(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) row[i] += gram_[i][j] * v[j];
  }
  return row;
}

BigInt PicardLattice::intersect(const DivClass& a, const DivClass& b) const {
  check_rank(a);
  check_rank(b);
  BigInt s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    BigInt row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += gram_[i][j] * b[j];
    s += a[i] * row;
  }
  return s;
}

BigInt PicardLattice::euler_char(const DivClass& d) const {
  BigInt sq = square(d);
  BigInt half;
  mpz_divexact_ui(half.get_mpz_t(), sq.get_mpz_t(), 2);
  return half + 2;
}

BigInt PicardLattice::genus(const DivClass& d) const {
  BigInt sq = square(d);
  if (sq < -2) throw DomainError("genus: D^2 = " + sq.get_str() + " < -2");
  BigInt half;
  mpz_divexact_ui(half.get_mpz_t(), sq.get_mpz_t(), 2);
  return half + 1;
}

}  // namespace k3lm
