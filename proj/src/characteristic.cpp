#include "siegelchar/characteristic.hpp"

#include <cassert>
#include <ostream>

#include "siegelchar/error.hpp"

namespace siegelchar {
namespace {

void require_degree(const SymplecticMatrix& m, const Characteristic& ch) {
  if (m.degree() != ch.degree())
    throw Error(ErrorKind::DegreeMismatch, "matrix of degree " + std::to_string(m.degree()) +
                                               " with characteristic of degree " +
                                               std::to_string(ch.degree()));
}

void require_same_degree(const Characteristic& m, const Characteristic& n) {
  if (m.degree() != n.degree())
    throw Error(ErrorKind::DegreeMismatch, "characteristics of different degrees");
}

}  // namespace

Characteristic::Characteristic(IntVector prime, IntVector double_prime)
    : prime_(std::move(prime)), double_prime_(std::move(double_prime)) {
  if (prime_.size() != double_prime_.size() || prime_.empty())
    throw Error(ErrorKind::BadShape, "characteristic halves must have equal positive length");
}

Characteristic Characteristic::zero(std::size_t g) {
  return Characteristic(IntVector(g, Integer(0)), IntVector(g, Integer(0)));
}

Characteristic Characteristic::from_flat(const IntVector& flat) {
  if (flat.empty() || flat.size() % 2 != 0)
    throw Error(ErrorKind::BadShape, "characteristic needs 2g entries, got " +
                                         std::to_string(flat.size()));
  const auto half = static_cast<std::ptrdiff_t>(flat.size() / 2);
  return Characteristic(IntVector(flat.begin(), flat.begin() + half),
                        IntVector(flat.begin() + half, flat.end()));
}

Characteristic Characteristic::from_flat(std::initializer_list<long> flat) {
  IntVector v;
  for (long x : flat) v.emplace_back(x);
  return from_flat(v);
}

IntVector Characteristic::flat() const {
  IntVector out = prime_;
  out.insert(out.end(), double_prime_.begin(), double_prime_.end());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Characteristic& m) {
  os << '(';
  const auto flat = m.flat();
  for (std::size_t i = 0; i < flat.size(); ++i) os << (i ? "," : "") << flat[i];
  return os << ')';
}

Parity parity(const Characteristic& m) {
  return residue(dot(m.prime(), m.double_prime()), 2) == 0 ? Parity::Even : Parity::Odd;
}

Characteristic reduce_mod2(const Characteristic& m) {
  auto reduce = [](IntVector v) {
    for (auto& x : v) x = residue(x, 2);
    return v;
  };
  return Characteristic(reduce(m.prime()), reduce(m.double_prime()));
}

bool congruent_mod2(const Characteristic& m, const Characteristic& n) {
  return reduce_mod2(m) == reduce_mod2(n);
}

std::vector<Characteristic> enumerate_all_mod2(std::size_t g) {
  if (g == 0 || g > 16) throw Error(ErrorKind::BadShape, "degree out of range for enumeration");
  const std::size_t bits = 2 * g;
  std::vector<Characteristic> out;
  out.reserve(std::size_t{1} << bits);
  for (std::size_t code = 0; code < (std::size_t{1} << bits); ++code) {
    IntVector flat(bits);
    // most significant bit first gives lexicographic order of (m', m'')
    for (std::size_t k = 0; k < bits; ++k) flat[k] = (code >> (bits - 1 - k)) & 1U;
    out.push_back(Characteristic::from_flat(flat));
  }
  return out;
}

std::vector<Characteristic> enumerate_even_mod2(std::size_t g) {
  std::vector<Characteristic> out;
  for (auto& m : enumerate_all_mod2(g))
    if (is_even(m)) out.push_back(std::move(m));
  return out;
}

Characteristic act(const SymplecticMatrix& m, const Characteristic& ch) {
  require_degree(m, ch);
  const IntVector cd0 = diag_vector(m.c() * m.d().transpose());
  const IntVector ab0 = diag_vector(m.a() * m.b().transpose());
  IntVector top = m.d() * ch.prime() - m.c() * ch.double_prime() + cd0;
  IntVector bottom = m.a() * ch.double_prime() - m.b() * ch.prime() + ab0;
  return Characteristic(std::move(top), std::move(bottom));
}

Characteristic solve_preimage(const SymplecticMatrix& m, const Characteristic& ch) {
  require_degree(m, ch);
  const IntVector cd0 = diag_vector(m.c() * m.d().transpose());
  const IntVector ab0 = diag_vector(m.a() * m.b().transpose());
  const IntMatrix at = m.a().transpose();
  const IntMatrix bt = m.b().transpose();
  const IntMatrix ct = m.c().transpose();
  const IntMatrix dt = m.d().transpose();
  IntVector top = at * ch.prime() + ct * ch.double_prime() - at * cd0 - ct * ab0;
  IntVector bottom = bt * ch.prime() + dt * ch.double_prime() - bt * cd0 - dt * ab0;
  Characteristic n(std::move(top), std::move(bottom));
  assert(act(m, n) == ch);
  return n;
}

Characteristic delta(const Characteristic& m, const Characteristic& n) {
  require_same_degree(m, n);
  auto halve = [](const IntVector& diff) {
    IntVector out(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
      if (residue(diff[i], 2) != 0)
        throw Error(ErrorKind::ParityMismatch,
                    "characteristics differ by an odd amount; the matrix is not in Gamma(2)");
      mpz_divexact_ui(out[i].get_mpz_t(), diff[i].get_mpz_t(), 2);
    }
    return out;
  };
  return Characteristic(halve(n.prime() - m.prime()), halve(n.double_prime() - m.double_prime()));
}

int sign_shift_exponent(const Characteristic& m, const Characteristic& n) {
  require_same_degree(m, n);
  return static_cast<int>(residue(dot(m.prime(), n.double_prime()), 2));
}

}  // namespace siegelchar
