#include "siegelchar/character.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "siegelchar/error.hpp"

namespace siegelchar {
namespace {

void require_level2(const SymplecticMatrix& mat) {
  if (!is_level2(mat)) throw Error(ErrorKind::NotLevel2, "matrix not ≡ I mod 2");
}

void require_degree(const Characteristic& m, const SymplecticMatrix& mat) {
  if (m.degree() != mat.degree())
    throw Error(ErrorKind::DegreeMismatch, "characteristic of degree " +
                                               std::to_string(m.degree()) +
                                               " with matrix of degree " +
                                               std::to_string(mat.degree()));
}

// x^t s y
Integer bilinear(const IntVector& x, const IntMatrix& s, const IntVector& y) {
  return dot(x, s * y);
}

Characteristic unit(std::size_t g, std::initializer_list<std::size_t> prime_ones,
                    std::initializer_list<std::size_t> double_prime_ones) {
  Characteristic zero = Characteristic::zero(g);
  IntVector prime = zero.prime();
  IntVector double_prime = zero.double_prime();
  for (auto i : prime_ones) prime[i] += 1;
  for (auto i : double_prime_ones) double_prime[i] += 1;
  return Characteristic(std::move(prime), std::move(double_prime));
}

int mod(int x, int n) { return ((x % n) + n) % n; }

}  // namespace

EighthRoot EighthRoot::sign(const Integer& x) {
  return EighthRoot(4 * static_cast<long>(residue(x, 2)));
}

EighthRoot EighthRoot::minus_quarter(const Integer& y) {
  return EighthRoot(-2 * static_cast<long>(residue(y, 4)));
}

std::complex<double> EighthRoot::value() const {
  // exact on the axes, cos/sin of odd multiples of pi/4 otherwise
  static constexpr double h = std::numbers::sqrt2 / 2;
  static constexpr std::array<std::pair<double, double>, 8> table{{
      {1, 0}, {h, h}, {0, 1}, {-h, h}, {-1, 0}, {-h, -h}, {0, -1}, {h, -h}}};
  return {table[k_].first, table[k_].second};
}

std::string EighthRoot::name() const {
  static const std::array<const char*, 8> names{"1",  "ζ₈",  "i",  "iζ₈",
                                                "−1", "−ζ₈", "−i", "−iζ₈"};
  return names[k_];
}

std::string EighthRoot::formula() const { return "e(" + std::to_string(k_) + "/8)"; }

RationalMod1 RationalMod1::from_eighths(const Integer& eighths) {
  return RationalMod1(static_cast<long>(residue(eighths, 8)));
}

std::string RationalMod1::to_string() const { return std::to_string(t_) + "/8"; }

Integer phi_full_numerator(const Characteristic& m, const SymplecticMatrix& mat) {
  require_degree(m, mat);
  const auto& mp = m.prime();
  const auto& mpp = m.double_prime();
  const IntMatrix bt = mat.b().transpose();
  const IntVector ab0 = diag_vector(mat.a() * bt);
  Integer n = bilinear(mp, bt * mat.d(), mp);
  n += bilinear(mpp, mat.a().transpose() * mat.c(), mpp);
  n -= 2 * bilinear(mp, bt * mat.c(), mpp);
  n -= 2 * dot(ab0, mat.d() * mp - mat.c() * mpp);
  return n;
}

RationalMod1 phi_full(const Characteristic& m, const SymplecticMatrix& mat) {
  return RationalMod1::from_eighths(-phi_full_numerator(m, mat));
}

Integer phi_level2_numerator(const Characteristic& m, const SymplecticMatrix& mat) {
  require_level2(mat);
  require_degree(m, mat);
  const auto& mp = m.prime();
  const auto& mpp = m.double_prime();
  const IntMatrix bt = mat.b().transpose();
  const IntVector ab0 = diag_vector(mat.a() * bt);
  Integer n = bilinear(mp, bt * mat.d(), mp);
  n += bilinear(mpp, mat.a().transpose() * mat.c(), mpp);
  n -= 2 * dot(ab0, mat.d() * mp);
  return n;
}

RationalMod1 phi_level2(const Characteristic& m, const SymplecticMatrix& mat) {
  return RationalMod1::from_eighths(-phi_level2_numerator(m, mat));
}

ChiBreakdown chi_breakdown(const Characteristic& m, const SymplecticMatrix& mat) {
  require_level2(mat);
  require_degree(m, mat);
  Characteristic n = solve_preimage(mat, m);
  Characteristic d = delta(m, n);
  const RationalMod1 phi = phi_level2(m, mat);
  const int delta_sign = static_cast<int>(residue(dot(m.prime(), d.double_prime()), 2));
  const EighthRoot value = phi.exp() * EighthRoot(4 * delta_sign);
  return {std::move(n), std::move(d), phi, delta_sign, value};
}

EighthRoot chi(const Characteristic& m, const SymplecticMatrix& mat) {
  return chi_breakdown(m, mat).value;
}

EighthRoot chi_generator(const Characteristic& m, GeneratorKind kind, int i, int j) {
  validate_indices(kind, i, j, m.degree());
  const auto& mp = m.prime();
  const auto& mpp = m.double_prime();
  const std::size_t r = static_cast<std::size_t>(i - 1);
  const std::size_t s = static_cast<std::size_t>(j - 1);
  switch (kind) {
    case GeneratorKind::A:
      return EighthRoot::sign(mp[r] * mpp[s]);
    case GeneratorKind::B:
      if (r == s) return EighthRoot::sign(mp[r]) * EighthRoot::minus_quarter(mp[r] * mp[r]);
      return EighthRoot::sign(mp[r] * mp[s]);
    case GeneratorKind::C:
      if (r == s) return EighthRoot::minus_quarter(mpp[r] * mpp[r]);
      return EighthRoot::sign(mpp[r] * mpp[s]);
  }
  return EighthRoot::one();
}

EighthRoot chi_word(const Characteristic& m, const GeneratorWord& word) {
  validate(word);
  if (m.degree() != word.g)
    throw Error(ErrorKind::DegreeMismatch, "characteristic and word have different degrees");
  EighthRoot value = EighthRoot::one();
  for (const auto& letter : word.letters)
    value *= chi_generator(m, letter.kind, letter.i, letter.j).pow(letter.exponent);
  return value;
}

AbelianExponents AbelianExponents::zero(std::size_t g) {
  const std::vector<std::vector<int>> square(g, std::vector<int>(g, 0));
  return {g, square, std::vector<int>(g, 0), square, std::vector<int>(g, 0), square};
}

void AbelianExponents::normalize() {
  for (std::size_t i = 0; i < g; ++i) {
    q_diag[i] = mod(q_diag[i], 4);
    r_diag[i] = mod(r_diag[i], 4);
    for (std::size_t j = 0; j < g; ++j) {
      p[i][j] = mod(p[i][j], 2);
      q_off[i][j] = j > i ? mod(q_off[i][j], 2) : 0;
      r_off[i][j] = j > i ? mod(r_off[i][j], 2) : 0;
    }
  }
}

EighthRoot theorem34_eval(const Characteristic& m, const AbelianExponents& e) {
  if (m.degree() != e.g)
    throw Error(ErrorKind::DegreeMismatch, "characteristic and exponents have different degrees");
  const auto& mp = m.prime();
  const auto& mpp = m.double_prime();
  Integer a = 0;
  Integer b = 0;
  for (std::size_t i = 0; i < e.g; ++i) {
    for (std::size_t j = 0; j < e.g; ++j) a += e.p[i][j] * mp[i] * mpp[j];
    a += e.q_diag[i] * mp[i] * mp[i];
    for (std::size_t j = i + 1; j < e.g; ++j) {
      a += e.q_off[i][j] * mp[i] * mp[j];
      a += e.r_off[i][j] * mpp[i] * mpp[j];
    }
    b += e.q_diag[i] * mp[i] * mp[i] + e.r_diag[i] * mpp[i] * mpp[i];
  }
  return EighthRoot::sign(a) * EighthRoot::minus_quarter(b);
}

AbelianExponents extract_abelian_exponents(const SymplecticMatrix& mat) {
  require_level2(mat);
  const std::size_t g = mat.degree();
  AbelianExponents e = AbelianExponents::zero(g);
  std::vector<Characteristic> probes;

  auto probe = [&](Characteristic m) {
    const int k = chi(m, mat).exponent();
    probes.push_back(std::move(m));
    return k;
  };
  auto halve = [](int k, const char* what) {
    if (k % 2 != 0)
      throw Error(ErrorKind::InterpolationInconsistent,
                  std::string("odd exponent at the ") + what + " probe");
    return k / 2;
  };
  auto as_sign = [](int residual, const char* what) {
    const int r = mod(residual, 8);
    if (r != 0 && r != 4)
      throw Error(ErrorKind::InterpolationInconsistent,
                  std::string("residual e(") + std::to_string(r) + "/8) at the " + what +
                      " probe is not a sign");
    return r / 4;
  };

  for (std::size_t i = 0; i < g; ++i) {
    e.q_diag[i] = mod(halve(probe(unit(g, {i}, {})), "q_ii"), 4);
    e.r_diag[i] = mod(-halve(probe(unit(g, {}, {i})), "r_ii"), 4);
  }
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      const int k = probe(unit(g, {i}, {j}));
      e.p[i][j] = as_sign(k - 2 * e.q_diag[i] + 2 * e.r_diag[j], "p_ij");
    }
    for (std::size_t j = i + 1; j < g; ++j) {
      const int kq = probe(unit(g, {i, j}, {}));
      e.q_off[i][j] = as_sign(kq - 2 * e.q_diag[i] - 2 * e.q_diag[j], "q_ij");
      const int kr = probe(unit(g, {}, {i, j}));
      e.r_off[i][j] = as_sign(kr + 2 * e.r_diag[i] + 2 * e.r_diag[j], "r_ij");
    }
  }

  for (const auto& m : probes) {
    if (theorem34_eval(m, e) != chi(m, mat))
      throw Error(ErrorKind::InterpolationInconsistent, "interpolated exponents miss a probe");
  }
  return e;
}

EighthRoot igusa_product_character(const Characteristic& m, const Characteristic& n,
                                   const SymplecticMatrix& mat) {
  return chi(m, mat) * chi(n, mat);
}

bool is_chi_constant_over_even(const SymplecticMatrix& mat) {
  require_level2(mat);
  const auto evens = enumerate_even_mod2(mat.degree());
  const EighthRoot first = chi(evens.front(), mat);
  for (std::size_t k = 1; k < evens.size(); ++k)
    if (chi(evens[k], mat) != first) return false;
  return true;
}

}  // namespace siegelchar
