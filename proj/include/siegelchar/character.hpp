#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "siegelchar/characteristic.hpp"
#include "siegelchar/integer_matrix.hpp"
#include "siegelchar/symplectic.hpp"

namespace siegelchar {

/// An element e(k/8) of the eighth roots of unity, stored as k mod 8.
///
/// Additive encoding used throughout: (-1)^x contributes 4x and e(-y/4)
/// contributes -2y to the exponent.
class EighthRoot {
 public:
  constexpr EighthRoot() = default;
  constexpr explicit EighthRoot(long k) : k_(static_cast<int>(((k % 8) + 8) % 8)) {}

  static constexpr EighthRoot one() { return EighthRoot(0); }
  /// (-1)^x
  static EighthRoot sign(const Integer& x);
  /// e(-y/4)
  static EighthRoot minus_quarter(const Integer& y);

  constexpr int exponent() const noexcept { return k_; }
  constexpr bool is_one() const noexcept { return k_ == 0; }

  constexpr EighthRoot inverse() const { return EighthRoot(-k_); }
  constexpr EighthRoot pow(long n) const { return EighthRoot((static_cast<long>(k_) * (n % 8)) % 8); }

  std::complex<double> value() const;
  /// One of 1, ζ₈, i, iζ₈, −1, −ζ₈, −i, −iζ₈.
  std::string name() const;
  /// "e(k/8)"
  std::string formula() const;

  friend constexpr EighthRoot operator*(EighthRoot lhs, EighthRoot rhs) {
    return EighthRoot(lhs.k_ + rhs.k_);
  }
  EighthRoot& operator*=(EighthRoot rhs) { return *this = *this * rhs; }
  friend constexpr bool operator==(EighthRoot, EighthRoot) = default;

 private:
  int k_ = 0;
};

/// A class t/8 in (1/8)Z / Z.
class RationalMod1 {
 public:
  constexpr RationalMod1() = default;
  constexpr explicit RationalMod1(long eighths) : t_(static_cast<int>(((eighths % 8) + 8) % 8)) {}
  static RationalMod1 from_eighths(const Integer& eighths);

  constexpr int eighths() const noexcept { return t_; }
  /// e(t/8)
  constexpr EighthRoot exp() const { return EighthRoot(t_); }
  /// "t/8", unreduced.
  std::string to_string() const;

  friend constexpr bool operator==(RationalMod1, RationalMod1) = default;

 private:
  int t_ = 0;
};

/// Integer N with Phi_m(M) = -N/8 for the full transformation phase, valid on
/// all of Sp(g, Z).
Integer phi_full_numerator(const Characteristic& m, const SymplecticMatrix& mat);
RationalMod1 phi_full(const Characteristic& m, const SymplecticMatrix& mat);

/// The simplified phase, which drops the -2 m'^t b^t c m'' and c m'' terms that
/// vanish mod 8 on Gamma_g(2). Throws NotLevel2 elsewhere.
Integer phi_level2_numerator(const Characteristic& m, const SymplecticMatrix& mat);
RationalMod1 phi_level2(const Characteristic& m, const SymplecticMatrix& mat);

/// Intermediate quantities of the character evaluation, kept for reporting.
struct ChiBreakdown {
  Characteristic preimage;   // n with M o n = m
  Characteristic delta;      // (n - m) / 2
  RationalMod1 phi;          // Phi_m(M) mod 1
  int delta_sign = 0;        // m'^t Delta'' mod 2
  EighthRoot value;          // e(Phi) (-1)^{delta_sign}
};

/// chi_m(M) = e(Phi_m(M)) (-1)^{m'^t Delta''}. Defined for every m in Z^{2g},
/// odd ones included.
ChiBreakdown chi_breakdown(const Characteristic& m, const SymplecticMatrix& mat);
EighthRoot chi(const Characteristic& m, const SymplecticMatrix& mat);

/// Closed-form value on a single generator.
EighthRoot chi_generator(const Characteristic& m, GeneratorKind kind, int i, int j);

EighthRoot chi_word(const Characteristic& m, const GeneratorWord& word);

/// Generator multiplicities modulo the commutator subgroup, reduced to the
/// moduli the character sees: p, off-diagonal q and r mod 2, diagonal q and r
/// mod 4. The off-diagonal tables are g x g with only i < j populated.
struct AbelianExponents {
  std::size_t g = 1;
  std::vector<std::vector<int>> p;
  std::vector<int> q_diag;
  std::vector<std::vector<int>> q_off;
  std::vector<int> r_diag;
  std::vector<std::vector<int>> r_off;

  static AbelianExponents zero(std::size_t g);
  /// Reduces every entry to its stored modulus.
  void normalize();

  friend bool operator==(const AbelianExponents&, const AbelianExponents&) = default;
};

/// (-1)^A e(-B/4), with A and B the quadratic expressions in m built from the
/// exponents.
EighthRoot theorem34_eval(const Characteristic& m, const AbelianExponents& e);

/// Recovers the exponents by evaluating chi at the probe characteristics
/// (e_i;0), (0;e_i), (e_i;e_j), (e_i+e_j;0), (0;e_i+e_j). Throws
/// InterpolationInconsistent if a residual that must be a sign is not.
AbelianExponents extract_abelian_exponents(const SymplecticMatrix& mat);

/// chi_m(M) chi_n(M), the character attached to theta_m theta_n.
EighthRoot igusa_product_character(const Characteristic& m, const Characteristic& n,
                                   const SymplecticMatrix& mat);

/// True iff chi(., M) is constant on the even characteristics mod 2.
bool is_chi_constant_over_even(const SymplecticMatrix& mat);

}  // namespace siegelchar
