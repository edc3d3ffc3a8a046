#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "siegelchar/integer_matrix.hpp"
#include "siegelchar/symplectic.hpp"

namespace siegelchar {

/// A theta characteristic m in Z^{2g}, split into its first half m' and its
/// last half m''. Entries are kept exact; reducing mod 2 is the caller's call
/// (see reduce_mod2), because the character formula reads the unreduced
/// preimage.
class Characteristic {
 public:
  Characteristic() : Characteristic(IntVector{0}, IntVector{0}) {}
  Characteristic(IntVector prime, IntVector double_prime);

  static Characteristic zero(std::size_t g);
  /// Splits a flat vector of length 2g as (first g ; last g).
  static Characteristic from_flat(const IntVector& flat);
  static Characteristic from_flat(std::initializer_list<long> flat);

  std::size_t degree() const noexcept { return prime_.size(); }
  const IntVector& prime() const noexcept { return prime_; }
  const IntVector& double_prime() const noexcept { return double_prime_; }
  IntVector flat() const;

  friend bool operator==(const Characteristic&, const Characteristic&) = default;

 private:
  IntVector prime_;
  IntVector double_prime_;
};

std::ostream& operator<<(std::ostream& os, const Characteristic& m);

enum class Parity { Even, Odd };

/// Even iff m'^t m'' is even.
Parity parity(const Characteristic& m);
inline bool is_even(const Characteristic& m) { return parity(m) == Parity::Even; }

/// Componentwise representative in {0, 1}.
Characteristic reduce_mod2(const Characteristic& m);
bool congruent_mod2(const Characteristic& m, const Characteristic& n);

/// All of {0,1}^{2g}, in lexicographic order of (m', m'').
std::vector<Characteristic> enumerate_all_mod2(std::size_t g);

/// The even members of enumerate_all_mod2(g); there are 2^{g-1}(2^g + 1).
std::vector<Characteristic> enumerate_even_mod2(std::size_t g);

/// M o m = (d m' - c m'' + (c d^t)_0 ; -b m' + a m'' + (a b^t)_0), exact over Z.
Characteristic act(const SymplecticMatrix& m, const Characteristic& ch);

/// The unique n with act(M, n) = ch, from the block-transpose inverse of the
/// affine map.
Characteristic solve_preimage(const SymplecticMatrix& m, const Characteristic& ch);

/// Delta = (n - m) / 2. Throws ParityMismatch when n and m differ mod 2.
Characteristic delta(const Characteristic& m, const Characteristic& n);

/// m'^t n'' mod 2; theta_{m+2n} = (-1)^{this} theta_m.
int sign_shift_exponent(const Characteristic& m, const Characteristic& n);

}  // namespace siegelchar
