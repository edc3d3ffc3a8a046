#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "siegelchar/integer_matrix.hpp"

namespace siegelchar {

/// Length-g vector of the diagonal coefficients of a g x g matrix, (s)_0.
using DiagonalVector = IntVector;

/// An element M = (a b; c d) of Sp(g, Z).
///
/// Instances are validated on construction: a*d^t - b*c^t = I and a*b^t,
/// c*d^t symmetric. The four g x g blocks are cached since every formula
/// downstream reads them.
class SymplecticMatrix {
 public:
  /// Identity of degree 1.
  SymplecticMatrix();

  static SymplecticMatrix identity(std::size_t g);

  std::size_t degree() const noexcept { return g_; }
  const IntMatrix& entries() const noexcept { return entries_; }

  const IntMatrix& a() const noexcept { return a_; }
  const IntMatrix& b() const noexcept { return b_; }
  const IntMatrix& c() const noexcept { return c_; }
  const IntMatrix& d() const noexcept { return d_; }

  friend bool operator==(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs) {
    return lhs.entries_ == rhs.entries_;
  }

 private:
  friend SymplecticMatrix make_matrix(IntMatrix entries);

  explicit SymplecticMatrix(IntMatrix entries);

  std::size_t g_;
  IntMatrix entries_;
  IntMatrix a_, b_, c_, d_;
};

/// Validates a 2g x 2g integer matrix. Throws BadShape on odd or non-square
/// input and NotSymplectic when a symplectic relation fails.
SymplecticMatrix make_matrix(IntMatrix entries);

/// Non-throwing symplectic test for arbitrary shapes.
bool is_symplectic(const IntMatrix& entries);

DiagonalVector diag_vector(const IntMatrix& s);

SymplecticMatrix multiply(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs);
SymplecticMatrix operator*(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs);

// M^-1 = (d^t, -b^t; -c^t, a^t)
SymplecticMatrix inverse(const SymplecticMatrix& m);
SymplecticMatrix power(const SymplecticMatrix& m, long exponent);

/// M = I mod 2, i.e. M in Gamma_g(2).
bool is_level2(const SymplecticMatrix& m);
/// M = I mod 4.
bool is_level4(const SymplecticMatrix& m);
/// Igusa's group Gamma_g(4,8): M = I mod 4 and (a b^t)_0 = (c d^t)_0 = 0 mod 8.
bool is_igusa48(const SymplecticMatrix& m);
/// M or -M lies in Gamma_g(4,8).
bool is_igusa48_up_to_sign(const SymplecticMatrix& m);

enum class GeneratorKind { A, B, C };

char to_char(GeneratorKind kind) noexcept;
GeneratorKind generator_kind_from_char(char c);

/// One letter of a word over Igusa's generators of Gamma_g(2). Indices are
/// 1-based.
struct Letter {
  GeneratorKind kind = GeneratorKind::A;
  int i = 1;
  int j = 1;
  long exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct GeneratorWord {
  std::size_t g = 1;
  std::vector<Letter> letters;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

/// Throws IndexOutOfRange unless 1 <= i, j <= g, with i <= j for B and C.
void validate_indices(GeneratorKind kind, int i, int j, std::size_t g);
void validate(const GeneratorWord& word);

/// A_ij, B_ij or C_ij of degree g.
SymplecticMatrix generator(GeneratorKind kind, int i, int j, std::size_t g);

/// Display name such as "A12" or "B11".
std::string generator_name(GeneratorKind kind, int i, int j);

/// Every valid (kind, i, j) for degree g, exponent 1; A first, then B, then C,
/// each in row-major index order.
std::vector<Letter> generator_alphabet(std::size_t g);

SymplecticMatrix word_to_matrix(const GeneratorWord& word);

/// Seeded sampling. The engine is std::mt19937_64; a letter is chosen as
/// engine() % alphabet_size and its exponent sign from the low bit of the
/// next draw, so other implementations can reproduce the stream.
using Engine = std::mt19937_64;

std::uint64_t draw_below(Engine& engine, std::uint64_t bound);

GeneratorWord random_word(std::size_t g, std::size_t length, Engine& engine);
GeneratorWord random_word(std::size_t g, std::size_t length, std::uint64_t seed);

// M1 M2 M1^-1 M2^-1
SymplecticMatrix commutator(const SymplecticMatrix& m1, const SymplecticMatrix& m2);

/// A product of commutators of random Gamma_g(2) words, fourth powers of B/C
/// generators and squares of A generators. Always satisfies is_igusa48.
SymplecticMatrix random_igusa48(std::size_t g, Engine& engine);
SymplecticMatrix random_igusa48(std::size_t g, std::uint64_t seed);

}  // namespace siegelchar
