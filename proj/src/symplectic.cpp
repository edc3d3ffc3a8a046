#include "siegelchar/symplectic.hpp"

#include <sstream>

#include "siegelchar/error.hpp"

namespace siegelchar {
namespace {

std::string describe(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

// Returns an empty string when the relations hold, otherwise the first failure.
std::string symplectic_failure(const IntMatrix& e) {
  if (!e.is_square() || e.rows() == 0 || e.rows() % 2 != 0) return "shape";
  const std::size_t g = e.rows() / 2;
  const IntMatrix a = e.block(0, 0, g, g);
  const IntMatrix b = e.block(0, g, g, g);
  const IntMatrix c = e.block(g, 0, g, g);
  const IntMatrix d = e.block(g, g, g, g);
  if (!(a * d.transpose() - b * c.transpose()).is_identity()) return "a d^t - b c^t != I";
  if (!(a * b.transpose()).is_symmetric()) return "a b^t not symmetric";
  if (!(c * d.transpose()).is_symmetric()) return "c d^t not symmetric";
  return {};
}

}  // namespace

SymplecticMatrix::SymplecticMatrix() : SymplecticMatrix(IntMatrix::identity(2)) {}

SymplecticMatrix::SymplecticMatrix(IntMatrix entries)
    : g_(entries.rows() / 2),
      entries_(std::move(entries)),
      a_(entries_.block(0, 0, g_, g_)),
      b_(entries_.block(0, g_, g_, g_)),
      c_(entries_.block(g_, 0, g_, g_)),
      d_(entries_.block(g_, g_, g_, g_)) {}

SymplecticMatrix SymplecticMatrix::identity(std::size_t g) {
  if (g == 0) throw Error(ErrorKind::BadShape, "degree must be positive");
  return SymplecticMatrix(IntMatrix::identity(2 * g));
}

SymplecticMatrix make_matrix(IntMatrix entries) {
  if (!entries.is_square() || entries.rows() == 0 || entries.rows() % 2 != 0) {
    throw Error(ErrorKind::BadShape, "expected a non-empty square matrix of even dimension, got " +
                                         std::to_string(entries.rows()) + "x" +
                                         std::to_string(entries.cols()));
  }
  if (auto failure = symplectic_failure(entries); !failure.empty())
    throw Error(ErrorKind::NotSymplectic, failure + " for " + describe(entries));
  return SymplecticMatrix(std::move(entries));
}

bool is_symplectic(const IntMatrix& entries) { return symplectic_failure(entries).empty(); }

DiagonalVector diag_vector(const IntMatrix& s) {
  if (!s.is_square()) throw Error(ErrorKind::BadShape, "diagonal vector needs a square matrix");
  DiagonalVector out(s.rows());
  for (std::size_t i = 0; i < s.rows(); ++i) out[i] = s(i, i);
  return out;
}

SymplecticMatrix multiply(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs) {
  if (lhs.degree() != rhs.degree())
    throw Error(ErrorKind::DegreeMismatch, "cannot multiply degree " +
                                               std::to_string(lhs.degree()) + " by degree " +
                                               std::to_string(rhs.degree()));
  return make_matrix(lhs.entries() * rhs.entries());
}

SymplecticMatrix operator*(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs) {
  return multiply(lhs, rhs);
}

SymplecticMatrix inverse(const SymplecticMatrix& m) {
  const std::size_t g = m.degree();
  IntMatrix inv(2 * g, 2 * g);
  inv.set_block(0, 0, m.d().transpose());
  inv.set_block(0, g, -m.b().transpose());
  inv.set_block(g, 0, -m.c().transpose());
  inv.set_block(g, g, m.a().transpose());
  return make_matrix(std::move(inv));
}

SymplecticMatrix power(const SymplecticMatrix& m, long exponent) {
  SymplecticMatrix base = exponent < 0 ? inverse(m) : m;
  unsigned long n = exponent < 0 ? -static_cast<unsigned long>(exponent)
                                 : static_cast<unsigned long>(exponent);
  SymplecticMatrix result = SymplecticMatrix::identity(m.degree());
  while (n != 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

bool is_level2(const SymplecticMatrix& m) { return m.entries().congruent_to_identity(2); }

bool is_level4(const SymplecticMatrix& m) { return m.entries().congruent_to_identity(4); }

bool is_igusa48(const SymplecticMatrix& m) {
  if (!is_level4(m)) return false;
  for (const auto& x : diag_vector(m.a() * m.b().transpose()))
    if (residue(x, 8) != 0) return false;
  for (const auto& x : diag_vector(m.c() * m.d().transpose()))
    if (residue(x, 8) != 0) return false;
  return true;
}

bool is_igusa48_up_to_sign(const SymplecticMatrix& m) {
  return is_igusa48(m) || is_igusa48(make_matrix(-m.entries()));
}

char to_char(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::A: return 'A';
    case GeneratorKind::B: return 'B';
    case GeneratorKind::C: return 'C';
  }
  return '?';
}

GeneratorKind generator_kind_from_char(char c) {
  switch (c) {
    case 'A': return GeneratorKind::A;
    case 'B': return GeneratorKind::B;
    case 'C': return GeneratorKind::C;
    default: throw Error(ErrorKind::Parse, std::string("unknown generator kind '") + c + "'");
  }
}

void validate_indices(GeneratorKind kind, int i, int j, std::size_t g) {
  const int n = static_cast<int>(g);
  const bool in_range = i >= 1 && j >= 1 && i <= n && j <= n;
  const bool ordered = kind == GeneratorKind::A || i <= j;
  if (g == 0 || !in_range || !ordered) {
    throw Error(ErrorKind::IndexOutOfRange, generator_name(kind, i, j) +
                                                " is not a generator of degree " +
                                                std::to_string(g));
  }
}

void validate(const GeneratorWord& word) {
  for (const auto& letter : word.letters) validate_indices(letter.kind, letter.i, letter.j, word.g);
}

SymplecticMatrix generator(GeneratorKind kind, int i, int j, std::size_t g) {
  validate_indices(kind, i, j, g);
  const std::size_t r = static_cast<std::size_t>(i - 1);
  const std::size_t s = static_cast<std::size_t>(j - 1);
  IntMatrix e = IntMatrix::identity(2 * g);
  switch (kind) {
    case GeneratorKind::A:
      if (r == s) {
        e(r, r) = -1;
        e(g + r, g + r) = -1;
      } else {
        // a = I + 2E_ij, d = a^-t = I - 2E_ji
        e(r, s) = 2;
        e(g + s, g + r) = -2;
      }
      break;
    case GeneratorKind::B:
      e(r, g + s) = 2;
      e(s, g + r) = 2;
      break;
    case GeneratorKind::C:
      e(g + r, s) = 2;
      e(g + s, r) = 2;
      break;
  }
  return make_matrix(std::move(e));
}

std::string generator_name(GeneratorKind kind, int i, int j) {
  std::string name(1, to_char(kind));
  if (i < 10 && j < 10 && i >= 0 && j >= 0)
    return name + std::to_string(i) + std::to_string(j);
  return name + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<Letter> generator_alphabet(std::size_t g) {
  std::vector<Letter> out;
  const int n = static_cast<int>(g);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back({GeneratorKind::A, i, j, 1});
  for (auto kind : {GeneratorKind::B, GeneratorKind::C})
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) out.push_back({kind, i, j, 1});
  return out;
}

SymplecticMatrix word_to_matrix(const GeneratorWord& word) {
  validate(word);
  SymplecticMatrix m = SymplecticMatrix::identity(word.g);
  for (const auto& letter : word.letters) {
    if (letter.exponent == 0) continue;
    m = m * power(generator(letter.kind, letter.i, letter.j, word.g), letter.exponent);
  }
  return m;
}

std::uint64_t draw_below(Engine& engine, std::uint64_t bound) { return engine() % bound; }

GeneratorWord random_word(std::size_t g, std::size_t length, Engine& engine) {
  if (g == 0) throw Error(ErrorKind::BadShape, "degree must be positive");
  const auto alphabet = generator_alphabet(g);
  GeneratorWord word{g, {}};
  word.letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    Letter letter = alphabet[draw_below(engine, alphabet.size())];
    letter.exponent = (engine() & 1U) ? 1 : -1;
    word.letters.push_back(letter);
  }
  return word;
}

GeneratorWord random_word(std::size_t g, std::size_t length, std::uint64_t seed) {
  Engine engine(seed);
  return random_word(g, length, engine);
}

SymplecticMatrix commutator(const SymplecticMatrix& m1, const SymplecticMatrix& m2) {
  if (m1.degree() != m2.degree())
    throw Error(ErrorKind::DegreeMismatch, "commutator of different degrees");
  return m1 * m2 * inverse(m1) * inverse(m2);
}

SymplecticMatrix random_igusa48(std::size_t g, Engine& engine) {
  if (g == 0) throw Error(ErrorKind::BadShape, "degree must be positive");
  const auto alphabet = generator_alphabet(g);
  SymplecticMatrix m = SymplecticMatrix::identity(g);
  const std::size_t factors = 2 + draw_below(engine, 3);
  for (std::size_t k = 0; k < factors; ++k) {
    switch (draw_below(engine, 3)) {
      case 0: {
        const auto w1 = random_word(g, 1 + draw_below(engine, 3), engine);
        const auto w2 = random_word(g, 1 + draw_below(engine, 3), engine);
        m = m * commutator(word_to_matrix(w1), word_to_matrix(w2));
        break;
      }
      default: {
        const Letter& letter = alphabet[draw_below(engine, alphabet.size())];
        const long sign = (engine() & 1U) ? 1 : -1;
        const long e = letter.kind == GeneratorKind::A ? 2 : 4;
        m = m * power(generator(letter.kind, letter.i, letter.j, g), sign * e);
        break;
      }
    }
  }
  if (!is_igusa48(m)) throw std::logic_error("random_igusa48 produced an element outside Gamma(4,8)");
  return m;
}

SymplecticMatrix random_igusa48(std::size_t g, std::uint64_t seed) {
  Engine engine(seed);
  return random_igusa48(g, engine);
}

}  // namespace siegelchar
