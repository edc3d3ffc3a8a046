#include <gtest/gtest.h>

#include "siegelchar/character.hpp"
#include "siegelchar/error.hpp"
#include "test_support.hpp"

namespace siegelchar {
namespace {

using testing::ch;
using testing::mat;

long mod8(long x) { return ((x % 8) + 8) % 8; }

// Generator values written out from the table of closed forms:
// A_ij -> (-1)^{m'_i m''_j}, B_ii -> (-1)^{m'_i} e(-m'_i^2/4),
// B_ij -> (-1)^{m'_i m'_j}, C_ii -> e(-m''_i^2/4), C_ij -> (-1)^{m''_i m''_j}.
long oracle_generator_exponent(const Characteristic& m, GeneratorKind kind, int i, int j) {
  const long pi = m.prime()[i - 1].get_si(), pj = m.prime()[j - 1].get_si();
  const long di = m.double_prime()[i - 1].get_si(), dj = m.double_prime()[j - 1].get_si();
  switch (kind) {
    case GeneratorKind::A: return mod8(4 * pi * dj);
    case GeneratorKind::B: return i == j ? mod8(4 * pi - 2 * pi * pi) : mod8(4 * pi * pj);
    case GeneratorKind::C: return i == j ? mod8(-2 * di * di) : mod8(4 * di * dj);
  }
  return -1;
}

// (-1)^A e(-B/4) with A, B assembled term by term.
long oracle_exponent_formula(const Characteristic& m, const AbelianExponents& e) {
  long a = 0, b = 0;
  const std::size_t g = e.g;
  auto p1 = [&](std::size_t i) { return m.prime()[i].get_si(); };
  auto p2 = [&](std::size_t i) { return m.double_prime()[i].get_si(); };
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) a += e.p[i][j] * p1(i) * p2(j);
    a += e.q_diag[i] * p1(i);
    b += e.q_diag[i] * p1(i) * p1(i) + e.r_diag[i] * p2(i) * p2(i);
    for (std::size_t j = i + 1; j < g; ++j)
      a += e.q_off[i][j] * p1(i) * p1(j) + e.r_off[i][j] * p2(i) * p2(j);
  }
  return mod8(4 * a - 2 * b);
}

TEST(EighthRoot, Arithmetic) {
  EighthRoot z(3);
  EXPECT_EQ((z * EighthRoot(6)).exponent(), 1);
  EXPECT_EQ(z.inverse().exponent(), 5);
  EXPECT_EQ(z.pow(8).exponent(), 0);
  EXPECT_EQ(EighthRoot(-1).exponent(), 7);
  EXPECT_EQ(EighthRoot::sign(Integer(3)).exponent(), 4);
  EXPECT_EQ(EighthRoot::minus_quarter(Integer(1)).exponent(), 6);
  EXPECT_EQ(EighthRoot(2).name(), "i");
  EXPECT_EQ(EighthRoot(5).formula(), "e(5/8)");
  EXPECT_NEAR(std::abs(EighthRoot(1).value() - std::polar(1.0, M_PI / 4)), 0.0, 1e-15);
}

TEST(PhiFull, Examples) {
  for (const auto& m : enumerate_all_mod2(2))
    EXPECT_EQ(phi_full(m, SymplecticMatrix::identity(2)).eighths(), 0);
  EXPECT_EQ(phi_full(ch({1, 0}), mat({{1, 2}, {0, 1}})).eighths(), 2);
  EXPECT_EQ(phi_full(ch({0, 1}), mat({{1, 0}, {2, 1}})).eighths(), 6);
  EXPECT_EQ(phi_full(ch({0, 1}), mat({{1, 0}, {2, 1}})).to_string(), "6/8");
}

TEST(PhiLevel2, Examples) {
  EXPECT_EQ(phi_level2(ch({1, 1}), SymplecticMatrix::identity(1)).eighths(), 0);
  EXPECT_EQ(phi_level2(ch({1, 0}), mat({{5, 2}, {2, 1}})).eighths(), 2);
  EXPECT_THROW(phi_level2(ch({1, 0}), mat({{1, 1}, {0, 1}})), Error);
}

TEST(Chi, Examples) {
  for (std::size_t g = 1; g <= 3; ++g) {
    auto m = word_to_matrix(random_word(g, 6, 11 + g));
    EXPECT_TRUE(chi(Characteristic::zero(g), m).is_one());
  }
  EXPECT_EQ(chi(ch({1, 0}), mat({{1, 2}, {0, 1}})).exponent(), 2);
  auto bd = chi_breakdown(ch({1, 0}), mat({{5, 2}, {2, 1}}));
  EXPECT_EQ(bd.value.exponent(), 2);
  EXPECT_EQ(bd.preimage, ch({-25, -12}));
  EXPECT_EQ(bd.delta, ch({-13, -6}));
  EXPECT_EQ(bd.delta_sign, 0);
  EXPECT_EQ(bd.value, chi(ch({1, 0}), mat({{1, 2}, {0, 1}})) * chi(ch({1, 0}), mat({{1, 0}, {2, 1}})));
  try {
    chi(ch({1, 0}), mat({{1, 1}, {0, 1}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotLevel2);
  }
}

TEST(ChiGenerator, Examples) {
  EXPECT_EQ(chi_generator(ch({1, 0}), GeneratorKind::B, 1, 1).exponent(), 2);
  EXPECT_EQ(chi_generator(ch({0, 1}), GeneratorKind::C, 1, 1).exponent(), 6);
  EXPECT_EQ(chi_generator(ch({1, 0, 0, 1}), GeneratorKind::A, 1, 2).exponent(), 4);
}

TEST(ExponentFormula, Examples) {
  auto e = AbelianExponents::zero(1);
  EXPECT_TRUE(theorem34_eval(ch({1, 1}), e).is_one());
  e.q_diag[0] = 1;
  EXPECT_EQ(theorem34_eval(ch({1, 0}), e).exponent(), 2);
  e.r_diag[0] = 1;
  EXPECT_EQ(theorem34_eval(ch({1, 0}), e).exponent(), 2);
}

TEST(ChiWord, Examples) {
  EXPECT_TRUE(chi_word(ch({1, 1}), GeneratorWord{1, {}}).is_one());
  GeneratorWord bc{1, {{GeneratorKind::B, 1, 1, 1}, {GeneratorKind::C, 1, 1, 1}}};
  EXPECT_EQ(chi_word(ch({1, 0}), bc).exponent(), 2);
}

TEST(Extract, Examples) {
  EXPECT_EQ(extract_abelian_exponents(SymplecticMatrix::identity(3)), AbelianExponents::zero(3));
  auto expected = AbelianExponents::zero(1);
  expected.q_diag[0] = 1;
  EXPECT_EQ(extract_abelian_exponents(generator(GeneratorKind::B, 1, 1, 1)), expected);
}

TEST(Extract, AgreesWithLetterCounts) {
  for (std::size_t g = 1; g <= 3; ++g) {
    Engine engine(700 + g);
    for (int trial = 0; trial < 60; ++trial) {
      auto w = random_word(g, draw_below(engine, 16), engine);
      EXPECT_EQ(extract_abelian_exponents(word_to_matrix(w)), testing::letter_count_exponents(w));
    }
  }
}

TEST(IgusaProduct, Examples) {
  auto b11 = generator(GeneratorKind::B, 1, 1, 1);
  EXPECT_TRUE(igusa_product_character(ch({0, 0}), ch({0, 0}), b11).is_one());
  EXPECT_EQ(igusa_product_character(ch({1, 0}), ch({0, 1}), b11).exponent(), 2);
  Engine engine(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = word_to_matrix(random_word(2, 6, engine));
    auto x = testing::random_characteristic(2, engine, 2);
    auto sq = igusa_product_character(x, x, m);
    EXPECT_EQ(sq, chi(x, m) * chi(x, m));
    EXPECT_EQ(sq.exponent() % 2, 0);
  }
}

TEST(IsChiConstantOverEven, Examples) {
  EXPECT_TRUE(is_chi_constant_over_even(SymplecticMatrix::identity(2)));
  EXPECT_FALSE(is_chi_constant_over_even(generator(GeneratorKind::B, 1, 1, 1)));
  for (std::size_t g = 1; g <= 3; ++g)
    for (std::uint64_t seed = 0; seed < 20; ++seed)
      EXPECT_TRUE(is_chi_constant_over_even(random_igusa48(g, seed)));
}

// The converse direction as stated: constancy over even characteristics
// forces membership in Gamma_g(4,8). Any counterexample is reported.
TEST(IsChiConstantOverEven, ConstancyImpliesIgusa48OnRandomLevel2Samples) {
  for (std::size_t g = 1; g <= 2; ++g) {
    Engine engine(800 + g);
    std::size_t counterexamples = 0;
    for (int trial = 0; trial < 500; ++trial) {
      auto m = word_to_matrix(random_word(g, 1 + draw_below(engine, 8), engine));
      if (is_chi_constant_over_even(m) && !is_igusa48(m)) {
        if (counterexamples++ == 0) ADD_FAILURE() << "g=" << g << " counterexample\n" << m.entries();
      }
    }
    EXPECT_EQ(counterexamples, 0U) << "g=" << g;
  }
}

TEST(IsChiConstantOverEven, MatchesIgusa48UpToSign) {
  for (std::size_t g = 1; g <= 2; ++g) {
    Engine engine(800 + g);
    for (int trial = 0; trial < 500; ++trial) {
      auto m = word_to_matrix(random_word(g, 1 + draw_below(engine, 8), engine));
      EXPECT_EQ(is_chi_constant_over_even(m), is_igusa48_up_to_sign(m)) << m.entries();
    }
  }
}

TEST(Properties, Homomorphism) {
  for (std::size_t g = 1; g <= 3; ++g) {
    Engine engine(900 + g);
    const auto all = enumerate_all_mod2(g);
    for (int trial = 0; trial < 100; ++trial) {
      auto m1 = word_to_matrix(random_word(g, 1 + draw_below(engine, 8), engine));
      auto m2 = word_to_matrix(random_word(g, 1 + draw_below(engine, 8), engine));
      auto prod = m1 * m2;
      for (const auto& m : all) ASSERT_EQ(chi(m, prod), chi(m, m1) * chi(m, m2));
    }
  }
}

TEST(Properties, PhiDependsOnResidueAndOrbit) {
  for (std::size_t g = 1; g <= 3; ++g) {
    Engine engine(1000 + g);
    for (int trial = 0; trial < 150; ++trial) {
      auto mm = word_to_matrix(random_word(g, 1 + draw_below(engine, 8), engine));
      auto other = word_to_matrix(random_word(g, 1 + draw_below(engine, 8), engine));
      auto m = testing::random_characteristic(g, engine, 4);
      IntVector shifted = m.flat();
      for (auto& x : shifted) x += 2 * (static_cast<long>(draw_below(engine, 7)) - 3);
      auto n = Characteristic::from_flat(shifted);
      EXPECT_EQ(phi_level2(m, mm), phi_level2(n, mm));
      EXPECT_EQ(phi_level2(act(other, m), mm), phi_level2(m, mm));
      EXPECT_EQ(phi_full(m, mm), phi_level2(m, mm));
      EXPECT_EQ(chi(m, mm), chi(n, mm));
    }
  }
}

TEST(Properties, TrivialOnIgusa48) {
  for (std::size_t g = 1; g <= 3; ++g) {
    Engine engine(1100 + g);
    const auto all = enumerate_all_mod2(g);
    for (int trial = 0; trial < 60; ++trial) {
      auto m = random_igusa48(g, engine);
      for (const auto& x : all) ASSERT_TRUE(chi(x, m).is_one()) << x << "\n" << m.entries();
    }
  }
}

TEST(Properties, GeneratorTableMatchesOracle) {
  for (std::size_t g = 1; g <= 3; ++g) {
    for (const auto& l : generator_alphabet(g)) {
      auto gen = generator(l.kind, l.i, l.j, g);
      for (const auto& m : enumerate_all_mod2(g)) {
        const long want = oracle_generator_exponent(m, l.kind, l.i, l.j);
        EXPECT_EQ(chi(m, gen).exponent(), want) << generator_name(l.kind, l.i, l.j) << " " << m;
        EXPECT_EQ(chi_generator(m, l.kind, l.i, l.j).exponent(), want);
        if (l.i != l.j) EXPECT_EQ(want % 4, 0);
      }
    }
  }
}

TEST(Properties, ExponentFormulaOnAllCharacteristics) {
  for (std::size_t g = 1; g <= 3; ++g) {
    Engine engine(1200 + g);
    const auto all = enumerate_all_mod2(g);
    for (int trial = 0; trial < 60; ++trial) {
      auto w = random_word(g, draw_below(engine, 12), engine);
      auto mm = word_to_matrix(w);
      auto e = extract_abelian_exponents(mm);
      auto counts = testing::letter_count_exponents(w);
      for (const auto& m : all) {
        const auto value = chi(m, mm);
        EXPECT_EQ(theorem34_eval(m, e), value);
        EXPECT_EQ(oracle_exponent_formula(m, counts), value.exponent());
        EXPECT_EQ(chi_word(m, w), value);
        EXPECT_TRUE(value.pow(8).is_one());
      }
    }
  }
}

}  // namespace
}  // namespace siegelchar
