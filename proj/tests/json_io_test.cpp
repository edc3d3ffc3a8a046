#include <gtest/gtest.h>

#include "siegelchar/error.hpp"
#include "siegelchar/json_io.hpp"
#include "test_support.hpp"

namespace siegelchar {
namespace {

using json_io::Json;

TEST(JsonIo, IntegersRoundTripBeyond64Bits) {
  Integer big("123456789012345678901234567890");
  Json j = json_io::to_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(json_io::integer_from_json(j), big);
  EXPECT_EQ(json_io::to_json(Integer(-7)), Json(-7));
  EXPECT_EQ(json_io::integer_from_json(Json(42)), 42);
  EXPECT_THROW(json_io::integer_from_json(Json("12x")), Error);
  EXPECT_THROW(json_io::integer_from_json(Json(1.5)), Error);
}

TEST(JsonIo, MatrixFormat) {
  auto m = word_to_matrix(random_word(2, 10, 5));
  Json j = json_io::to_json(m);
  EXPECT_EQ(j.at("g"), 2);
  EXPECT_EQ(j.at("m").size(), 4U);
  EXPECT_EQ(json_io::matrix_from_json(j).entries(), m.entries());
  auto b11 = json_io::matrix_from_json(Json::parse(R"({"g":1,"m":[[1,2],[0,1]]})"));
  EXPECT_EQ(b11.entries(), IntMatrix({{1, 2}, {0, 1}}));
}

TEST(JsonIo, MatrixErrors) {
  auto kind_of = [](const char* text) {
    try {
      json_io::matrix_from_json(Json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;  // unreachable in these cases
  };
  EXPECT_EQ(kind_of(R"({"m":[[1]]})"), ErrorKind::Parse);
  EXPECT_EQ(kind_of(R"({"g":1,"m":[[1,2,3],[0,1,0]]})"), ErrorKind::BadShape);
  EXPECT_EQ(kind_of(R"({"g":1,"m":[[1,2],[0,1],[0,0]]})"), ErrorKind::BadShape);
  EXPECT_EQ(kind_of(R"({"g":1,"m":[[2,0],[0,2]]})"), ErrorKind::NotSymplectic);
}

TEST(JsonIo, WordsAndCharacteristics) {
  auto w = random_word(3, 12, 8);
  EXPECT_EQ(json_io::word_from_json(json_io::to_json(w)), w);
  auto parsed = json_io::word_from_json(Json::parse(R"({"g":1,"letters":[["B",1,1,1],["C",1,1,-2]]})"));
  ASSERT_EQ(parsed.letters.size(), 2U);
  EXPECT_EQ(parsed.letters[1].kind, GeneratorKind::C);
  EXPECT_EQ(parsed.letters[1].exponent, -2);
  EXPECT_THROW(json_io::word_from_json(Json::parse(R"({"g":1,"letters":[["B",2,1,1]]})")), Error);
  EXPECT_THROW(json_io::word_from_json(Json::parse(R"({"g":1,"letters":[["D",1,1,1]]})")), Error);

  auto m = testing::ch({1, 0, -3, 4});
  EXPECT_EQ(json_io::to_json(m), Json::parse("[1,0,-3,4]"));
  EXPECT_EQ(json_io::characteristic_from_json(Json::parse("[1,0,-3,4]")), m);
  EXPECT_THROW(json_io::characteristic_from_json(Json::parse("[1,0,1]")), Error);
}

TEST(JsonIo, EighthRootAndExponents) {
  Json r = json_io::to_json(EighthRoot(6));
  EXPECT_EQ(r.at("k"), 6);
  EXPECT_EQ(r.at("value"), "e(6/8)");
  EXPECT_EQ(r.at("name"), "−i");
  auto e = AbelianExponents::zero(2);
  e.q_diag[1] = 3;
  e.p[1][0] = 1;
  Json j = json_io::to_json(e);
  EXPECT_EQ(j.at("qDiag"), Json::parse("[0,3]"));
  EXPECT_EQ(j.at("p"), Json::parse("[[0,0],[1,0]]"));
}

TEST(JsonIo, SiegelPointRoundTrip) {
  auto tau = random_siegel_point(2, 4);
  auto back = json_io::siegel_point_from_json(json_io::to_json(tau));
  EXPECT_EQ(back.tau(), tau.tau());
  EXPECT_THROW(json_io::siegel_point_from_json(
                   Json::parse(R"({"g":1,"re":[[0]],"im":[[-1]]})")),
               Error);
}

TEST(JsonIo, ReportFields) {
  auto report = verify_character(SymplecticMatrix::identity(1), SiegelPoint::imaginary_identity(1));
  Json j = json_io::to_json(report);
  for (const char* key : {"m_list", "ratios", "estimated_unit", "max_deviation", "tolerance", "passed"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.at("m_list").size(), 3U);
  EXPECT_TRUE(j.at("estimated_unit").contains("re"));
}

}  // namespace
}  // namespace siegelchar
