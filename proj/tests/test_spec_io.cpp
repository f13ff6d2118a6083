#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tropical/generators.hpp"
#include "tropical/spec_io.hpp"

using namespace tropical;
using tropical::testing::example4_raw;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char* kSmall = R"({"model": "max-times", "n": 2, "I": [1], "J": [2],
  "sigma": [{"i": 1, "j": 2, "threshold": "1/2", "closed": false}]})";

}  // namespace

TEST(SpecIo, ParsesConicalFile) {
  SpecFile f = parse_spec(kSmall);
  EXPECT_FALSE(f.affine());
  EXPECT_EQ(f.raw.dim, 2u);
  EXPECT_EQ(f.raw.rows, IndexSet{0});
  EXPECT_EQ(f.raw.cols, IndexSet{1});
  EXPECT_EQ(f.raw.at(0, 1), BoundarySet::make(Scalar::finite(Model::MaxTimes, 1, 2), false));
}

TEST(SpecIo, ExampleFileMatchesBuiltIn) {
  SpecFile f = read_spec_file(std::string(TROPICAL_TEST_DATA_DIR) + "/example4.json");
  EXPECT_EQ(f.raw, example4_raw());
}

TEST(SpecIo, AffineFileKeepsAmbientDimension) {
  SpecFile f = read_spec_file(std::string(TROPICAL_TEST_DATA_DIR) + "/affine_box.json");
  ASSERT_TRUE(f.affine());
  EXPECT_TRUE(*f.contains_zero);
  EXPECT_EQ(f.raw.dim, 3u);
  EXPECT_EQ(f.raw.rows, IndexSet{2});
}

TEST(SpecIo, SerializationIsCanonical) {
  const std::string text = serialize_spec(HemispaceSpec::validate(example4_raw()));
  EXPECT_EQ(serialize_spec(parse_spec(text)), text);
  EXPECT_NE(text.find("\"threshold\": \"inf\""), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(SpecIo, ErrorsNameTheField) {
  EXPECT_NE(error_of("{").find("invalid JSON"), std::string::npos);
  EXPECT_NE(error_of("[]").find("document"), std::string::npos);
  EXPECT_NE(error_of(R"({"n": 2})").find("model: missing"), std::string::npos);
  EXPECT_NE(error_of(R"({"model": "tropical", "n": 2})").find("tropical"), std::string::npos);
  EXPECT_NE(error_of(R"({"model": "max-plus", "n": 0})").find("n:"), std::string::npos);
  EXPECT_NE(error_of(R"({"model": "max-plus", "n": 2, "I": [3], "J": [1], "sigma": []})").find("I[0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"model": "max-plus", "n": 2, "I": [1], "J": [2],
    "sigma": [{"i": 1, "j": 2, "threshold": "abc", "closed": true}]})")
                .find("sigma[0].threshold"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"model": "max-times", "n": 2, "I": [1], "J": [2],
    "sigma": [{"i": 1, "j": 2, "threshold": "zero", "closed": false}]})")
                .find("sigma[0].closed"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"model": "max-times", "n": 2, "I": [1], "J": [2],
    "sigma": [{"i": 2, "j": 2, "threshold": "1", "closed": true}]})")
                .find("sigma[0].i"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"model": "max-times", "n": 2, "I": [1], "J": [2], "sigma": []})").find("missing entry"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"model": "max-times", "n": 2, "contains_zero": true, "I": [1], "J": [2], "sigma": []})")
                .find("contains_zero"),
            std::string::npos);
}

TEST(SpecIo, MissingFileIsAParseError) { EXPECT_THROW(read_spec_file("/nonexistent/spec.json"), ParseError); }

TEST(SpecIoProperties, RandomSpecsRoundTrip) {
  Rng rng = make_rng(61);
  for (int c = 0; c < 300; ++c) {
    const Model m = c % 2 ? Model::MaxTimes : Model::MaxPlus;
    HemispaceSpec spec = random_valid_spec(rng, m, 2 + c % 4);
    SpecFile back = parse_spec(serialize_spec(spec));
    ASSERT_EQ(back.raw, spec.raw());
    AffineHemispace h = random_affine(rng, m, 1 + c % 3, c % 3 == 0);
    SpecFile ab = parse_spec(serialize_spec(h));
    ASSERT_TRUE(ab.affine());
    ASSERT_EQ(*ab.contains_zero, h.contains_zero());
    ASSERT_EQ(ab.raw, h.base().raw());
  }
}
