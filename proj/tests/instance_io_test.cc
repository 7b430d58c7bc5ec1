#include "abduction/instance_io.h"

#include <gtest/gtest.h>

#include "abduction/oracle.h"
#include "test_instances.h"

namespace abduction {
namespace {

// Fixed when the format was first written.
constexpr const char* kTexGolden =
    "p abd 5\n"
    "h 1 1 2 3 4 0\n"
    "m 5 0\n"
    "-1 5 0\n"
    "-2 -3 0\n"
    "-2 5 0\n"
    "-3 5 0\n"
    "-4 5 0\n";

TEST(SerializeTest, TexGolden) {
  auto tex = testing::tex_instance();
  tex.names.assign(5, "");
  EXPECT_EQ(serialize_instance(tex), kTexGolden);
}

TEST(ParseTest, TexFixture) {
  const auto tex = read_instance_file(std::string(ABDUCTION_FIXTURES) + "/tex.abd");
  EXPECT_EQ(tex, testing::tex_instance());
  EXPECT_EQ(parse_instance(kTexGolden).theory, tex.theory);
}

TEST(ParseTest, Errors) {
  try {
    parse_instance("p abd 2\nh 1 1 0\n-1 2 0\n");
    FAIL() << "no exception";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("no manifestation line"), std::string::npos);
  }
  try {
    parse_instance("p abd 2\nh 1 1 0\nm 2 0\n-1 x 0\n");
    FAIL() << "no exception";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  EXPECT_THROW(parse_instance("h 1 1 0\n"), ParseError);
  EXPECT_THROW(parse_instance("p abd 2\nm 2 0\n-1 2\n"), ParseError);
  EXPECT_THROW(parse_instance("p abd 2\nm 3 0\n-1 2 0\n"), ParseError);
  EXPECT_THROW(parse_instance("p abd 2\nm 2 0\nm 2 0\n-1 2 0\n"), ParseError);
  EXPECT_THROW(parse_instance("p abd 2\nh 1 1 0\nh 1 1 0\nm 2 0\n-1 2 0\n"), ParseError);
  // Semantic problems come from validation.
  EXPECT_THROW(parse_instance("p abd 3\nh 1 1 0\nm 3 0\n-1 2 0\n"), InvalidInstance);
  EXPECT_THROW(parse_instance("p abd 2\nh 1 1 0\nm 2 0\nw 1 0\n-1 2 0\n"), InvalidInstance);
}

TEST(SerializeTest, EmptyHypothesisLine) {
  const auto inst = parse_instance("p abd 1\nm 1 0\n1 0\n");
  EXPECT_EQ(serialize_instance(inst), "p abd 1\nh 1 0\nm 1 0\n1 0\n");
}

TEST(SerializeTest, CandidateAndWeights) {
  auto pen = testing::tex_penalty();
  pen.candidate = VarSet{1, 4};
  const std::string text = serialize_instance(pen);
  EXPECT_NE(text.find("w 4 1\n"), std::string::npos);
  EXPECT_NE(text.find("c candidate 1 4 0\n"), std::string::npos);
  EXPECT_EQ(parse_instance(text), pen);
}

TEST(SerializeTest, ReprClauseCount) {
  const auto repr = repr_instance(2, Variant::kPlain);
  const std::string text = serialize_instance(repr);
  const std::size_t expected = pi(VarSet{1, 2, 3, 4}, Dialect::kGeneral).clauses.size();
  std::size_t lines = 0;
  for (char ch : text) lines += ch == '\n';
  // header, four names, h-line, m-line
  EXPECT_EQ(lines, 7 + expected);
}

TEST(SerializeTest, RecordComments) {
  const auto rec = transform_first_of_first(testing::tex_prio(), testing::kP);
  const std::string text = serialize_record(rec) + serialize_instance(rec.output);
  EXPECT_NE(text.find("c map fresh t 6\n"), std::string::npos);
  EXPECT_EQ(parse_instance(text), rec.output);
}

TEST(RoundTripProperty, RandomInstances) {
  Rng rng(51);
  RandomShape shape;
  shape.max_hypotheses = 6;
  shape.max_vars = 9;
  shape.max_classes = 3;
  for (int i = 0; i < 100; ++i) {
    shape.weights = i % 2 == 0;
    auto inst = random_instance(rng, shape);
    if (i % 3 == 0) inst.candidate = VarSet{inst.hypotheses().vars().front()};
    const std::string text = serialize_instance(inst);
    const auto back = parse_instance(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(serialize_instance(back), text);
  }
}

}  // namespace
}  // namespace abduction
