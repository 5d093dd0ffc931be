#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "braidrep/io.hpp"
#include "support/generators.hpp"

namespace braidrep {
namespace {

TEST(GnWordText, ParseAndPrintRoundTrip) {
  const GnWord w = parse_gn_word(" a(1,2,3) a( 4, 2 ,1)^-1 a(2,3,4)^1 ", 4);
  EXPECT_EQ(w.to_string(), "a(1,2,3) a(4,2,1)^-1 a(2,3,4)");
  EXPECT_EQ(parse_gn_word(w.to_string(), 4), w);
  EXPECT_TRUE(parse_gn_word("  ", 4).empty());
  EXPECT_THROW(parse_gn_word("a(1,2,3", 4), ParseError);
  EXPECT_THROW(parse_gn_word("b(1,2,3)", 4), ParseError);
  EXPECT_THROW(parse_gn_word("a(1,2,3)^2", 4), ParseError);
}

TEST(GnWordJson, RoundTrip) {
  testing::Rng rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const GnWord w = testing::random_gn_word(rng, 6, 8);
    ASSERT_EQ(gn_word_from_json(to_json(w), 6), w);
  }
  EXPECT_EQ(to_json(parse_gn_word("a(3,2,1)^-1", 3)), Json::parse("[[3,2,1,-1]]"));
  EXPECT_THROW(gn_word_from_json(Json::parse("[[1,2,3]]"), 4), ParseError);
  EXPECT_THROW(gn_word_from_json(Json::parse("[[1,2,5,1]]"), 4), DomainError);
  EXPECT_THROW(gn_word_from_json(Json::parse("[[0,2,3,1]]"), 4), DomainError);
  EXPECT_THROW(gn_word_from_json(Json::parse("{}"), 4), ParseError);
}

TEST(MatrixJson, FieldsAndOrdering) {
  const std::size_t n = 3;
  const RepMatrix m = rho_generator(n, 1, 2, 3);
  const Json j = to_json(m, n);
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("dim"), 6);
  EXPECT_EQ(j.at("basis").at(0), "x_1_2");
  EXPECT_EQ(j.at("basis").at(5), "x_3_2");
  std::pair<std::size_t, std::size_t> last{0, 0};
  bool first = true;
  for (const Json& e : j.at("entries")) {
    const std::pair<std::size_t, std::size_t> rc{e.at("row"), e.at("col")};
    if (!first) {
      EXPECT_LT(last, rc);
    }
    last = rc;
    first = false;
  }
  EXPECT_EQ(j.at("entries").at(0), Json::parse(R"({"row":0,"col":0,"value":"t1"})"));
  EXPECT_EQ(rep_matrix_from_json(j), m);
  EXPECT_EQ(rep_matrix_from_json(Json::parse(j.dump())), m);
}

TEST(MatrixJson, NumericValuesAreExactStrings) {
  const std::size_t n = 3;
  const NumericMatrix m = specialize(rho_generator(n, 1, 2, 3), Assignment(n).set("t1", Rational(1, 3)).set_rest(1));
  const Json j = to_json(m, n);
  EXPECT_EQ(j.at("entries").at(0).at("value"), "1/3");
}

TEST(Trajectories, SaveLoadRoundTrip) {
  const TrajectorySet ts = sigma_motion(4, 2, 16);
  const std::string file = (std::filesystem::temp_directory_path() / "braidrep_traj_roundtrip.json").string();
  save_trajectories(ts, file);
  const TrajectorySet back = load_trajectories(file);
  std::remove(file.c_str());
  ASSERT_EQ(back.points(), ts.points());
  for (std::size_t p = 1; p <= ts.points(); ++p) EXPECT_EQ(back.path(p), ts.path(p));
  EXPECT_EQ(events_to_word(detect_events(back), 4), events_to_word(detect_events(ts), 4));
}

TEST(Trajectories, LoadErrors) {
  const std::string data = BRAIDREP_TEST_DATA;
  EXPECT_EQ(load_trajectories(data + "/still.json").points(), 4u);
  EXPECT_THROW(load_trajectories(data + "/malformed.json"), ParseError);
  EXPECT_THROW(load_trajectories(data + "/does_not_exist.json"), ParseError);
  EXPECT_THROW(trajectories_from_json(Json::parse(R"({"n": 2, "paths": [[[0,0,0],[1,0,0]]]})")), ParseError);
  EXPECT_THROW(trajectories_from_json(Json::parse(R"({"n": 1, "paths": [[[0,"x",0],[1,0,0]]]})")), ParseError);
  EXPECT_THROW(trajectories_from_json(Json::parse(R"({"paths": []})")), ParseError);
}

}  // namespace
}  // namespace braidrep
