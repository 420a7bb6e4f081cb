#include "hopfcalc/census.hpp"

#include <gtest/gtest.h>

using namespace hopfcalc;

namespace {

std::set<std::string> as_strings(const std::vector<AlgebraTypeSignature>& v) {
  std::set<std::string> s;
  for (const auto& t : v) s.insert(t.to_string());
  return s;
}

std::set<std::string> golden(std::initializer_list<const char*> items) {
  std::set<std::string> s;
  for (const char* t : items) s.insert(parse_signature(t).to_string());
  return s;
}

CensusOptions with_rules(const std::string& rules) {
  CensusOptions o;
  o.rules = parse_rule_set(rules);
  return o;
}

CensusOptions with_oracle(const std::string& rules, std::initializer_list<const char*> targets) {
  auto o = with_rules(rules);
  o.oracle = true;
  for (const char* t : targets) o.oracle_targets.push_back(parse_signature(t));
  o.search.budget = 1'000'000;
  return o;
}

const std::set<std::string> kDim24 = golden({"1,2;2,1;3,2", "1,3;2,3;3,1", "1,4;2,5", "1,4;2,1;4,1", "1,6;3,2",
                                             "1,8;2,4", "1,8;4,1", "1,12;2,3"});
const std::set<std::string> kDim30 = golden({"1,2;2,7", "1,3;3,3", "1,5;5,1", "1,6;2,6", "1,10;2,5"});
const std::set<std::string> kDim36 = golden({"1,2;2,4;3,2", "1,3;2,6;3,1", "1,4;2,8", "1,4;2,4;4,1", "1,4;4,2",
                                             "1,6;2,3;3,2", "1,9;3,3", "1,12;2,6", "1,18;3,2"});
const std::set<std::string> kDim40 = golden({"1,4;2,9", "1,4;2,5;4,1", "1,4;2,1;4,2", "1,8;2,8", "1,8;2,4;4,1",
                                             "1,8;4,2", "1,20;2,5"});
const std::set<std::string> kDim42 = golden({"1,2;2,1;6,1", "1,2;2,1;3,4", "1,2;2,10", "1,6;6,1", "1,6;2,9",
                                             "1,6;3,4", "1,14;2,7"});
const std::set<std::string> kDim48 = golden(
    {"1,2;2,3;3,2;4,1", "1,3;3,1;6,1", "1,3;2,9;3,1", "1,3;3,5", "1,4;2,2;3,4", "1,4;2,3;4,2", "1,4;2,7;4,1",
     "1,4;2,11", "1,4;2,2;6,1", "1,6;2,6;3,2", "1,8;2,2;4,2", "1,8;2,10", "1,8;2,6;4,1", "1,12;2,9", "1,12;3,4",
     "1,12;6,1", "1,16;2,8", "1,16;4,2", "1,24;2,6"});
const std::set<std::string> kDim54 = golden({"1,2;2,4;6,1", "1,2;2,4;3,4", "1,2;2,13", "1,6;2,3;6,1", "1,6;2,12",
                                             "1,6;2,3;3,4", "1,9;3,1;6,1", "1,9;3,5", "1,18;2,9", "1,18;3,4",
                                             "1,18;6,1", "1,27;3,3"});
const std::set<std::string> kDim56 = golden({"1,4;2,13", "1,4;2,9;4,1", "1,4;2,5;4,2", "1,4;2,1;4,3", "1,7;7,1",
                                             "1,8;4,3", "1,8;2,4;4,2", "1,8;2,8;4,1", "1,8;2,12", "1,28;2,7"});

}  // namespace

TEST(Census, RuleSetParsing) {
  EXPECT_EQ(parse_rule_set("all").size(), 10u);
  EXPECT_EQ(parse_rule_set("R1-R5"), (std::vector<std::string>{"R1", "R2", "R3", "R4", "R5"}));
  EXPECT_EQ(parse_rule_set("R1..R3"), (std::vector<std::string>{"R1", "R2", "R3"}));
  EXPECT_EQ(parse_rule_set("R5,R1,R4"), (std::vector<std::string>{"R1", "R4", "R5"}));
  EXPECT_THROW(parse_rule_set("R2,R3"), ParseError);
  EXPECT_THROW(parse_rule_set("R1,R11"), ParseError);
  for (const auto& r : census_rules()) EXPECT_FALSE(r.citation.empty()) << r.id;
}

TEST(Census, SixtyWithoutGroupLikes) {
  CensusOptions o = with_rules("R1,R4,R5");
  o.n_filter = 1;
  EXPECT_EQ(as_strings(enumerate_types(60, o).survivors),
            golden({"1,1;3,2;4,1;5,1", "1,1;2,4;3,2;5,1", "1,1;2,4;3,3;4,1"}));
}

TEST(Census, TrivialDimensionTwo) {
  CensusOptions o = with_rules("R1");
  o.proper_only = false;
  EXPECT_EQ(as_strings(enumerate_types(2, o).survivors), golden({"1,2"}));
  EXPECT_TRUE(enumerate_types(2, with_rules("R1")).survivors.empty());
}

TEST(Census, GoldenListsWithoutOracle) {
  EXPECT_EQ(as_strings(enumerate_types(24, with_rules("R1-R5")).survivors), kDim24);
  EXPECT_EQ(as_strings(enumerate_types(30, with_rules("R1-R8")).survivors), kDim30);
  EXPECT_EQ(as_strings(enumerate_types(42, with_rules("R1-R8")).survivors), kDim42);
  EXPECT_EQ(as_strings(enumerate_types(40, with_rules("all")).survivors), kDim40);
}

TEST(Census, Dimension56WithOracle) {
  const auto r = enumerate_types(56, with_oracle("all", {"1,4;3,4;4,1", "1,4;4,1;6,1"}));
  auto expected = kDim56;
  expected.insert({"1,4;3,4;4,1", "1,4;4,1;6,1"});
  EXPECT_EQ(as_strings(r.survivors), expected);
  ASSERT_EQ(r.oracle.size(), 2u);
  for (const auto& v : r.oracle) EXPECT_EQ(v.status, "infeasible") << v.type.to_string();
  EXPECT_EQ(as_strings(r.final_types()), kDim56);
}

TEST(Census, Dimension54WithOracle) {
  const auto r = enumerate_types(54, with_oracle("all", {"1,2;2,1;4,3", "1,2;3,4;4,1", "1,2;4,1;6,1"}));
  ASSERT_EQ(r.oracle.size(), 3u);
  for (const auto& v : r.oracle) EXPECT_EQ(v.status, "infeasible") << v.type.to_string();
  EXPECT_EQ(as_strings(r.final_types()), kDim54);
}

TEST(Census, Dimension36WithOracle) {
  const auto r = enumerate_types(36, with_oracle("all", {"1,2;3,2;4,1"}));
  ASSERT_EQ(r.oracle.size(), 1u);
  EXPECT_EQ(r.oracle[0].status, "infeasible");
  EXPECT_EQ(as_strings(r.final_types()), kDim36);
}

TEST(Census, Dimension48ContainsPublishedList) {
  const auto r = enumerate_types(48, with_rules("all"));
  const auto got = as_strings(r.survivors);
  for (const auto& t : kDim48) EXPECT_TRUE(got.count(t)) << t;
  std::set<std::string> extra;
  for (const auto& t : got)
    if (!kDim48.count(t)) extra.insert(t);
  EXPECT_EQ(extra, golden({"1,2;2,7;3,2", "1,16;2,4;4,1"}));
}

TEST(Census, Invariants) {
  const auto all = parse_rule_set("all");
  for (int N = 1; N <= 60; ++N) {
    CensusOptions full = with_rules("all");
    const auto r = enumerate_types(N, full);
    for (const auto& t : r.survivors) EXPECT_EQ(t.dimension(), N);
    for (const auto& e : r.eliminated) EXPECT_TRUE(census_rule(e.rule).applies(N, e.type)) << N << " " << e.rule;
    CensusOptions r1 = with_rules("R1");
    const auto base = enumerate_types(N, r1);
    EXPECT_EQ(r.survivors.size() + r.eliminated.size(), base.survivors.size());
    // enlarging the rule set never enlarges the survivors
    std::vector<std::string> rules{"R1"};
    std::size_t prev = base.survivors.size();
    for (std::size_t i = 1; i < all.size(); ++i) {
      rules.push_back(all[i]);
      CensusOptions o;
      o.rules = rules;
      const auto s = enumerate_types(N, o).survivors.size();
      EXPECT_LE(s, prev) << N;
      prev = s;
    }
    EXPECT_TRUE(std::is_sorted(r.survivors.begin(), r.survivors.end()));
  }
}

TEST(Census, TensorType) {
  EXPECT_EQ(tensor_type(parse_signature("1,4;2,1"), parse_signature("1,4;2,1")).to_string(), "1,16;2,8;4,1");
  EXPECT_EQ(tensor_type(parse_signature("1,3"), parse_signature("1,5")).to_string(), "1,15");
  EXPECT_EQ(tensor_type(parse_signature("1,2;2,1"), parse_signature("1,2")).to_string(), "1,4;2,2");
}

TEST(Census, CompleteType) {
  EXPECT_EQ(complete_type(64, 8, {2}).unique().to_string(), "1,8;2,14");
  EXPECT_EQ(complete_type(8, 8, {}).unique().to_string(), "1,8");
  EXPECT_EQ(complete_type(12, 4, {2, 3}).unique().to_string(), "1,4;2,2");
  EXPECT_TRUE(complete_type(36, 4, {2, 4}).ambiguous());
  EXPECT_THROW(complete_type(12, 4, {3}), NoSolution);
  EXPECT_THROW(complete_type(12, 5, {2}), InvalidSignature);
}
