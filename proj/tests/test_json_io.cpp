#include <gtest/gtest.h>

#include "altcoh/json_io.hpp"

using namespace altcoh;

TEST(JsonIo, PermRoundTripIsOneBased) {
  const Perm g = Perm::from_cycles(4, {{0, 2}});
  const json j = perm_to_json(g);
  EXPECT_EQ(j.dump(), "[3,2,1,4]");
  EXPECT_EQ(perm_from_json(j), g);
  EXPECT_THROW(perm_from_json(json::parse("[0,1]")), std::invalid_argument);
}

TEST(JsonIo, GroupTableRoundTrip) {
  const auto S3 = GroupTable::symmetric(3);
  EXPECT_EQ(group_table_from_json(group_table_to_json(S3)), S3);
  const auto flat = json::parse(R"({"size": 2, "mul": [0, 1, 1, 0], "identity": 0})");
  EXPECT_EQ(group_table_from_json(flat), GroupTable::cyclic(2));
  EXPECT_THROW(group_table_from_json(json::parse(R"({"size": 2, "mul": [0, 1, 1, 1], "identity": 0})")),
               std::invalid_argument);
}

TEST(JsonIo, TableRenderings) {
  const auto t = cohomology_table(9, 3);
  const json j = table_to_json(t);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["dims"].dump(), "[1,0,0,1]");
  EXPECT_EQ(table_to_csv(t), "n,p,d,dim\n9,3,0,1\n9,3,1,0\n9,3,2,0\n9,3,3,1\n");
  const auto text = table_to_text(t);
  EXPECT_NE(text.find("formula"), std::string::npos);
}

TEST(JsonIo, SubgroupDescriptor) {
  const json j = subgroup_to_json("E", detecting_subgroup(6, 3));
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["order"], 9);
  EXPECT_EQ(j["generators"][1].dump(), "[1,2,3,5,6,4]");
  EXPECT_EQ(j["blocks"][1]["start"], 4);
}
