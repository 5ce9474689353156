#include "hexagram/pascal_array.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hexagram/error.hpp"

namespace hexagram {
namespace {

TEST(PascalArrayTest, CanonicalIsLexLeast) {
  const auto arr = PascalArray::parse("ADB|ECF");
  EXPECT_EQ(arr.code(), "ABD|EFC");
  for (const auto& a : arr.orbit()) EXPECT_LE(arr.arrangement(), a);
  EXPECT_EQ(PascalArray::parse("ABC|FED").code(), "ABC|FED");
}

TEST(PascalArrayTest, OrbitHasTwelveDistinctArrangements) {
  for (const auto& arr : PascalArray::all()) {
    const auto orbit = arr.orbit();
    EXPECT_EQ(std::set<Arrangement>(orbit.begin(), orbit.end()).size(), 12u);
    for (const auto& a : orbit) EXPECT_EQ(PascalArray::canonical(a), arr);
  }
}

TEST(PascalArrayTest, AllPermutationsGiveSixtyArrays) {
  std::array<Label, 6> labels{Label::A, Label::B, Label::C, Label::D, Label::E, Label::F};
  std::set<PascalArray> seen;
  int count = 0;
  do {
    seen.insert(PascalArray::canonical({labels[0], labels[1], labels[2]}, {labels[3], labels[4], labels[5]}));
    ++count;
  } while (std::next_permutation(labels.begin(), labels.end()));
  EXPECT_EQ(count, 720);
  EXPECT_EQ(seen.size(), 60u);
  EXPECT_EQ(std::vector<PascalArray>(seen.begin(), seen.end()), PascalArray::all());
}

TEST(PascalArrayTest, ShufflesOfSameArrayAgree) {
  // Row swap and a column permutation.
  EXPECT_EQ(PascalArray::parse("ABC|FED"), PascalArray::parse("FED|ABC"));
  EXPECT_EQ(PascalArray::parse("ABC|FED"), PascalArray::parse("BCA|EDF"));
  EXPECT_NE(PascalArray::parse("ABC|FED"), PascalArray::parse("ABC|DEF"));
}

TEST(PascalArrayTest, RejectsBadLabels) {
  for (const char* bad : {"ABC|FEE", "ABC|FE", "ABCFED", "ABC|FEG", "abc|fed"}) {
    try {
      (void)PascalArray::parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::InvalidLabels || e.code() == ErrorCode::ParseError) << bad;
    }
  }
}

TEST(PascalArrayTest, LabelChars) {
  EXPECT_EQ(to_char(Label::D), 'D');
  EXPECT_EQ(label_from_char('F'), Label::F);
  EXPECT_THROW((void)label_from_char('Z'), Error);
}

}  // namespace
}  // namespace hexagram
