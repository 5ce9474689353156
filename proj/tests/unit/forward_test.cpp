#include "hexagram/forward.hpp"

#include <gtest/gtest.h>

#include "generators.hpp"

namespace hexagram {
namespace {

using testing::generic_sextuple;
using testing::worked_example;
using testing::RationalGenerator;

constexpr Label A = Label::A, B = Label::B, C = Label::C, D = Label::D, E = Label::E, F = Label::F;

Form chord(const SextupleParams& p, Label x, Label y) {
  return multiply(linear_form(p[x]), linear_form(p[y]));
}

TEST(ForwardTest, WorkedExampleSpecialPascals) {
  const auto lines = four_special_pascals(worked_example());
  EXPECT_EQ(lines.l1.form(), (Form{Rational(5, 36), Rational(37, 72), 1}));
  EXPECT_EQ(lines.l2.form(), (Form{Rational(-49, 349), Rational(42, 349), 1}));
  EXPECT_EQ(lines.l3.form(), (Form{Rational(-1, 16), Rational(-33, 544), 1}));
  EXPECT_EQ(lines.lstar.form(), (Form{Rational(7, 74), Rational(21, 148), 1}));
  EXPECT_EQ(lines.l1, (LineCoords{Rational(-37, 36), Rational(5, 36)}));
}

TEST(ForwardTest, LineCoords) {
  const auto l = ProjQuadratic::line(Form{Rational(5, 36), Rational(37, 72), 1});
  EXPECT_EQ(line_coords(l), (LineCoords{Rational(-37, 36), Rational(5, 36)}));
  EXPECT_EQ(line_coords(ProjQuadratic::line(l.form() * Rational(3))), line_coords(l));
  try {
    (void)line_coords(ProjQuadratic::line(Form{0, 1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ChartDegenerate);
  }
}

TEST(ForwardTest, RepeatedParameterRejected) {
  try {
    SextupleParams({1, 2, 3, 4, 5, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RepeatedParameter);
  }
}

TEST(ForwardTest, CrosshairConvention) {
  // For [A B C; F E D] the crosshairs are AE ^ BF, BD ^ CE, AD ^ CF.
  const auto p = worked_example();
  const Arrangement arr{{A, B, C}, {F, E, D}};
  const auto pts = crosshairs(p, arr);
  auto line = [&](Label x, Label y) { return join(p.point(x), p.point(y)); };
  EXPECT_TRUE(same_element(pts[0], meet(line(A, E), line(B, F))));
  EXPECT_TRUE(same_element(pts[1], meet(line(B, D), line(C, E))));
  EXPECT_TRUE(same_element(pts[2], meet(line(A, D), line(C, F))));
}

TEST(ForwardTest, OrbitMembersGiveTheSameLine) {
  const auto p = worked_example();
  for (const auto& arr : PascalArray::all()) {
    const auto line = pascal_line(p, arr).line;
    for (const auto& member : arr.orbit()) {
      const auto other = pascal_line_of(p, member);
      EXPECT_TRUE(same_element(line, other)) << member.code();
      for (const auto& x : crosshairs(p, member)) EXPECT_TRUE(incident(x, line));
    }
  }
}

TEST(ForwardTest, SixtyDistinctLinesOnWorkedExample) {
  const auto p = worked_example();
  const auto lines = all_sixty(p);
  ASSERT_EQ(lines.size(), 60u);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    EXPECT_EQ(lines[i].array, PascalArray::all()[i]);
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      EXPECT_FALSE(same_element(lines[i].line, lines[j].line));
    }
  }
}

TEST(ForwardTest, DistinctnessOnRandomDraws) {
  RationalGenerator gen(51);
  int checked = 0;
  int skipped = 0;
  while (checked < 100) {
    const auto p = testing::draw_sextuple(gen);
    if (!p) continue;
    try {
      EXPECT_EQ(all_sixty(*p).size(), 60u);
      ++checked;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegenerateConfiguration);
      ++skipped;
    }
  }
  EXPECT_LT(skipped, 50);
}

TEST(ForwardTest, PartitionSwapFixesFirstThreeLines) {
  // a <-> e, c <-> d, b <-> f
  const std::array<Label, 6> swap{E, F, D, C, A, B};
  RationalGenerator gen(52);
  for (int i = 0; i < 30; ++i) {
    const auto p = generic_sextuple(gen);
    const auto before = four_special_pascals(p);
    const auto after = four_special_pascals(p.permuted(swap));
    EXPECT_EQ(before.l1, after.l1);
    EXPECT_EQ(before.l2, after.l2);
    EXPECT_EQ(before.l3, after.l3);
  }
}

TEST(ForwardTest, SwapExchangingSecondAndThird) {
  // a <-> f, b <-> e, c <-> d
  const std::array<Label, 6> swap{F, E, D, C, B, A};
  RationalGenerator gen(53);
  for (int i = 0; i < 30; ++i) {
    const auto p = generic_sextuple(gen);
    const auto before = four_special_pascals(p);
    const auto after = four_special_pascals(p.permuted(swap));
    EXPECT_EQ(before.l1, after.l1);
    EXPECT_EQ(before.lstar, after.lstar);
    EXPECT_EQ(before.l2, after.l3);
    EXPECT_EQ(before.l3, after.l2);
  }
}

TEST(ForwardTest, SwapExchangingFirstAndThird) {
  // a <-> d, b <-> f, c <-> e
  const std::array<Label, 6> swap{D, F, E, A, C, B};
  RationalGenerator gen(54);
  for (int i = 0; i < 30; ++i) {
    const auto p = generic_sextuple(gen);
    const auto before = four_special_pascals(p);
    const auto after = four_special_pascals(p.permuted(swap));
    EXPECT_EQ(before.l2, after.l2);
    EXPECT_EQ(before.lstar, after.lstar);
    EXPECT_EQ(before.l1, after.l3);
    EXPECT_EQ(before.l3, after.l1);
  }
}

TEST(ForwardTest, QPoints) {
  RationalGenerator gen(55);
  for (int i = 0; i < 50; ++i) {
    const auto p = generic_sextuple(gen);
    const auto s = four_special_pascals(p);
    const auto q1 = ProjQuadratic::point(transvectant(chord(p, A, B), chord(p, E, F), 1));
    const auto q2 = ProjQuadratic::point(transvectant(chord(p, A, C), chord(p, D, E), 1));
    const auto q3 = ProjQuadratic::point(transvectant(chord(p, B, C), chord(p, D, F), 1));
    EXPECT_TRUE(same_element(meet(s.l2.line(), s.l3.line()), q1));
    EXPECT_TRUE(same_element(meet(s.l3.line(), s.l1.line()), q2));
    EXPECT_TRUE(same_element(meet(s.l1.line(), s.l2.line()), q3));
  }
}

TEST(ForwardTest, SteinerAndKirkman) {
  EXPECT_TRUE(steiner_concurrent(worked_example()));
  EXPECT_TRUE(kirkman_concurrent(worked_example()));
  RationalGenerator gen(56);
  for (int i = 0; i < 100; ++i) {
    const auto p = generic_sextuple(gen);
    EXPECT_TRUE(steiner_concurrent(p));
    EXPECT_TRUE(kirkman_concurrent(p));
  }
}

TEST(ForwardTest, NonSteinerTripleIsNotConcurrent) {
  const std::array<Arrangement, 3> triple{SpecialArrays::l1, SpecialArrays::l2, SpecialArrays::lstar};
  EXPECT_NE(coordinate_determinant(worked_example(), triple), Rational(0));
  EXPECT_EQ(coordinate_determinant(worked_example(), kSteinerTriple), Rational(0));
}

TEST(ForwardTest, PermutedMapsLabels) {
  const auto p = worked_example();
  const auto q = p.permuted({E, B, C, D, A, F});
  EXPECT_EQ(q[A], Rational(-4));
  EXPECT_EQ(q[E], Rational(7));
  EXPECT_EQ(q[B], Rational(-3));
}

}  // namespace
}  // namespace hexagram
