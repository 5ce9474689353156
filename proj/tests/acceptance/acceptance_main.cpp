// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "generators.hpp"
#include "hexagram/identities.hpp"
#include "hexagram/reconstruction.hpp"

namespace {

using namespace hexagram;
using hexagram::testing::generic_sextuple;
using hexagram::testing::worked_example;
using hexagram::testing::RationalGenerator;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void run(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("unexpected exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    out.ok = false;
    out.detail += " (over time limit)";
  }
  if (!out.ok) ++failures;
  std::printf("%s criterion %d: %s [%.3fs", out.ok ? "PASS" : "FAIL", number, title, secs);
  if (limit_seconds > 0) std::printf(" < %.0fs", limit_seconds);
  std::printf("] %s\n", out.detail.c_str());
  std::fflush(stdout);
}

Outcome forward_example() {
  const auto l = four_special_pascals(worked_example());
  const bool ok = l.l1.form() == Form{Rational(5, 36), Rational(37, 72), 1} &&
                  l.l2.form() == Form{Rational(-49, 349), Rational(42, 349), 1} &&
                  l.l3.form() == Form{Rational(-1, 16), Rational(-33, 544), 1} &&
                  l.lstar.form() == Form{Rational(7, 74), Rational(21, 148), 1};
  return {ok, "l1=" + to_string(l.l1.form()) + " l2=" + to_string(l.l2.form()) +
                  " l3=" + to_string(l.l3.form()) + " l*=" + to_string(l.lstar.form())};
}

Outcome reconstruct_example() {
  const Form l1{Rational(5, 36), Rational(37, 72), 1};
  const Form l2{Rational(-49, 349), Rational(42, 349), 1};
  const Form l3{Rational(-1, 16), Rational(-33, 544), 1};
  const Form ls{Rational(7, 74), Rational(21, 148), 1};
  const auto result = reconstruct(ProjQuadratic::line(l1), ProjQuadratic::line(l2),
                                  ProjQuadratic::line(l3), ProjQuadratic::line(ls));
  std::string got;
  for (const auto& v : result.params.values()) got += v.to_string() + " ";
  return {result.params == worked_example(), "got " + got};
}

Outcome round_trip() {
  RationalGenerator gen(1001);
  int rejected = 0;
  int mismatches = 0;
  const int trials = 100;
  for (int i = 0; i < trials; ++i) {
    const auto p = generic_sextuple(gen, &rejected);
    try {
      if (!(reconstruct(four_special_pascals(p)).params == p)) ++mismatches;
    } catch (const Error&) {
      ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(trials) + " sextuples, " + std::to_string(mismatches) +
                               " mismatches, " + std::to_string(rejected) + " degenerate draws skipped"};
}

bool collinear_and_distinct(const SextupleParams& p) {
  const auto lines = all_sixty(p);  // checks pairwise nonproportionality
  if (lines.size() != 60) return false;
  for (const auto& pl : lines) {
    for (const auto& x : crosshairs(p, pl.array.arrangement())) {
      if (!transvectant(x.form(), pl.line.form(), 2).is_zero()) return false;
    }
  }
  return true;
}

Outcome collinearity() {
  if (!collinear_and_distinct(worked_example())) return {false, "worked example"};
  RationalGenerator gen(1002);
  int checked = 0;
  int skipped = 0;
  while (checked < 20) {
    const auto p = hexagram::testing::draw_sextuple(gen);
    if (!p) {
      ++skipped;
      continue;
    }
    try {
      if (!collinear_and_distinct(*p)) return {false, "incidence failed"};
      ++checked;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateConfiguration) throw;
      ++skipped;
    }
  }
  return {true, "worked example + 20 sextuples, 60 lines each, " + std::to_string(skipped) + " draws skipped"};
}

Outcome steiner_kirkman() {
  auto both = [](const SextupleParams& p) {
    return coordinate_determinant(p, kSteinerTriple).is_zero() &&
           coordinate_determinant(p, kKirkmanTriple).is_zero();
  };
  if (!both(worked_example())) return {false, "worked example"};
  RationalGenerator gen(1003);
  for (int i = 0; i < 50; ++i) {
    if (!both(generic_sextuple(gen))) return {false, "random sextuple " + std::to_string(i)};
  }
  return {true, "worked example + 50 sextuples"};
}

Outcome symmetries() {
  constexpr Label A = Label::A, B = Label::B, C = Label::C, D = Label::D, E = Label::E, F = Label::F;
  RationalGenerator gen(1004);
  for (int i = 0; i < 20; ++i) {
    const auto p = generic_sextuple(gen);
    const auto base = four_special_pascals(p);
    const auto s1 = four_special_pascals(p.permuted({E, F, D, C, A, B}));
    const auto s2 = four_special_pascals(p.permuted({F, E, D, C, B, A}));
    const auto s3 = four_special_pascals(p.permuted({D, F, E, A, C, B}));
    if (!(s1.l1 == base.l1 && s1.l2 == base.l2 && s1.l3 == base.l3)) return {false, "(a e)(c d)(b f)"};
    if (!(s2.l1 == base.l1 && s2.lstar == base.lstar && s2.l2 == base.l3 && s2.l3 == base.l2)) {
      return {false, "(a f)(b e)(c d)"};
    }
    if (!(s3.l2 == base.l2 && s3.lstar == base.lstar && s3.l1 == base.l3 && s3.l3 == base.l1)) {
      return {false, "(a d)(b f)(c e)"};
    }
  }
  return {true, "3 swaps on 20 sextuples"};
}

Outcome identity_suite() {
  std::string failed;
  int count = 0;
  for (const auto& r : identities::run_all()) {
    ++count;
    if (!r.passed) failed += r.name + " ";
  }
  const auto report = identities::s_basis_facts();
  const bool basis_ok = report.s_coords == std::array<Rational, 5>{-2, -1, 1, -2, 2} &&
                        report.kernel_dimension == 2 && report.homogenization_det == Rational(1) &&
                        report.j_match && report.k_match && report.l_match;
  const auto k = identities::chord_identity_constant();
  if (!basis_ok) failed += "basis-facts ";
  if (!k || *k != Rational(3, 4)) failed += "chord-constant ";
  return {failed.empty(), failed.empty() ? std::to_string(count) + " checks exact, chord constant 3/4"
                                         : "failed: " + failed};
}

Outcome negative_paths() {
  std::vector<std::pair<std::string, std::function<void()>>> cases;
  const auto good = four_special_pascals(worked_example());

  // Repeated points.
  cases.emplace_back("repeated a=b", [] { SextupleParams({1, 1, 2, 3, 4, 5}); });
  cases.emplace_back("repeated a=f", [] { SextupleParams({Rational(1, 2), 3, 4, 5, 6, Rational(2, 4)}); });
  cases.emplace_back("all equal", [] { SextupleParams({0, 0, 0, 0, 0, 0}); });

  // Perturbed coordinates of realizable quadruples.
  const Rational eps(1, 1000);
  cases.emplace_back("perturb l* t", [=] { auto l = good; l.lstar.t += eps; reconstruct(l); });
  cases.emplace_back("perturb l* s", [=] { auto l = good; l.lstar.s -= eps; reconstruct(l); });
  cases.emplace_back("perturb l1 s", [=] { auto l = good; l.l1.s += eps; reconstruct(l); });
  cases.emplace_back("perturb l2 t", [=] { auto l = good; l.l2.t += eps; reconstruct(l); });
  cases.emplace_back("perturb l3 s", [=] { auto l = good; l.l3.s += Rational(1); reconstruct(l); });
  cases.emplace_back("l3 replaced by l1", [=] { auto l = good; l.l3 = l.l1; reconstruct(l); });
  cases.emplace_back("l* replaced by l1", [=] { auto l = good; l.lstar = l.l1; reconstruct(l); });
  RationalGenerator gen(1005);
  for (int i = 0; i < 3; ++i) {
    auto l = four_special_pascals(generic_sextuple(gen));
    l.lstar.t += Rational(1, 7);
    cases.emplace_back("random perturbed l* " + std::to_string(i), [=] { reconstruct(l); });
  }

  // Random quadruples of lines.
  for (int i = 0; i < 4; ++i) {
    const SpecialPascals l{{gen.next(), gen.next()}, {gen.next(), gen.next()},
                           {gen.next(), gen.next()}, {gen.next(), gen.next()}};
    cases.emplace_back("random lines " + std::to_string(i), [=] { reconstruct(l); });
  }

  // Degenerate line configurations.
  cases.emplace_back("concurrent l1 l2 l3", [] {
    const auto l1 = ProjQuadratic::from_line_coords({1, 0, 0});
    const auto l2 = ProjQuadratic::from_line_coords({0, 1, 0});
    const auto l3 = ProjQuadratic::from_line_coords({1, 1, 0});
    reconstruct(l1, l2, l3, ProjQuadratic::from_line_coords({1, 2, 3}));
  });
  cases.emplace_back("all four equal", [=] {
    const auto l = good.l1.line();
    reconstruct(l, l, l, l);
  });
  cases.emplace_back("line off the chart", [] {
    (void)line_coords(ProjQuadratic::line(Form{0, 1, 0}));
  });

  int ok = 0;
  std::string bad;
  for (const auto& [name, fn] : cases) {
    try {
      fn();
      bad += name + " (no error) ";
    } catch (const Error& e) {
      ++ok;
    } catch (const std::exception& e) {
      bad += name + " (unstructured: " + e.what() + ") ";
    }
  }
  return {ok == static_cast<int>(cases.size()) && cases.size() >= 20,
          std::to_string(ok) + "/" + std::to_string(cases.size()) + " structured errors " + bad};
}

}  // namespace

int main() {
  run(1, "worked example forward Pascals exact", 1, forward_example);
  run(2, "worked example reconstruction exact", 1, reconstruct_example);
  run(3, "round trip on random sextuples", 60, round_trip);
  run(4, "collinearity and distinctness of all 60 Pascals", 30, collinearity);
  run(5, "Steiner and Kirkman determinants vanish", 10, steiner_kirkman);
  run(6, "letter-swap symmetries of the special Pascals", 0, symmetries);
  run(7, "symbolic identity suite", 60, identity_suite);
  run(8, "negative paths raise structured errors", 0, negative_paths);
  return failures == 0 ? 0 : 1;
}
