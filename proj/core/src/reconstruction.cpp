#include "hexagram/reconstruction.hpp"

#include <utility>

#include "hexagram/linalg.hpp"

namespace hexagram {

namespace {

Rational det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return a * d - b * c;
}

/// Partner q of p on a chord: chord / (x1 + p x2) must be proportional to x1 + q x2.
Rational partner(const ProjQuadratic& chord, const Rational& p, char letter) {
  const Form other = divide_exact(chord.form(), linear_form(p));
  if (other[0].is_zero()) {
    throw Error(ErrorCode::Inconsistent,
                std::string("partner of ") + letter + " lies at infinity on the conic");
  }
  return other[1] / other[0];
}

ParameterSolve solve_letter(const Form& u, const Form& v, const Form& w, char letter) {
  try {
    return solve_parameter(u, v, w);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("solving for ") + letter + ": " + e.what());
  }
}

}  // namespace

int rank(const Matrix3& z) {
  RationalMatrix m;
  for (const auto& row : z) m.emplace_back(row.begin(), row.end());
  return matrix_rank(std::move(m));
}

ParameterSolve solve_parameter(const Form& u, const Form& v, const Form& w) {
  const auto [m, n] = stage2_m_n(u, v, w);
  const Matrix3 z = z_matrix(m, n);

  ParameterSolve result;
  result.rank = rank(z);
  if (result.rank < 2) {
    throw Error(ErrorCode::RankDeficient,
                "Z has rank " + std::to_string(result.rank) + "; inputs are not generic");
  }
  if (result.rank == 3) {
    throw Error(ErrorCode::Inconsistent, "Z is nonsingular; no common root exists");
  }

  constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
  bool solved = false;
  for (const auto& [i, j] : kPairs) {
    const Rational denom = det2(z[i][1], z[i][2], z[j][1], z[j][2]);
    if (denom.is_zero()) continue;
    const Rational x = -det2(z[i][0], z[i][2], z[j][0], z[j][2]) / denom;
    const Rational x_squared = det2(z[i][0], z[i][1], z[j][0], z[j][1]) / denom;
    if (x_squared != x * x) {
      throw Error(ErrorCode::Inconsistent, "row pair solution is not of the form (1, x, x^2)");
    }
    if (!solved) {
      result.value = x;
      result.row_pair = {i, j};
      solved = true;
    } else {
      if (x != result.value) {
        throw Error(ErrorCode::Inconsistent, "row pairs disagree on the root");
      }
      result.cross_check = {i, j};
      break;
    }
  }
  if (!solved) {
    throw Error(ErrorCode::ZeroDenominator, "every row pair of Z has a zero denominator");
  }

  const Rational& x = result.value;
  for (const auto& row : z) {
    if (!(row[0] + row[1] * x + row[2] * x * x).is_zero()) {
      throw Error(ErrorCode::Inconsistent, "Z (1, x, x^2) does not vanish");
    }
  }
  return result;
}

Stage1 stage1_chords(const ProjQuadratic& l1, const ProjQuadratic& l2, const ProjQuadratic& l3) {
  auto q_point = [](const ProjQuadratic& l, const ProjQuadratic& m) {
    try {
      return meet(l, m);
    } catch (const Error& e) {
      throw Error(ErrorCode::DegeneratePencil, e.what());
    }
  };
  const ProjQuadratic mu1 = q_point(l2, l3);
  const ProjQuadratic mu2 = q_point(l3, l1);
  const ProjQuadratic mu3 = q_point(l1, l2);
  if (proportional(mu1.form(), mu2.form()) || proportional(mu2.form(), mu3.form()) ||
      proportional(mu1.form(), mu3.form())) {
    throw Error(ErrorCode::DegeneratePencil, "l1, l2, l3 are concurrent");
  }

  auto chord = [](const Form& u, const Form& v, const Form& w, const char* name) {
    Form c = psi(u, v, w);
    if (c.is_zero()) {
      throw Error(ErrorCode::VanishingPhi, std::string("psi vanished for chord ") + name);
    }
    return ProjQuadratic::line(std::move(c));
  };
  const Form& m1 = mu1.form();
  const Form& m2 = mu2.form();
  const Form& m3 = mu3.form();
  return Stage1{
      {mu1, mu2, mu3},
      ChordTriple{chord(m3, m1, m2, "AE"), chord(m1, m2, m3, "CD"), chord(m2, m3, m1, "BF")},
  };
}

ReconstructionResult reconstruct(const ProjQuadratic& l1, const ProjQuadratic& l2,
                                 const ProjQuadratic& l3, const ProjQuadratic& lstar) {
  const Stage1 stage1 = stage1_chords(l1, l2, l3);
  const ChordTriple& ch = stage1.chords;
  const Form& mu1 = stage1.q_points[0].form();
  const Form& mu2 = stage1.q_points[1].form();
  const Form& mu3 = stage1.q_points[2].form();

  // Each chord meets l* at one crosshair of l*.
  auto crosshair_on = [&](const ProjQuadratic& chord) {
    try {
      return meet(lstar, chord).form();
    } catch (const Error& e) {
      throw Error(ErrorCode::DegenerateConfiguration, std::string("l* contains a chord: ") + e.what());
    }
  };

  // a: Q2 lies on AC, l* passes through AD ^ BF.
  const ParameterSolve sa = solve_letter(ch.cd.form(), mu2, crosshair_on(ch.bf), 'a');
  // b: Q1 lies on AB, l* passes through BE ^ CD.
  const ParameterSolve sb = solve_letter(ch.ae.form(), mu1, crosshair_on(ch.cd), 'b');
  // c: Q3 lies on BC, l* passes through AE ^ CF.
  const ParameterSolve sc = solve_letter(ch.bf.form(), mu3, crosshair_on(ch.ae), 'c');

  const Rational e = partner(ch.ae, sa.value, 'a');
  const Rational f = partner(ch.bf, sb.value, 'b');
  const Rational d = partner(ch.cd, sc.value, 'c');

  std::optional<SextupleParams> params;
  try {
    params.emplace(std::array<Rational, 6>{sa.value, sb.value, sc.value, d, e, f});
  } catch (const Error& err) {
    throw Error(ErrorCode::RoundTripFailed, std::string("recovered points coincide: ") + err.what());
  }

  bool reproduces = false;
  try {
    const std::array<const ProjQuadratic*, 4> inputs{&l1, &l2, &l3, &lstar};
    const std::array<Arrangement, 4> arrays{SpecialArrays::l1, SpecialArrays::l2,
                                            SpecialArrays::l3, SpecialArrays::lstar};
    reproduces = true;
    for (int i = 0; i < 4; ++i) {
      if (!same_element(pascal_line_of(*params, arrays[i]), *inputs[i])) reproduces = false;
    }
  } catch (const Error& err) {
    throw Error(ErrorCode::RoundTripFailed,
                std::string("recovered sextuple is degenerate: ") + err.what());
  }
  if (!reproduces) {
    throw Error(ErrorCode::RoundTripFailed,
                "recovered sextuple does not reproduce the input Pascals");
  }

  return ReconstructionResult{*params, {{{'a', sa}, {'b', sb}, {'c', sc}}}};
}

ReconstructionResult reconstruct(const SpecialPascals& lines) {
  return reconstruct(lines.l1.line(), lines.l2.line(), lines.l3.line(), lines.lstar.line());
}

}  // namespace hexagram
