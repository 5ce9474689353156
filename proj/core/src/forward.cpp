#include "hexagram/forward.hpp"

#include <utility>

namespace hexagram {

namespace {

using enum Label;

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

[[noreturn]] void degenerate(const Arrangement& arrangement, const std::string& why) {
  throw Error(ErrorCode::DegenerateConfiguration, "array " + arrangement.code() + ": " + why);
}

}  // namespace

SextupleParams::SextupleParams(std::array<Rational, 6> values) : values_(std::move(values)) {
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (values_[i] == values_[j]) {
        throw Error(ErrorCode::RepeatedParameter,
                    std::string("repeated parameter: ") + to_char(static_cast<Label>(i)) + " = " +
                        to_char(static_cast<Label>(j)) + " = " + values_[i].to_string());
      }
    }
  }
}

SextupleParams SextupleParams::permuted(const std::array<Label, 6>& perm) const {
  std::array<Rational, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = values_[static_cast<int>(perm[i])];
  return SextupleParams(std::move(out));
}

LineCoords line_coords(const ProjQuadratic& line) {
  const Form& g = line.form();
  if (g[2].is_zero()) {
    throw Error(ErrorCode::ChartDegenerate,
                "line " + to_string(g) + " has no coordinates of the form <1, s, t>");
  }
  return LineCoords{g[1] * Rational(-2) / g[2], g[0] / g[2]};
}

std::array<ProjQuadratic, 3> crosshairs(const SextupleParams& params,
                                        const Arrangement& arrangement) {
  auto p = [&](int row, int col) { return params.point(arrangement.at(row, col)); };
  // Column i's top joined with column j's bottom, met with the transposed pair.
  auto cross = [&](int i, int j) {
    try {
      return meet(join(p(0, i), p(1, j)), join(p(0, j), p(1, i)));
    } catch (const Error& e) {
      degenerate(arrangement, e.what());
    }
  };
  return {cross(0, 1), cross(1, 2), cross(0, 2)};
}

ProjQuadratic pascal_line_of(const SextupleParams& params, const Arrangement& arrangement) {
  const auto points = crosshairs(params, arrangement);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (proportional(points[i].form(), points[j].form())) {
        degenerate(arrangement, "coincident crosshair points");
      }
    }
  }
  ProjQuadratic line = join(points[0], points[1]);
  for (const auto& x : points) {
    if (!incident(x, line)) degenerate(arrangement, "crosshair points are not collinear");
  }
  return line;
}

PascalLine pascal_line(const SextupleParams& params, const PascalArray& array) {
  ProjQuadratic line = pascal_line_of(params, array.arrangement());
  std::optional<LineCoords> coords;
  if (!line.form()[2].is_zero()) coords = line_coords(line);
  return PascalLine{array, std::move(line), std::move(coords)};
}

const Arrangement SpecialArrays::l1{{A, D, B}, {E, C, F}};
const Arrangement SpecialArrays::l2{{A, C, F}, {E, D, B}};
const Arrangement SpecialArrays::l3{{A, D, F}, {E, C, B}};
const Arrangement SpecialArrays::lstar{{A, B, C}, {F, D, E}};

SpecialPascals four_special_pascals(const SextupleParams& params) {
  return SpecialPascals{
      line_coords(pascal_line_of(params, SpecialArrays::l1)),
      line_coords(pascal_line_of(params, SpecialArrays::l2)),
      line_coords(pascal_line_of(params, SpecialArrays::l3)),
      line_coords(pascal_line_of(params, SpecialArrays::lstar)),
  };
}

std::vector<PascalLine> all_sixty(const SextupleParams& params) {
  std::vector<PascalLine> lines;
  lines.reserve(60);
  for (const auto& array : PascalArray::all()) lines.push_back(pascal_line(params, array));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (proportional(lines[i].line.form(), lines[j].line.form())) {
        throw Error(ErrorCode::DegenerateConfiguration,
                    "Pascals " + lines[i].array.code() + " and " + lines[j].array.code() +
                        " coincide");
      }
    }
  }
  return lines;
}

Rational coordinate_determinant(const SextupleParams& params,
                                const std::array<Arrangement, 3>& arrays) {
  std::array<std::array<Rational, 3>, 3> rows;
  for (int i = 0; i < 3; ++i) {
    const LineCoords c = line_coords(pascal_line_of(params, arrays[i]));
    rows[i] = {Rational(1), c.s, c.t};
  }
  return det3(rows);
}

const std::array<Arrangement, 3> kSteinerTriple{
    Arrangement{{A, B, C}, {F, E, D}},
    Arrangement{{A, B, C}, {D, F, E}},
    Arrangement{{A, B, C}, {E, D, F}},
};

const std::array<Arrangement, 3> kKirkmanTriple{
    Arrangement{{A, B, C}, {F, E, D}},
    Arrangement{{A, D, F}, {C, E, B}},
    Arrangement{{A, C, F}, {E, B, D}},
};

bool steiner_concurrent(const SextupleParams& params) {
  return coordinate_determinant(params, kSteinerTriple).is_zero();
}

bool kirkman_concurrent(const SextupleParams& params) {
  return coordinate_determinant(params, kKirkmanTriple).is_zero();
}

}  // namespace hexagram
