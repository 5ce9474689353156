#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hexagram/pascal_array.hpp"
#include "hexagram/projective.hpp"

namespace hexagram {

/// Conic parameters a..f of the six points [1, t, t^2]; pairwise distinct.
class SextupleParams {
 public:
  /// Throws RepeatedParameter when two values coincide.
  explicit SextupleParams(std::array<Rational, 6> values);

  const Rational& operator[](Label label) const { return values_[static_cast<int>(label)]; }
  const std::array<Rational, 6>& values() const noexcept { return values_; }

  ProjQuadratic point(Label label) const { return conic_point((*this)[label]); }

  /// New tuple whose entry for label L is this tuple's entry for perm[L]; a
  /// letter substitution such as a <-> e is an involutive perm.
  SextupleParams permuted(const std::array<Label, 6>& perm) const;

  friend bool operator==(const SextupleParams&, const SextupleParams&) = default;

 private:
  std::array<Rational, 6> values_;
};

/// Affine line coordinates <1, s, t>; the line is the quadratic (t, -s/2, 1).
struct LineCoords {
  Rational s;
  Rational t;

  Form form() const { return Form{t, s * Rational(-1, 2), Rational(1)}; }
  ProjQuadratic line() const { return ProjQuadratic::line(form()); }

  friend bool operator==(const LineCoords&, const LineCoords&) = default;
};

/// (s, t) with the line proportional to (t, -s/2, 1). Throws ChartDegenerate
/// when the line's z0-coefficient (Cayley z2) vanishes.
LineCoords line_coords(const ProjQuadratic& line);

struct PascalLine {
  PascalArray array;
  ProjQuadratic line;
  std::optional<LineCoords> coords;
};

/// The three crosshair points of [P1 P2 P3; P4 P5 P6]:
/// P1P5 ^ P2P4, P2P6 ^ P3P5, P1P6 ^ P3P4.
std::array<ProjQuadratic, 3> crosshairs(const SextupleParams& params, const Arrangement& arrangement);

/// Line through the crosshairs of one arrangement; all three incidences are
/// checked. Throws DegenerateConfiguration naming the arrangement.
ProjQuadratic pascal_line_of(const SextupleParams& params, const Arrangement& arrangement);

PascalLine pascal_line(const SextupleParams& params, const PascalArray& array);

/// The arrays of l1, l2, l3 and l* used for reconstruction.
struct SpecialArrays {
  static const Arrangement l1;     // [A D B; E C F]
  static const Arrangement l2;     // [A C F; E D B]
  static const Arrangement l3;     // [A D F; E C B]
  static const Arrangement lstar;  // [A B C; F D E]
};

struct SpecialPascals {
  LineCoords l1;
  LineCoords l2;
  LineCoords l3;
  LineCoords lstar;

  friend bool operator==(const SpecialPascals&, const SpecialPascals&) = default;
};

SpecialPascals four_special_pascals(const SextupleParams& params);

/// All 60 Pascals, ordered as PascalArray::all(). Throws
/// DegenerateConfiguration when two of them coincide.
std::vector<PascalLine> all_sixty(const SextupleParams& params);

/// det [[1, s1, t1], [1, s2, t2], [1, s3, t3]] of three Pascals.
Rational coordinate_determinant(const SextupleParams& params,
                                const std::array<Arrangement, 3>& arrays);

extern const std::array<Arrangement, 3> kSteinerTriple;
extern const std::array<Arrangement, 3> kKirkmanTriple;

bool steiner_concurrent(const SextupleParams& params);
bool kirkman_concurrent(const SextupleParams& params);

}  // namespace hexagram
