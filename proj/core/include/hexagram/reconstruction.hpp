#pragma once

#include <array>
#include <string>

#include "hexagram/forward.hpp"

namespace hexagram {

/// psi(U, V, W) = 6 (U, VW)_2 - U (V, W)_2 for quadratics U, V, W.
template <CoefficientRing R>
BinaryForm<R> psi(const BinaryForm<R>& u, const BinaryForm<R>& v, const BinaryForm<R>& w) {
  const R vw = transvectant(v, w, 2)[0];
  return transvectant(u, multiply(v, w), 2) * Rational(6) - vw * u;
}

/// 3 [(U,V)_2 W + (U,W)_2 V - (V,W)_2 U], the symmetric rewriting of psi.
template <CoefficientRing R>
BinaryForm<R> psi_symmetric(const BinaryForm<R>& u, const BinaryForm<R>& v,
                            const BinaryForm<R>& w) {
  const R uv = transvectant(u, v, 2)[0];
  const R uw = transvectant(u, w, 2)[0];
  const R vw = transvectant(v, w, 2)[0];
  return (uv * w + uw * v - vw * u) * Rational(3);
}

template <CoefficientRing R>
struct MNPair {
  BinaryForm<R> m;  // quartic
  BinaryForm<R> n;  // quadratic
};

/// M = 1/2 (U,W)_1 V + 1/2 (U,V)_1 W,
/// N = -1/2 (U, VW)_2 - 1/6 U (V,W)_2,
/// so that (U, (V,a)_1 (W,a)_1)_1 = (M, a^2)_2 + (N, a^2)_1 for every linear a.
template <CoefficientRing R>
MNPair<R> stage2_m_n(const BinaryForm<R>& u, const BinaryForm<R>& v, const BinaryForm<R>& w,
                     const Rational& m_weight = Rational(1, 2)) {
  BinaryForm<R> m =
      (multiply(transvectant(u, w, 1), v) + multiply(transvectant(u, v, 1), w)) * m_weight;
  const R vw = transvectant(v, w, 2)[0];
  BinaryForm<R> n = transvectant(u, multiply(v, w), 2) * Rational(-1, 2) -
                    (vw * u) * Rational(1, 6);
  return {std::move(m), std::move(n)};
}

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

/// The 3x3 system Z (1, x, x^2)^T = 0 whose root x is the unknown parameter:
///   [ m2 - n1     n0 - 2 m1    m0        ]
///   [ 2 m3 - n2   -4 m2        2 m1 + n0 ]
///   [ m4          -2 m3 - n2   m2 + n1   ]
template <CoefficientRing R>
std::array<std::array<R, 3>, 3> z_matrix(const BinaryForm<R>& m, const BinaryForm<R>& n) {
  if (m.degree() != 4 || n.degree() != 2) {
    throw Error(ErrorCode::DegreeMismatch, "Z needs a quartic M and a quadratic N");
  }
  const Rational two(2);
  return {{
      {m[2] - n[1], n[0] - m[1] * two, m[0]},
      {m[3] * two - n[2], m[2] * Rational(-4), m[1] * two + n[0]},
      {m[4], m[3] * Rational(-2) - n[2], m[2] + n[1]},
  }};
}

int rank(const Matrix3& z);

struct ParameterSolve {
  Rational value;
  /// 0-based rows used for the determinant ratio, e.g. {0, 1}.
  std::array<int, 2> row_pair{};
  /// Second row pair that confirmed the value, or {-1, -1} if none had a
  /// nonzero denominator.
  std::array<int, 2> cross_check{-1, -1};
  int rank = 0;
};

/// Root x of Z (1, x, x^2)^T = 0 built from M, N of (U, V, W). Tries row
/// pairs (1,2), (1,3), (2,3); the certificate Z (1, x, x^2)^T = 0 and
/// rank Z = 2 are checked before returning.
ParameterSolve solve_parameter(const Form& u, const Form& v, const Form& w);

/// Lines through pairs of the six points recovered from l1, l2, l3.
struct ChordTriple {
  ProjQuadratic ae;
  ProjQuadratic cd;
  ProjQuadratic bf;
};

struct Stage1 {
  /// Q1 = l2 ^ l3, Q2 = l3 ^ l1, Q3 = l1 ^ l2.
  std::array<ProjQuadratic, 3> q_points;
  ChordTriple chords;
};

/// mu_i from the three lines, then chords AE = psi(mu3, mu1, mu2),
/// CD = psi(mu1, mu2, mu3), BF = psi(mu2, mu3, mu1).
Stage1 stage1_chords(const ProjQuadratic& l1, const ProjQuadratic& l2, const ProjQuadratic& l3);

struct LetterDiagnostics {
  char letter = '?';
  ParameterSolve solve;
};

struct ReconstructionResult {
  SextupleParams params;
  /// Solves for a, b, c; d, e, f follow by exact division.
  std::array<LetterDiagnostics, 3> diagnostics;
};

/// The sextuple whose four special Pascals are the given lines (any nonzero
/// scaling). The result is verified by recomputing the four Pascals.
ReconstructionResult reconstruct(const ProjQuadratic& l1, const ProjQuadratic& l2,
                                 const ProjQuadratic& l3, const ProjQuadratic& lstar);
ReconstructionResult reconstruct(const SpecialPascals& lines);

}  // namespace hexagram
