#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hexagram/linalg.hpp"
#include "hexagram/multipoly.hpp"
#include "hexagram/reconstruction.hpp"

/// Symbolic checks of the transvectant identities behind the reconstruction,
/// by direct expansion over MultiPoly coefficients. The expressions are
/// templates over the coefficient ring so the same formulas can also be
/// evaluated with plain rationals at random specializations.
namespace hexagram::identities {

/// A point (u1, u2) of the binary domain; its linear form is u1 x1 + u2 x2.
template <CoefficientRing R>
struct Point2 {
  R first;
  R second;
};

using SymbolicPoint = Point2<MultiPoly>;

/// Fresh indeterminates name1, name2.
SymbolicPoint symbolic_point(const std::string& name);

/// Six points indexed a..f.
template <CoefficientRing R>
using Sextet = std::array<Point2<R>, 6>;

Sextet<MultiPoly> symbolic_sextet();

/// Generic quadratic (name0, name1, name2) with 3 fresh indeterminates.
BinaryForm<MultiPoly> symbolic_quadratic(const std::string& name);

/// (uv) = u1 v2 - u2 v1
template <CoefficientRing R>
R bracket(const Point2<R>& u, const Point2<R>& v) {
  return u.first * v.second - u.second * v.first;
}

template <CoefficientRing R>
BinaryForm<R> linear(const Point2<R>& u) {
  return BinaryForm<R>(std::vector<R>{u.first, u.second});
}

template <CoefficientRing R>
BinaryForm<R> product(const Point2<R>& u, const Point2<R>& v) {
  return multiply(linear(u), linear(v));
}

enum Letter : int { kA = 0, kB, kC, kD, kE, kF };

/// Substitution of letters: result[L] = pts[perm[L]].
template <CoefficientRing R>
Sextet<R> permute(const Sextet<R>& pts, const std::array<int, 6>& perm) {
  Sextet<R> out = pts;
  for (int i = 0; i < 6; ++i) out[i] = pts[perm[i]];
  return out;
}

/// J: a <-> b, e <-> f.   K: b <-> c, f <-> d.   L: a <-> e, b <-> f, c <-> d.
inline constexpr std::array<int, 6> kJ{kB, kA, kC, kD, kF, kE};
inline constexpr std::array<int, 6> kK{kA, kC, kB, kF, kE, kD};
inline constexpr std::array<int, 6> kL{kE, kF, kD, kC, kA, kB};

// --- Grassmann-Pluecker -----------------------------------------------------

template <CoefficientRing R>
R gp_residual(const Point2<R>& u, const Point2<R>& v, const Point2<R>& w, const Point2<R>& z) {
  return bracket(u, v) * bracket(w, z) - bracket(u, w) * bracket(v, z) +
         bracket(u, z) * bracket(v, w);
}

// --- psi rewriting ----------------------------------------------------------

/// k (U,VW)_2 - U (V,W)_2 - 3[(U,V)_2 W + (U,W)_2 V - (V,W)_2 U]; zero for k = 6.
template <CoefficientRing R>
BinaryForm<R> psi_rewriting_residual(const BinaryForm<R>& u, const BinaryForm<R>& v,
                              const BinaryForm<R>& w, const Rational& k = Rational(6)) {
  const R vw = transvectant(v, w, 2)[0];
  return transvectant(u, multiply(v, w), 2) * R(k) - vw * u - psi_symmetric(u, v, w);
}

// --- four-to-two ------------------------------------------------------------

/// Residuals of the three expansions of (alpha beta, gamma delta)_1:
/// transverse partition, alternate partition, and their four-term average.
template <CoefficientRing R>
std::array<BinaryForm<R>, 3> four_to_two_residuals(const Point2<R>& al, const Point2<R>& be,
                                                 const Point2<R>& ga, const Point2<R>& de) {
  const Rational half(1, 2);
  const BinaryForm<R> lhs = transvectant(product(al, be), product(ga, de), 1);
  const BinaryForm<R> transverse =
      (bracket(al, ga) * product(be, de) + bracket(be, de) * product(al, ga)) * R(half);
  const BinaryForm<R> alternate =
      (bracket(al, de) * product(be, ga) + bracket(be, ga) * product(al, de)) * R(half);
  const BinaryForm<R> naive = (transverse + alternate) * R(half);
  return {lhs - transverse, lhs - alternate, lhs - naive};
}

// --- chord identity ---------------------------------------------------------

/// U = (bc, df)_1, V = (ac, de)_1, W = (ab, ef)_1.
template <CoefficientRing R>
std::array<BinaryForm<R>, 3> chord_uvw(const Sextet<R>& p) {
  return {
      transvectant(product(p[kB], p[kC]), product(p[kD], p[kF]), 1),
      transvectant(product(p[kA], p[kC]), product(p[kD], p[kE]), 1),
      transvectant(product(p[kA], p[kB]), product(p[kE], p[kF]), 1),
  };
}

/// S = (da)(fc)(eb) - (ce)(bd)(af)
template <CoefficientRing R>
R s_invariant(const Sextet<R>& p) {
  return bracket(p[kD], p[kA]) * bracket(p[kF], p[kC]) * bracket(p[kE], p[kB]) -
         bracket(p[kC], p[kE]) * bracket(p[kB], p[kD]) * bracket(p[kA], p[kF]);
}

/// S' = (cd)(bf, ae)_2 + (ae)(bf, cd)_2 + (bf)(cd, ae)_2 - 1/2 (ae)(bf)(cd),
/// with xy standing for the quadratic x_x y_x.
template <CoefficientRing R>
R s_prime(const Sextet<R>& p) {
  const auto bf = product(p[kB], p[kF]);
  const auto ae = product(p[kA], p[kE]);
  const auto cd = product(p[kC], p[kD]);
  const R b_cd = bracket(p[kC], p[kD]);
  const R b_ae = bracket(p[kA], p[kE]);
  const R b_bf = bracket(p[kB], p[kF]);
  return b_cd * transvectant(bf, ae, 2)[0] + b_ae * transvectant(bf, cd, 2)[0] +
         b_bf * transvectant(cd, ae, 2)[0] - b_ae * b_bf * b_cd * R(Rational(1, 2));
}

/// T = (cb)(de)(fa) + (ae)(bd)(fc) + (bc)(fe)(da) + (ae)(bf)(cd); identically zero.
template <CoefficientRing R>
R t_expression(const Sextet<R>& p) {
  auto br = [&](int i, int j) { return bracket(p[i], p[j]); };
  return br(kC, kB) * br(kD, kE) * br(kF, kA) + br(kA, kE) * br(kB, kD) * br(kF, kC) +
         br(kB, kC) * br(kF, kE) * br(kD, kA) + br(kA, kE) * br(kB, kF) * br(kC, kD);
}

/// (cd)(bf) S a_x e_x, the chord identity's right-hand side without its constant.
template <CoefficientRing R>
BinaryForm<R> chord_rhs_unscaled(const Sextet<R>& p) {
  const R scalar = bracket(p[kC], p[kD]) * bracket(p[kB], p[kF]) * s_invariant(p);
  return scalar * product(p[kA], p[kE]);
}

/// psi(U,V,W) - k (cd)(bf) S a_x e_x
template <CoefficientRing R>
BinaryForm<R> chord_residual(const Sextet<R>& p, const Rational& k = Rational(3, 4)) {
  const auto [u, v, w] = chord_uvw(p);
  return psi(u, v, w) - chord_rhs_unscaled(p) * R(k);
}

// --- second-stage identity --------------------------------------------------

/// (U, (V,a)_1 (W,a)_1)_1 - (M, a^2)_2 - (N, a^2)_1 with M built using the
/// given weight (1/2 makes it vanish).
template <CoefficientRing R>
BinaryForm<R> ax_residual(const BinaryForm<R>& u, const BinaryForm<R>& v, const BinaryForm<R>& w,
                          const BinaryForm<R>& a, const Rational& m_weight = Rational(1, 2)) {
  const auto lhs = transvectant(u, multiply(transvectant(v, a, 1), transvectant(w, a, 1)), 1);
  const auto [m, n] = stage2_m_n(u, v, w, m_weight);
  const auto a2 = multiply(a, a);
  return lhs - transvectant(m, a2, 2) - transvectant(n, a2, 1);
}

// --- the B basis ------------------------------------------------------------

/// B1 = (ae)(bf)(cd), B2 = (ab)(ec)(fd), B3 = (ad)(bc)(ef),
/// B4 = (ab)(cd)(fe), B5 = (ea)(bc)(df).
template <CoefficientRing R>
std::array<R, 5> b_basis(const Sextet<R>& p) {
  auto br = [&](int i, int j) { return bracket(p[i], p[j]); };
  return {
      br(kA, kE) * br(kB, kF) * br(kC, kD), br(kA, kB) * br(kE, kC) * br(kF, kD),
      br(kA, kD) * br(kB, kC) * br(kE, kF), br(kA, kB) * br(kC, kD) * br(kF, kE),
      br(kE, kA) * br(kB, kC) * br(kD, kF),
  };
}

using Matrix5 = std::array<std::array<Rational, 5>, 5>;

/// Expected generator actions (column i = image of B_i).
Matrix5 reference_j_matrix();
Matrix5 reference_k_matrix();
Matrix5 reference_l_matrix();

struct SBasisReport {
  bool independent = false;
  std::array<Rational, 5> s_coords{};
  bool s_coords_match = false;
  bool s_expansion_exact = false;
  Matrix5 j{}, k{}, l{};
  bool j_match = false, k_match = false, l_match = false;
  bool actions_exact = false;
  int invariant_system_rank = 0;
  int kernel_dimension = 0;
  bool system_matches_reference = false;
  bool s_in_kernel = false;
  Rational homogenization_det;
  bool quadric_matches = false;
  bool s_specialization_matches = false;

  bool passed() const;
};

SBasisReport s_basis_facts(std::uint64_t seed = 0x5eed);

// --- oriented six-cycles ----------------------------------------------------

struct DirectedEdge {
  int from;
  int to;
};

/// Ways to add edges to `base` so that all six letters form one directed
/// 6-cycle; each completion lists only the added edges.
std::vector<std::vector<DirectedEdge>> cycle_completions(const std::vector<DirectedEdge>& base);

/// Product of the brackets (to from) over the edges.
MultiPoly bracket_monomial(const std::vector<DirectedEdge>& edges, const Sextet<MultiPoly>& p);

// --- verification entry points ---------------------------------------------

bool verify_gp();
bool verify_psi_rewriting();
bool verify_four_to_two();
/// psi(U,V,W) = 3/4 (cd)(bf) S a_x e_x together with S' = S, T = 0,
/// (c_x d_x, c_x d_x)_2 = -1/2 (cd)^2 and (U,V)_2 = 1/4 (cd) S'.
bool verify_chord_identity();
/// The constant k with psi(U,V,W) = k (cd)(bf) S a_x e_x, if one exists.
std::optional<Rational> chord_identity_constant();
bool verify_second_stage();
/// Z (1, t, t^2) equals the monomial coefficients of (M, a^2)_2 + (N, a^2)_1
/// for a_x = x1 + t x2 and generic M, N.
bool verify_z_matrix();
bool six_cycle_recipe_check();
/// Every identity above evaluated with plain rationals at random points.
bool random_specialization_check(std::uint64_t seed, int trials);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the whole suite in a fixed order.
std::vector<CheckResult> run_all(std::uint64_t seed = 0x5eed);

}  // namespace hexagram::identities
