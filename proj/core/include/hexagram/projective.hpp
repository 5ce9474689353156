#pragma once

#include <array>

#include "hexagram/binary_form.hpp"

namespace hexagram {

enum class Role { Point, Line };

/// A nonzero binary quadratic G read either as the point P_G = [g0, g1, g2] or
/// as the line L_G = <g2, -2 g1, g0>. The role is a tag only; arithmetic is the
/// same for both readings and no representative is ever normalized.
class ProjQuadratic {
 public:
  ProjQuadratic(Form form, Role role);

  static ProjQuadratic point(Form form) { return {std::move(form), Role::Point}; }
  static ProjQuadratic line(Form form) { return {std::move(form), Role::Line}; }
  static ProjQuadratic from_point_coords(const std::array<Rational, 3>& z);
  static ProjQuadratic from_line_coords(const std::array<Rational, 3>& l);

  const Form& form() const noexcept { return form_; }
  Role role() const noexcept { return role_; }
  bool is_point() const noexcept { return role_ == Role::Point; }
  bool is_line() const noexcept { return role_ == Role::Line; }

  /// [g0, g1, g2]
  std::array<Rational, 3> point_coords() const;
  /// <g2, -2 g1, g0>
  std::array<Rational, 3> line_coords() const;

  friend bool operator==(const ProjQuadratic&, const ProjQuadratic&) = default;

 private:
  Form form_;
  Role role_;
};

/// Same role and proportional forms.
bool same_element(const ProjQuadratic& lhs, const ProjQuadratic& rhs);

/// P_G on L_H iff (G,H)_2 = 0.
bool incident(const ProjQuadratic& point, const ProjQuadratic& line);

/// Line through two distinct points, L_{(G,H)_1}.
ProjQuadratic join(const ProjQuadratic& p, const ProjQuadratic& q);

/// Intersection of two distinct lines, P_{(G,H)_1}.
ProjQuadratic meet(const ProjQuadratic& l, const ProjQuadratic& m);

/// On the conic z1^2 = z0 z2 iff (G,G)_2 = 2 (g1^2 - g0 g2) = 0.
bool on_conic(const ProjQuadratic& g);

/// The conic point [1, t, t^2], i.e. the form (x1 + t x2)^2.
ProjQuadratic conic_point(const Rational& t);

/// Polarity with respect to the conic: P_G <-> L_G. Involutive.
ProjQuadratic polar(const ProjQuadratic& g);

/// The linear form x1 + t x2, Cayley coefficients (1, t).
Form linear_form(const Rational& t);

}  // namespace hexagram
