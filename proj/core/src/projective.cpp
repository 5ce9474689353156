#include "hexagram/projective.hpp"

namespace hexagram {

namespace {

void require_role(const ProjQuadratic& g, Role role, const char* what) {
  if (g.role() != role) {
    throw Error(ErrorCode::RoleMismatch, std::string(what) + " expects a " +
                                             (role == Role::Point ? "point" : "line"));
  }
}

}  // namespace

ProjQuadratic::ProjQuadratic(Form form, Role role) : form_(std::move(form)), role_(role) {
  if (form_.degree() != 2) {
    throw Error(ErrorCode::DegreeMismatch, "points and lines are binary quadratics");
  }
  if (form_.is_zero()) throw Error(ErrorCode::ZeroForm, "the zero quadratic is not a point or line");
}

ProjQuadratic ProjQuadratic::from_point_coords(const std::array<Rational, 3>& z) {
  return point(Form{z[0], z[1], z[2]});
}

ProjQuadratic ProjQuadratic::from_line_coords(const std::array<Rational, 3>& l) {
  return line(Form{l[2], l[1] * Rational(-1, 2), l[0]});
}

std::array<Rational, 3> ProjQuadratic::point_coords() const {
  return {form_[0], form_[1], form_[2]};
}

std::array<Rational, 3> ProjQuadratic::line_coords() const {
  return {form_[2], form_[1] * Rational(-2), form_[0]};
}

bool same_element(const ProjQuadratic& lhs, const ProjQuadratic& rhs) {
  return lhs.role() == rhs.role() && proportional(lhs.form(), rhs.form());
}

bool incident(const ProjQuadratic& point, const ProjQuadratic& line) {
  require_role(point, Role::Point, "incident");
  require_role(line, Role::Line, "incident");
  return transvectant(point.form(), line.form(), 2).is_zero();
}

ProjQuadratic join(const ProjQuadratic& p, const ProjQuadratic& q) {
  require_role(p, Role::Point, "join");
  require_role(q, Role::Point, "join");
  Form joined = transvectant(p.form(), q.form(), 1);
  if (joined.is_zero()) throw Error(ErrorCode::CoincidentPoints, "join of coincident points");
  return ProjQuadratic::line(std::move(joined));
}

ProjQuadratic meet(const ProjQuadratic& l, const ProjQuadratic& m) {
  require_role(l, Role::Line, "meet");
  require_role(m, Role::Line, "meet");
  Form met = transvectant(l.form(), m.form(), 1);
  if (met.is_zero()) throw Error(ErrorCode::CoincidentLines, "meet of coincident lines");
  return ProjQuadratic::point(std::move(met));
}

bool on_conic(const ProjQuadratic& g) {
  return transvectant(g.form(), g.form(), 2).is_zero();
}

ProjQuadratic conic_point(const Rational& t) {
  return ProjQuadratic::point(Form{Rational(1), t, t * t});
}

ProjQuadratic polar(const ProjQuadratic& g) {
  return {g.form(), g.is_point() ? Role::Line : Role::Point};
}

Form linear_form(const Rational& t) { return Form{Rational(1), t}; }

}  // namespace hexagram
