#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hexagram/rational.hpp"

namespace hexagram {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Each polynomial owns its variable list (sorted by name, only variables that
/// actually occur) and a map from dense exponent vectors over that list to
/// nonzero coefficients. Binary operations merge variable lists by name. Terms
/// are kept in graded-lexicographic order, which fixes the printed form; two
/// polynomials are equal exactly when their normalized representations are.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint16_t>;

  struct GradedLex {
    bool operator()(const Exponents& lhs, const Exponents& rhs) const;
  };
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(const Rational& constant);
  /// Builds from an arbitrary term list: sums duplicates, drops zero
  /// coefficients and unused variables. Variable names must be unique.
  MultiPoly(std::vector<std::string> variables,
            std::vector<std::pair<Exponents, Rational>> terms);

  static MultiPoly variable(const std::string& name);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const;

  /// Re-runs normalization; a no-op on any value produced by this class.
  MultiPoly normalized() const;

  /// Exact value under the assignment; throws MissingAssignment if a variable
  /// of the polynomial has no value.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  /// Canonical text, leading term first, e.g. "x^2 - 1/2*x*y + 3".
  std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend MultiPoly operator*(const Rational& lhs, MultiPoly rhs) { return rhs *= lhs; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return lhs.variables_ == rhs.variables_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void add_scaled(const MultiPoly& other, const Rational& factor);
  void drop_unused_variables();
  /// Rewrites this polynomial over `merged` (a sorted superset of its variables).
  void widen_to(const std::vector<std::string>& merged);

  std::vector<std::string> variables_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& poly);

inline bool is_zero(const MultiPoly& poly) noexcept { return poly.is_zero(); }

}  // namespace hexagram
