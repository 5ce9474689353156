#include "hexagram/binary_form.hpp"

#include <sstream>

namespace hexagram {

Form divide_exact(const Form& q, const Form& linear) {
  if (linear.degree() != 1) {
    throw Error(ErrorCode::DegreeMismatch, "divisor must be a linear form");
  }
  if (linear.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero form");
  if (q.degree() < 1) {
    throw Error(ErrorCode::NotDivisible, "a constant form has no linear factor");
  }

  // Q = (l0 x1 + l1 x2) * sum_k p_k x1^(n-1-k) x2^k over raw monomials.
  const auto qraw = q.monomial_coeffs();
  const Rational& l0 = linear[0];
  const Rational& l1 = linear[1];
  const int n = q.degree();
  std::vector<Rational> praw(static_cast<std::size_t>(n));

  if (!l0.is_zero()) {
    // Peel off from the x1^n end: q_k = l0 p_k + l1 p_{k-1}.
    for (int k = 0; k < n; ++k) {
      Rational rest = qraw[static_cast<std::size_t>(k)];
      if (k > 0) rest -= l1 * praw[static_cast<std::size_t>(k - 1)];
      praw[static_cast<std::size_t>(k)] = rest / l0;
    }
    if (qraw[static_cast<std::size_t>(n)] != l1 * praw[static_cast<std::size_t>(n - 1)]) {
      throw Error(ErrorCode::NotDivisible, "linear form does not divide " + to_string(q));
    }
  } else {
    // L = l1 x2: Q must have no pure x1^n term.
    if (!qraw[0].is_zero()) {
      throw Error(ErrorCode::NotDivisible, "linear form does not divide " + to_string(q));
    }
    for (int k = 0; k < n; ++k) {
      praw[static_cast<std::size_t>(k)] = qraw[static_cast<std::size_t>(k + 1)] / l1;
    }
  }
  return Form::from_monomials(std::move(praw));
}

std::string to_string(const Form& form) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < form.coeffs().size(); ++i) {
    if (i > 0) out << ", ";
    out << form.coeffs()[i];
  }
  out << ")";
  return out.str();
}

}  // namespace hexagram
