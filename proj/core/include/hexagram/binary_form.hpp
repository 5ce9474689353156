#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hexagram/error.hpp"
#include "hexagram/rational.hpp"

namespace hexagram {

/// A commutative ring containing the rationals: the coefficient rings binary
/// forms are generic over (Rational, MultiPoly).
template <class R>
concept CoefficientRing = std::equality_comparable<R> && requires(R a, R b, Rational q) {
  R(q);
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

namespace detail {

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

/// n (n-1) ... (n-k+1); zero when k > n.
inline std::int64_t falling_factorial(int n, int k) {
  if (k > n) return 0;
  std::int64_t result = 1;
  for (int i = 0; i < k; ++i) result *= (n - i);
  return result;
}

inline std::int64_t factorial(int n) { return falling_factorial(n, n); }

// Unqualified so that ADL finds is_zero for rings declared after this header.
template <class R>
bool coeff_is_zero(const R& c) {
  return is_zero(c);
}

}  // namespace detail

/// Homogeneous binary form of a declared degree n in Cayley notation:
/// (z_0, ..., z_n ; x1, x2)^n = sum_i z_i C(n,i) x1^(n-i) x2^i.
///
/// The degree is part of the value; the zero form of degree 2 differs from the
/// zero form of degree 4.
template <CoefficientRing R>
class BinaryForm {
 public:
  /// Form of degree coeffs.size() - 1 with exactly these Cayley coefficients.
  explicit BinaryForm(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw Error(ErrorCode::EmptyCoefficients, "binary form needs at least one coefficient");
    }
  }
  BinaryForm(std::initializer_list<R> coeffs) : BinaryForm(std::vector<R>(coeffs)) {}

  static BinaryForm zero(int degree) {
    return BinaryForm(std::vector<R>(static_cast<std::size_t>(degree) + 1, R(Rational(0))));
  }

  /// From raw monomial coefficients c_i of x1^(n-i) x2^i.
  static BinaryForm from_monomials(std::vector<R> raw) {
    if (raw.empty()) {
      throw Error(ErrorCode::EmptyCoefficients, "binary form needs at least one coefficient");
    }
    const int n = static_cast<int>(raw.size()) - 1;
    for (int i = 0; i <= n; ++i) {
      raw[static_cast<std::size_t>(i)] =
          raw[static_cast<std::size_t>(i)] * Rational(1, detail::binomial(n, i));
    }
    return BinaryForm(std::move(raw));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const R> coeffs() const noexcept { return coeffs_; }
  const R& operator[](std::size_t i) const { return coeffs_.at(i); }

  /// Coefficients of x1^(n-i) x2^i in the expanded polynomial.
  std::vector<R> monomial_coeffs() const {
    std::vector<R> raw;
    raw.reserve(coeffs_.size());
    const int n = degree();
    for (int i = 0; i <= n; ++i) {
      raw.push_back(coeffs_[static_cast<std::size_t>(i)] * Rational(detail::binomial(n, i)));
    }
    return raw;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!detail::coeff_is_zero(c)) return false;
    }
    return true;
  }

  /// Value of the polynomial at (x1, x2).
  R evaluate(const R& x1, const R& x2) const {
    const auto raw = monomial_coeffs();
    const int n = degree();
    R sum(Rational(0));
    for (int i = 0; i <= n; ++i) {
      R term = raw[static_cast<std::size_t>(i)];
      for (int k = 0; k < n - i; ++k) term = term * x1;
      for (int k = 0; k < i; ++k) term = term * x2;
      sum = sum + term;
    }
    return sum;
  }

  BinaryForm& operator+=(const BinaryForm& other) {
    require_same_degree(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + other.coeffs_[i];
    return *this;
  }
  BinaryForm& operator-=(const BinaryForm& other) {
    require_same_degree(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - other.coeffs_[i];
    return *this;
  }

  friend BinaryForm operator+(BinaryForm lhs, const BinaryForm& rhs) { return lhs += rhs; }
  friend BinaryForm operator-(BinaryForm lhs, const BinaryForm& rhs) { return lhs -= rhs; }
  BinaryForm operator-() const {
    BinaryForm negated = *this;
    for (auto& c : negated.coeffs_) c = -c;
    return negated;
  }

  friend BinaryForm operator*(const R& scalar, BinaryForm form) {
    for (auto& c : form.coeffs_) c = scalar * c;
    return form;
  }
  friend BinaryForm operator*(BinaryForm form, const R& scalar) {
    for (auto& c : form.coeffs_) c = c * scalar;
    return form;
  }
  friend BinaryForm operator*(BinaryForm form, const Rational& scalar)
    requires(!std::same_as<R, Rational>)
  {
    for (auto& c : form.coeffs_) c = c * scalar;
    return form;
  }
  friend BinaryForm operator*(const Rational& scalar, BinaryForm form)
    requires(!std::same_as<R, Rational>)
  {
    for (auto& c : form.coeffs_) c = c * scalar;
    return form;
  }

  friend bool operator==(const BinaryForm& lhs, const BinaryForm& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  void require_same_degree(const BinaryForm& other) const {
    if (other.degree() != degree()) {
      throw Error(ErrorCode::DegreeMismatch, "binary forms of different degrees");
    }
  }

  std::vector<R> coeffs_;
};

/// The r-th transvectant
///   (G,H)_r = (m-r)!(n-r)!/(m!n!) sum_i (-1)^i C(r,i)
///             d^r G / dx1^(r-i) dx2^i  *  d^r H / dx1^i dx2^(r-i),
/// a form of degree m+n-2r (possibly the zero form).
template <CoefficientRing R>
BinaryForm<R> transvectant(const BinaryForm<R>& g, const BinaryForm<R>& h, int r) {
  const int m = g.degree();
  const int n = h.degree();
  if (r < 0 || r > m || r > n) {
    throw Error(ErrorCode::OrderOutOfRange,
                "transvectant order " + std::to_string(r) + " outside [0, min(" +
                    std::to_string(m) + "," + std::to_string(n) + ")]");
  }
  const auto graw = g.monomial_coeffs();
  const auto hraw = h.monomial_coeffs();
  const int out_degree = m + n - 2 * r;
  std::vector<R> raw(static_cast<std::size_t>(out_degree) + 1, R(Rational(0)));

  for (int i = 0; i <= r; ++i) {
    const std::int64_t sign_binom = (i % 2 == 0 ? 1 : -1) * detail::binomial(r, i);
    for (int k = i; k <= m; ++k) {
      // d^(r-i)/dx1^(r-i) d^i/dx2^i of x1^(m-k) x2^k
      const std::int64_t gd =
          detail::falling_factorial(m - k, r - i) * detail::falling_factorial(k, i);
      if (gd == 0 || is_zero(graw[static_cast<std::size_t>(k)])) continue;
      for (int l = r - i; l <= n; ++l) {
        // d^i/dx1^i d^(r-i)/dx2^(r-i) of x1^(n-l) x2^l
        const std::int64_t hd =
            detail::falling_factorial(n - l, i) * detail::falling_factorial(l, r - i);
        if (hd == 0 || is_zero(hraw[static_cast<std::size_t>(l)])) continue;
        auto& slot = raw[static_cast<std::size_t>(k + l - r)];
        slot = slot + (graw[static_cast<std::size_t>(k)] * hraw[static_cast<std::size_t>(l)]) *
                          Rational(sign_binom * gd * hd);
      }
    }
  }

  const Rational prefactor(detail::factorial(m - r) * detail::factorial(n - r),
                           detail::factorial(m) * detail::factorial(n));
  for (auto& c : raw) c = c * prefactor;
  return BinaryForm<R>::from_monomials(std::move(raw));
}

/// Product of two forms, re-expressed in Cayley normalization.
template <CoefficientRing R>
BinaryForm<R> multiply(const BinaryForm<R>& g, const BinaryForm<R>& h) {
  const auto graw = g.monomial_coeffs();
  const auto hraw = h.monomial_coeffs();
  std::vector<R> raw(graw.size() + hraw.size() - 1, R(Rational(0)));
  for (std::size_t i = 0; i < graw.size(); ++i) {
    if (is_zero(graw[i])) continue;
    for (std::size_t j = 0; j < hraw.size(); ++j) raw[i + j] = raw[i + j] + graw[i] * hraw[j];
  }
  return BinaryForm<R>::from_monomials(std::move(raw));
}

/// True iff G = c H for some nonzero scalar c. Quadratics use the Jacobian
/// criterion (G,H)_1 = 0; other degrees check all 2x2 minors of the
/// coefficient pair.
template <CoefficientRing R>
bool proportional(const BinaryForm<R>& g, const BinaryForm<R>& h) {
  if (g.degree() != h.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "proportionality needs equal degrees");
  }
  const bool gz = g.is_zero();
  const bool hz = h.is_zero();
  if (gz && hz) throw Error(ErrorCode::BothZero, "both forms are zero");
  if (gz || hz) return false;
  if (g.degree() == 2) return transvectant(g, h, 1).is_zero();

  const auto gc = g.coeffs();
  const auto hc = h.coeffs();
  for (std::size_t i = 0; i < gc.size(); ++i) {
    for (std::size_t j = i + 1; j < gc.size(); ++j) {
      if (!is_zero(gc[i] * hc[j] - gc[j] * hc[i])) return false;
    }
  }
  return true;
}

using Form = BinaryForm<Rational>;

/// The unique P with Q = L P, for a nonzero linear form L. Throws NotDivisible
/// if L does not divide Q.
Form divide_exact(const Form& q, const Form& linear);

std::string to_string(const Form& form);

}  // namespace hexagram
