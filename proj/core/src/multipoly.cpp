#include "hexagram/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hexagram/error.hpp"

namespace hexagram {

namespace {

int degree_of(const MultiPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

std::vector<std::string> merge_names(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> merged;
  merged.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  return merged;
}

/// Position of each name of `from` inside the sorted list `into`.
std::vector<std::size_t> index_map(const std::vector<std::string>& from,
                                   const std::vector<std::string>& into) {
  std::vector<std::size_t> map(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    map[i] = static_cast<std::size_t>(
        std::lower_bound(into.begin(), into.end(), from[i]) - into.begin());
  }
  return map;
}

void accumulate_term(MultiPoly::TermMap& terms, MultiPoly::Exponents key, const Rational& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(std::move(key), value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

bool MultiPoly::GradedLex::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const int dl = degree_of(lhs);
  const int dr = degree_of(rhs);
  if (dl != dr) return dl < dr;
  return lhs < rhs;
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

MultiPoly::MultiPoly(std::vector<std::string> variables,
                     std::vector<std::pair<Exponents, Rational>> terms) {
  std::vector<std::size_t> order(variables.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return variables[i] < variables[j]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (variables[order[i]] == variables[order[i - 1]]) {
      throw Error(ErrorCode::ParseError, "duplicate variable '" + variables[order[i]] + "'");
    }
  }
  variables_.reserve(variables.size());
  for (std::size_t i : order) variables_.push_back(variables[i]);

  for (auto& [exps, coeff] : terms) {
    if (exps.size() != variables.size()) {
      throw Error(ErrorCode::ParseError, "exponent vector length does not match variables");
    }
    Exponents sorted(exps.size());
    for (std::size_t k = 0; k < order.size(); ++k) sorted[k] = exps[order[k]];
    accumulate_term(terms_, std::move(sorted), coeff);
  }
  drop_unused_variables();
}

MultiPoly MultiPoly::variable(const std::string& name) {
  return MultiPoly({name}, {{Exponents{1}, Rational(1)}});
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : degree_of(terms_.rbegin()->first);
}

MultiPoly MultiPoly::normalized() const {
  std::vector<std::pair<Exponents, Rational>> terms(terms_.begin(), terms_.end());
  return MultiPoly(variables_, std::move(terms));
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& assignment) const {
  std::vector<Rational> values;
  values.reserve(variables_.size());
  for (const auto& name : variables_) {
    auto it = assignment.find(name);
    if (it == assignment.end()) {
      throw Error(ErrorCode::MissingAssignment, "no value for variable '" + name + "'");
    }
    values.push_back(it->second);
  }
  Rational sum;
  for (const auto& [exps, coeff] : terms_) {
    Rational term = coeff;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (int k = 0; k < exps[i]; ++k) term *= values[i];
    }
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    const bool negative = coeff.sign() < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    const Rational magnitude = coeff.abs();
    const bool constant = degree_of(exps) == 0;
    bool wrote = false;
    if (constant || magnitude != Rational(1)) {
      out << magnitude;
      wrote = true;
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (wrote) out << "*";
      out << variables_[i];
      if (exps[i] > 1) out << "^" << exps[i];
      wrote = true;
    }
  }
  return out.str();
}

void MultiPoly::drop_unused_variables() {
  std::vector<bool> used(variables_.size(), false);
  for (const auto& [exps, coeff] : terms_) {
    for (std::size_t i = 0; i < exps.size(); ++i) used[i] = used[i] || exps[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;

  std::vector<std::string> kept;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (used[i]) kept.push_back(variables_[i]);
  }
  TermMap shrunk;
  for (auto& [exps, coeff] : terms_) {
    Exponents e;
    e.reserve(kept.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (used[i]) e.push_back(exps[i]);
    }
    shrunk.emplace(std::move(e), std::move(coeff));
  }
  variables_ = std::move(kept);
  terms_ = std::move(shrunk);
}

void MultiPoly::widen_to(const std::vector<std::string>& merged) {
  if (merged == variables_) return;
  const auto map = index_map(variables_, merged);
  TermMap widened;
  for (auto& [exps, coeff] : terms_) {
    Exponents e(merged.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) e[map[i]] = exps[i];
    widened.emplace(std::move(e), std::move(coeff));
  }
  variables_ = merged;
  terms_ = std::move(widened);
}

void MultiPoly::add_scaled(const MultiPoly& other, const Rational& factor) {
  if (other.is_zero() || factor.is_zero()) return;
  if (other.variables_ == variables_) {
    for (const auto& [exps, coeff] : other.terms_) accumulate_term(terms_, exps, coeff * factor);
  } else {
    const auto merged = merge_names(variables_, other.variables_);
    widen_to(merged);
    const auto map = index_map(other.variables_, merged);
    for (const auto& [exps, coeff] : other.terms_) {
      Exponents e(merged.size(), 0);
      for (std::size_t i = 0; i < exps.size(); ++i) e[map[i]] = exps[i];
      accumulate_term(terms_, std::move(e), coeff * factor);
    }
  }
  drop_unused_variables();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  add_scaled(other, Rational(1));
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    *this = MultiPoly();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= scalar;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return MultiPoly();
  const auto merged = merge_names(lhs.variables_, rhs.variables_);
  const auto lmap = index_map(lhs.variables_, merged);
  const auto rmap = index_map(rhs.variables_, merged);

  std::vector<std::pair<MultiPoly::Exponents, const Rational*>> right;
  right.reserve(rhs.terms_.size());
  for (const auto& [exps, coeff] : rhs.terms_) {
    MultiPoly::Exponents e(merged.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) e[rmap[i]] = exps[i];
    right.emplace_back(std::move(e), &coeff);
  }

  MultiPoly product;
  product.variables_ = merged;
  MultiPoly::Exponents e(merged.size(), 0);
  for (const auto& [lexps, lcoeff] : lhs.terms_) {
    MultiPoly::Exponents base(merged.size(), 0);
    for (std::size_t i = 0; i < lexps.size(); ++i) base[lmap[i]] = lexps[i];
    for (const auto& [rexps, rcoeff] : right) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(base[i] + rexps[i]);
      accumulate_term(product.terms_, e, lcoeff * *rcoeff);
    }
  }
  product.drop_unused_variables();
  return product;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly negated = *this;
  for (auto& [exps, coeff] : negated.terms_) coeff = -coeff;
  return negated;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& poly) {
  return os << poly.to_string();
}

}  // namespace hexagram
