#include "knotgrid/laurent.hpp"

#include <cstdlib>
#include <stdexcept>

namespace knotgrid {

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coeff, std::int64_t exp) {
  LaurentPolynomial p;
  p.add_term(exp, coeff);
  return p;
}

void LaurentPolynomial::add_term(std::int64_t exp, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPolynomial::coeff(std::int64_t exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  for (auto [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  for (auto [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled(std::int64_t coeff, std::int64_t exp) const {
  LaurentPolynomial r;
  for (auto [e, c] : terms_) r.add_term(e + exp, c * coeff);
  return r;
}

std::int64_t LaurentPolynomial::evaluate_at_sign(int sign) const {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("evaluate_at_sign: argument must be +1 or -1");
  }
  std::int64_t v = 0;
  for (auto [e, c] : terms_) {
    bool odd = (e % 2) != 0;
    v += (sign == -1 && odd) ? -c : c;
  }
  return v;
}

bool LaurentPolynomial::is_palindromic() const {
  for (auto [e, c] : terms_) {
    if (coeff(-e) != c) return false;
  }
  return true;
}

std::string LaurentPolynomial::to_string(const std::string& var, std::int64_t exp_unit) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto [e, c] : terms_) {
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
    } else if (c < 0) {
      out += "-";
    }
    std::int64_t a = std::abs(c);
    bool fractional = exp_unit != 1 && e % exp_unit != 0;
    std::string power;
    if (e != 0) {
      power = var;
      if (fractional) {
        power += "^(" + std::to_string(e) + "/" + std::to_string(exp_unit) + ")";
      } else if (e / exp_unit != 1) {
        power += "^" + std::to_string(e / exp_unit);
      }
    }
    if (power.empty()) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += power;
    }
  }
  return out;
}

}  // namespace knotgrid
