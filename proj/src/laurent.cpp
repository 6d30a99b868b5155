#include "floerbox/laurent.hpp"

#include <sstream>

#include "floerbox/grading.hpp"

namespace floerbox {

LaurentPoly::LaurentPoly(int64_t constant) { add_term(constant, 0); }

LaurentPoly LaurentPoly::monomial(int64_t coeff, int64_t exponent) {
  LaurentPoly p;
  p.add_term(coeff, exponent);
  return p;
}

void LaurentPoly::add_term(int64_t coeff, int64_t exponent) {
  if (coeff == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, coeff);
    return;
  }
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

int64_t LaurentPoly::coeff(int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int64_t LaurentPoly::min_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::Domain, "degree of zero polynomial");
  return terms_.begin()->first;
}

int64_t LaurentPoly::max_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::Domain, "degree of zero polynomial");
  return terms_.rbegin()->first;
}

int64_t LaurentPoly::evaluate_at_one() const {
  int64_t s = 0;
  for (auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

int64_t LaurentPoly::second_derivative_at_one() const {
  int64_t s = 0;
  for (auto& [e, c] : terms_)
    s = checked_add(s, checked_mul(c, checked_mul(e, checked_sub(e, 1))));
  return s;
}

bool LaurentPoly::is_symmetric() const {
  for (auto& [e, c] : terms_)
    if (coeff(-e) != c) return false;
  return true;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(c, e);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(checked_sub(0, c), e);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_)
      r.add_term(checked_mul(c1, c2), checked_add(e1, e2));
  return r;
}

LaurentPoly LaurentPoly::negate() const {
  LaurentPoly r;
  for (auto& [e, c] : terms_) r.add_term(checked_sub(0, c), e);
  return r;
}

bool LaurentPoly::equals_up_to_sign(const LaurentPoly& o) const {
  return *this == o || *this == o.negate();
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    int64_t mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace floerbox
