// Integer Laurent polynomials in one variable t, used for Alexander
// polynomials and graded Euler characteristics.
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "floerbox/error.hpp"

namespace floerbox {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int64_t constant);

  static LaurentPoly monomial(int64_t coeff, int64_t exponent);

  // Zero coefficients are never stored.
  void add_term(int64_t coeff, int64_t exponent);

  const std::map<int64_t, int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int64_t coeff(int64_t exponent) const;
  int64_t min_degree() const;  // error on zero polynomial
  int64_t max_degree() const;

  int64_t evaluate_at_one() const;
  // Sum of coeff(e) * e * (e - 1): the second derivative evaluated at t = 1.
  int64_t second_derivative_at_one() const;

  bool is_symmetric() const;  // invariant under t -> 1/t

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly negate() const;
  bool operator==(const LaurentPoly&) const = default;

  // Equality up to an overall sign, the ambiguity left in an Alexander
  // polynomial once symmetry is fixed.
  bool equals_up_to_sign(const LaurentPoly& o) const;

  std::string to_string() const;  // e.g. "2*t - 3 + 2*t^-1"

 private:
  std::map<int64_t, int64_t> terms_;
};

}  // namespace floerbox
