#pragma once

#include <string>
#include <vector>

#include "symorb/scalars.hpp"

namespace symorb {

// Integer polynomial in one variable y, dense ascending coefficients with no
// trailing zeros (empty vector = zero polynomial).
class YPoly {
 public:
  YPoly() = default;
  explicit YPoly(Int constant);
  static YPoly one() { return YPoly(Int(1)); }
  static YPoly monomial(Int coeff, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& coeff(int k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }
  void set_coeff(int k, Int value);

  YPoly& operator+=(const YPoly& rhs);
  YPoly& operator-=(const YPoly& rhs);
  YPoly& operator*=(const Int& scalar);
  YPoly shifted(int degree) const;  // multiply by y^degree

  Int eval(const Int& x) const;
  std::string str() const;  // "1 + 2y^2 - y^4"; zero prints "0"

  bool operator==(const YPoly&) const = default;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

YPoly operator+(YPoly lhs, const YPoly& rhs);
YPoly operator-(YPoly lhs, const YPoly& rhs);
YPoly operator*(const YPoly& lhs, const YPoly& rhs);

}  // namespace symorb
