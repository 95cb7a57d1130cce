#pragma once

#include <map>
#include <string>
#include <vector>

#include "symorb/ypoly.hpp"

namespace symorb {

// Nonnegative dimension count per cohomological degree; zero entries are not
// stored.  Canonical text form is the comma list "b0,b1,..." with trailing
// zeros removed ("0" when empty).
class GradedDimension {
 public:
  GradedDimension() = default;
  static GradedDimension point();  // one dimension in degree 0
  static GradedDimension from_list(const std::vector<long>& betti);
  static GradedDimension parse(const std::string& text);

  void set(int degree, long value);
  long betti(int degree) const;
  const std::map<int, long>& table() const { return betti_; }
  long total_dimension() const;
  int max_degree() const;  // -1 when empty
  std::vector<long> to_list() const;
  std::string str() const;
  YPoly poincare_poly() const;
  long euler_characteristic() const;  // alternating sum

  bool operator==(const GradedDimension&) const = default;

 private:
  std::map<int, long> betti_;
};

// Power series in q truncated at q^order inclusive, coefficients polynomials
// in y.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  static TruncatedSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const YPoly& coeff(int n) const;
  YPoly& coeff(int n);
  const std::vector<YPoly>& coeffs() const { return coeffs_; }

  // In-place multiplication by elementary factors; u is the y-exponent.
  void mul_one_plus(int j, int u);        // * (1 + q^j y^u)
  void mul_one_minus(int j, int u);       // * (1 - q^j y^u)
  void mul_inv_one_minus(int j, int u);   // * 1/(1 - q^j y^u)

  TruncatedSeries truncated(int order) const;
  std::string str() const;  // one "q^n: poly" line per coefficient

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<YPoly> coeffs_;
};

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

// Generating series whose q^n coefficient is the graded dimension polynomial
// of the n-th symmetric power of a space with betti vector phi: odd-degree
// generators contribute factors (1 + q y^u), even-degree ones 1/(1 - q y^u).
TruncatedSeries macdonald_series(const GradedDimension& phi, int order);

// Same factor shape with q replaced by q^j for every j >= 1; the q^n
// coefficient aggregates all twisted sectors of the degree-n quotient.
TruncatedSeries orbifold_series(const GradedDimension& phi, int order);

// Free-loop variant: identical factor structure, driven by the betti numbers
// of the loop space instead of the base.
TruncatedSeries loop_series(const GradedDimension& loop_phi, int order);

// (1 - q)^{-chi}
TruncatedSeries euler_series(long chi, int order);

// prod_{j>=1} (1 - q^j)^{-chi}, expanded by binomial series per factor.
TruncatedSeries equivariant_euler_series(long chi, int order);

// Graded dimension of the m-th symmetric power (odd generators exterior,
// even generators symmetric), computed by direct multiset counting.
GradedDimension symmetric_power_dimension(const GradedDimension& phi, int m);

// q^n coefficient of orbifold_series computed without series manipulation:
// sum over cycle types of products of symmetric-power polynomials, one
// factor per cycle-length multiplicity.
YPoly direct_orbifold_coefficient(const GradedDimension& phi, int n);

// Substitute y = -1 in every coefficient.
std::vector<Int> euler_specialize(const TruncatedSeries& series);

}  // namespace symorb
