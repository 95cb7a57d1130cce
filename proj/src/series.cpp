#include "symorb/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "symorb/permutation.hpp"

namespace symorb {

GradedDimension GradedDimension::point() {
  GradedDimension g;
  g.set(0, 1);
  return g;
}

GradedDimension GradedDimension::from_list(const std::vector<long>& betti) {
  GradedDimension g;
  for (size_t u = 0; u < betti.size(); ++u) g.set(static_cast<int>(u), betti[u]);
  return g;
}

GradedDimension GradedDimension::parse(const std::string& text) {
  std::vector<long> betti;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    long v;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed betti list: '" + text + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size() || v < 0)
      throw std::invalid_argument("malformed betti list: '" + text + "'");
    betti.push_back(v);
  }
  if (betti.empty())
    throw std::invalid_argument("malformed betti list: '" + text + "'");
  return from_list(betti);
}

void GradedDimension::set(int degree, long value) {
  if (degree < 0) throw std::invalid_argument("negative cohomological degree");
  if (value < 0) throw std::invalid_argument("negative dimension count");
  if (value == 0)
    betti_.erase(degree);
  else
    betti_[degree] = value;
}

long GradedDimension::betti(int degree) const {
  auto it = betti_.find(degree);
  return it == betti_.end() ? 0 : it->second;
}

long GradedDimension::total_dimension() const {
  long total = 0;
  for (auto& [u, b] : betti_) total += b;
  return total;
}

int GradedDimension::max_degree() const {
  return betti_.empty() ? -1 : betti_.rbegin()->first;
}

std::vector<long> GradedDimension::to_list() const {
  std::vector<long> out(static_cast<size_t>(max_degree()) + 1, 0);
  for (auto& [u, b] : betti_) out[static_cast<size_t>(u)] = b;
  return out;
}

std::string GradedDimension::str() const {
  if (betti_.empty()) return "0";
  std::string out;
  const auto list = to_list();
  for (size_t u = 0; u < list.size(); ++u) {
    if (u) out += ',';
    out += std::to_string(list[u]);
  }
  return out;
}

YPoly GradedDimension::poincare_poly() const {
  YPoly p;
  for (auto& [u, b] : betti_) p.set_coeff(u, Int(b));
  return p;
}

long GradedDimension::euler_characteristic() const {
  long chi = 0;
  for (auto& [u, b] : betti_) chi += (u % 2 == 0) ? b : -b;
  return chi;
}

TruncatedSeries TruncatedSeries::one(int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  TruncatedSeries s;
  s.coeffs_.assign(static_cast<size_t>(order) + 1, YPoly{});
  s.coeffs_[0] = YPoly::one();
  return s;
}

namespace {
const YPoly kZeroPoly{};
}

const YPoly& TruncatedSeries::coeff(int n) const {
  if (n < 0 || n > order()) return kZeroPoly;
  return coeffs_[static_cast<size_t>(n)];
}

YPoly& TruncatedSeries::coeff(int n) {
  if (n < 0 || n > order()) throw std::out_of_range("series coefficient index");
  return coeffs_[static_cast<size_t>(n)];
}

void TruncatedSeries::mul_one_plus(int j, int u) {
  for (int n = order(); n >= j; --n)
    coeffs_[static_cast<size_t>(n)] += coeffs_[static_cast<size_t>(n - j)].shifted(u);
}

void TruncatedSeries::mul_one_minus(int j, int u) {
  for (int n = order(); n >= j; --n)
    coeffs_[static_cast<size_t>(n)] -= coeffs_[static_cast<size_t>(n - j)].shifted(u);
}

void TruncatedSeries::mul_inv_one_minus(int j, int u) {
  for (int n = j; n <= order(); ++n)
    coeffs_[static_cast<size_t>(n)] += coeffs_[static_cast<size_t>(n - j)].shifted(u);
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0 || order > this->order())
    throw std::invalid_argument("truncation order out of range");
  TruncatedSeries s;
  s.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + order + 1);
  return s;
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (int n = 0; n <= order(); ++n) {
    out += "q^" + std::to_string(n) + ": " + coeff(n).str();
    if (n < order()) out += '\n';
  }
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  TruncatedSeries out = TruncatedSeries::one(order);
  out.coeff(0) = YPoly{};
  for (int n = 0; n <= order; ++n) {
    YPoly acc;
    for (int k = 0; k <= n; ++k) acc += lhs.coeff(k) * rhs.coeff(n - k);
    out.coeff(n) = std::move(acc);
  }
  return out;
}

namespace {

// Multiplies in the factor family of one space copy, with q-power stride j.
void apply_factors(TruncatedSeries& s, const GradedDimension& phi, int j) {
  for (auto& [u, b] : phi.table()) {
    for (long rep = 0; rep < b; ++rep) {
      if (u % 2 == 1)
        s.mul_one_plus(j, u);
      else
        s.mul_inv_one_minus(j, u);
    }
  }
}

}  // namespace

TruncatedSeries macdonald_series(const GradedDimension& phi, int order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  apply_factors(s, phi, 1);
  return s;
}

TruncatedSeries orbifold_series(const GradedDimension& phi, int order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (int j = 1; j <= order; ++j) apply_factors(s, phi, j);
  return s;
}

TruncatedSeries loop_series(const GradedDimension& loop_phi, int order) {
  return orbifold_series(loop_phi, order);
}

namespace {

// q^n coefficient of (1 - q)^{-chi}
Int inv_power_coeff(long chi, int n) {
  Int c = binomial(Int(-chi), static_cast<unsigned>(n));
  return (n % 2 == 0) ? c : Int(-c);
}

}  // namespace

TruncatedSeries euler_series(long chi, int order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (int n = 0; n <= order; ++n) s.coeff(n) = YPoly(inv_power_coeff(chi, n));
  return s;
}

TruncatedSeries equivariant_euler_series(long chi, int order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (int j = 1; j <= order; ++j) {
    TruncatedSeries factor = TruncatedSeries::one(order);
    for (int k = 1; j * k <= order; ++k)
      factor.coeff(j * k) = YPoly(inv_power_coeff(chi, k));
    s = s * factor;
  }
  return s;
}

namespace {

// Graded dimension polynomial of the m-th symmetric power: odd generators
// enter at most once, even generators arbitrarily often.
YPoly symmetric_power_poly(const GradedDimension& phi, int m) {
  if (m < 0) throw std::invalid_argument("negative symmetric power");
  std::vector<YPoly> dp(static_cast<size_t>(m) + 1);
  dp[0] = YPoly::one();
  for (auto& [u, b] : phi.table()) {
    for (long rep = 0; rep < b; ++rep) {
      if (u % 2 == 1) {
        for (int k = m; k >= 1; --k)
          dp[static_cast<size_t>(k)] += dp[static_cast<size_t>(k - 1)].shifted(u);
      } else {
        for (int k = 1; k <= m; ++k)
          dp[static_cast<size_t>(k)] += dp[static_cast<size_t>(k - 1)].shifted(u);
      }
    }
  }
  return dp[static_cast<size_t>(m)];
}

}  // namespace

GradedDimension symmetric_power_dimension(const GradedDimension& phi, int m) {
  const YPoly poly = symmetric_power_poly(phi, m);
  GradedDimension out;
  for (int u = 0; u <= poly.degree(); ++u) {
    const Int& c = poly.coeff(u);
    if (c == 0) continue;
    if (!fits_int64(c)) throw std::overflow_error("symmetric power dimension overflows");
    out.set(u, static_cast<long>(to_int64(c)));
  }
  return out;
}

YPoly direct_orbifold_coefficient(const GradedDimension& phi, int n) {
  if (n < 0) throw std::invalid_argument("negative coefficient index");
  YPoly total;
  for (const CycleType& ct : partitions(n)) {
    YPoly term = YPoly::one();
    for (auto& [len, mult] : ct.counts())
      term = term * symmetric_power_poly(phi, mult);
    total += term;
  }
  return total;
}

std::vector<Int> euler_specialize(const TruncatedSeries& series) {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(series.order()) + 1);
  for (int n = 0; n <= series.order(); ++n)
    out.push_back(series.coeff(n).eval(Int(-1)));
  return out;
}

}  // namespace symorb
