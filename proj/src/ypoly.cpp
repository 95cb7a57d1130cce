#include "symorb/ypoly.hpp"

#include <stdexcept>

namespace symorb {

namespace {
const Int kZero = 0;
}

YPoly::YPoly(Int constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

YPoly YPoly::monomial(Int coeff, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  YPoly p;
  if (coeff != 0) {
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, Int(0));
    p.coeffs_.back() = std::move(coeff);
  }
  return p;
}

const Int& YPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

void YPoly::set_coeff(int k, Int value) {
  if (k < 0) throw std::invalid_argument("negative coefficient index");
  if (static_cast<size_t>(k) >= coeffs_.size()) {
    if (value == 0) return;
    coeffs_.resize(static_cast<size_t>(k) + 1, Int(0));
  }
  coeffs_[static_cast<size_t>(k)] = std::move(value);
  trim();
}

void YPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

YPoly& YPoly::operator+=(const YPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

YPoly& YPoly::operator*=(const Int& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Int& c : coeffs_) c *= scalar;
  return *this;
}

YPoly YPoly::shifted(int degree) const {
  if (degree < 0) throw std::invalid_argument("negative shift degree");
  if (is_zero()) return {};
  YPoly out;
  out.coeffs_.assign(coeffs_.size() + static_cast<size_t>(degree), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    out.coeffs_[i + static_cast<size_t>(degree)] = coeffs_[i];
  return out;
}

Int YPoly::eval(const Int& x) const {
  Int acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::string YPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    Int mag = negative ? Int(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = (mag == 1);
    if (k == 0 || !unit) out += mag.get_str();
    if (k >= 1) {
      out += 'y';
      if (k >= 2) out += "^" + std::to_string(k);
    }
  }
  return out;
}

YPoly operator+(YPoly lhs, const YPoly& rhs) {
  lhs += rhs;
  return lhs;
}

YPoly operator-(YPoly lhs, const YPoly& rhs) {
  lhs -= rhs;
  return lhs;
}

YPoly operator*(const YPoly& lhs, const YPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  YPoly out;
  const auto& a = lhs.coeffs();
  const auto& b = rhs.coeffs();
  std::vector<Int> prod(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  for (size_t k = prod.size(); k-- > 0;)
    out.set_coeff(static_cast<int>(k), std::move(prod[k]));
  return out;
}

}  // namespace symorb
