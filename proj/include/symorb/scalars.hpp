#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace symorb {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// n may be negative; k is a machine integer.
inline Int binomial(const Int& n, unsigned k) {
  if (n >= 0) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
  }
  // C(n,k) = (-1)^k C(k-n-1, k)
  Int m = Int(k) - n - 1;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), m.get_mpz_t(), k);
  return (k % 2 == 0) ? r : Int(-r);
}

inline Int int_pow(const Int& base, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p" when integral, "p/q" otherwise
inline std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + text + "'");
  r.canonicalize();
  return r;
}

inline bool fits_int64(const Int& v) {
  return v.fits_slong_p() != 0 || (v >= Int("-9223372036854775808") &&
                                   v <= Int("9223372036854775807"));
}

inline long long to_int64(const Int& v) {
  return std::stoll(v.get_str());
}

}  // namespace symorb

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
