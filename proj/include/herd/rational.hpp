#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace herd {

/// Exact rational scalar. All analysis-side arithmetic runs on this type;
/// sign decisions are never subject to rounding. Values are kept in
/// canonical form (reduced, positive denominator) by GMP.
using Rational = mpq_class;

/// Arbitrary-precision integer, used by the fraction-free elimination.
using Integer = mpz_class;

inline int sgn(const Rational& x) { return sgn(x.get_num()); }

/// Parses "p", "-p", "p/q" or "-p/q" with decimal digits. Throws
/// std::invalid_argument on anything else (including q = 0).
Rational parse_rational(const std::string& text);

/// Canonical string form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& x);

}  // namespace herd

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
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

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 80
  };
};

}  // namespace Eigen
