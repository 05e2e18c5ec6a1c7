#ifndef LEVELNET_NUMERIC_HPP
#define LEVELNET_NUMERIC_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace levelnet {

// Exact arithmetic everywhere except at explicit evaluation boundaries.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// 50 decimal digits; t0 is solved to 1e-30 so this leaves headroom.
using HighFloat = boost::multiprecision::cpp_bin_float_50;

// Thrown on violated preconditions. The CLI maps these to a JSON error
// object and exit code 2.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

inline Rational pow_rational(const Rational& base, unsigned e) {
  Rational r = 1, b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const HighFloat& f) { return f.convert_to<double>(); }
inline HighFloat to_highfloat(const Rational& q) { return HighFloat(q); }

}  // namespace levelnet

#endif
