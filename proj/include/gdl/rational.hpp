#ifndef GDL_RATIONAL_HPP
#define GDL_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace gdl {

/// Exact rational scalar. Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace gdl

#endif
