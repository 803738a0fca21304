#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ecy {

using Rational = mpq_class;

// canonicalizes; gmpxx leaves constructed values unreduced
inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// caller guarantees is_integer(q) and that the value fits
inline std::int64_t to_int(const Rational& q) { return q.get_num().get_si(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace ecy
