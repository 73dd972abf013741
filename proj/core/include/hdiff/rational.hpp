#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hdiff {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws DomainError.
Rational parse_rational(std::string_view text);

// p/q in lowest terms; mpq_class(p, q) alone leaves it uncanonicalized.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hdiff
