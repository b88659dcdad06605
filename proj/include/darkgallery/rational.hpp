#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace darkgallery {

// GMP keeps every mpq canonical (lowest terms, positive denominator) after
// each operation, which is exactly the invariant we want for Rat.
// Never bind gmpxx expressions to `auto`; they are lazy templates.
using Rat = mpq_class;
using BigInt = mpz_class;

// Accepts "p/q", "p", or a finite decimal like "-102.57".
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& value);
double to_double(const Rat& value);

// p/q in lowest terms; q != 0.
Rat frac(long p, long q);

inline int sign_of(const Rat& value) { return sgn(value); }
inline int sign_of(const BigInt& value) { return sgn(value); }

}  // namespace darkgallery
