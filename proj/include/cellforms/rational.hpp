#ifndef CELLFORMS_RATIONAL_HPP
#define CELLFORMS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cellforms {

using Rational = mpq_class;

// "p/q" or "p"; always in lowest terms with positive denominator.
std::string to_string(const Rational& q);

// Accepts "p/q", "p", and optional leading sign. Throws DomainError.
Rational parse_rational(std::string_view text);

// splitmix64 finaliser; used to derive independent seeds from one user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace cellforms

#endif  // CELLFORMS_RATIONAL_HPP
