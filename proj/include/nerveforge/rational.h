#pragma once

#include <gmpxx.h>

#include <string>

namespace nerveforge {

using Rat = mpq_class;

// Parses "3", "-7/2", "0.5", "-1.25e2" style literals into an exact rational.
// Decimal strings convert exactly (0.5 -> 1/2); throws ParseError otherwise.
Rat parse_rational(const std::string& text);

// Canonical textual form: integer when the denominator is 1, else "p/q".
std::string rational_str(const Rat& q);

int sign_of(const Rat& q);

}  // namespace nerveforge
