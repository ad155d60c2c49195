#pragma once

#include <gmpxx.h>
#include <string>

namespace krammer {

using Rat = mpq_class;
using Int = mpz_class;

// Parses "a" or "a/b" with optional sign; throws std::invalid_argument on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

std::string rat_to_string(const Rat& q);

bool is_integer(const Rat& q);

// Floor of log2|numerator| + log2|denominator|, a cheap size measure used by
// overflow guards. Returns 0 for q == 0.
size_t rat_bits(const Rat& q);

} // namespace krammer
