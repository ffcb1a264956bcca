#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hyperbound/numtheory.hpp"

namespace hyperbound {

using Rational = mpq_class;

// A rational number or +infinity (std::nullopt).
using ExtendedRational = std::optional<Rational>;

// Parses "7", "-3/4", " 12/8 " (canonicalized). Throws InputError.
Rational parse_rational(std::string_view text);

// Like parse_rational but also accepts "inf", "+inf", "infinity".
ExtendedRational parse_extended_rational(std::string_view text);

Integer parse_integer(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const ExtendedRational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

}  // namespace hyperbound
