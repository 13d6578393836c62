#pragma once

#include <gmpxx.h>

#include <string>

#include <json.hpp>

namespace dsarr {

// All geometry runs on exact rationals. There are no tolerance parameters
// anywhere in the kernel; equality and ordering are exact.
using Rational = mpq_class;

using Json = nlohmann::ordered_json;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "a", "a/b", or "-a/b" with arbitrary-precision integers.
Rational rat_parse(const std::string& text);

std::string rat_str(const Rational& q);

// A rational serializes as [numerator, denominator]. Components that fit in
// 64 bits are emitted as JSON integers, larger ones as decimal strings, so
// files stay bit-exact at any magnitude.
Json rat_to_json(const Rational& q);
Rational rat_from_json(const Json& j);

double rat_to_double(const Rational& q);

}  // namespace dsarr
