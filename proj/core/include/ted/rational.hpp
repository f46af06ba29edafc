#pragma once

#include <boost/rational.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ted {

/// Exact rational scalar. All filtration values, feature vectors and
/// persistence coordinates are exact; floating point appears only when
/// exporting to CSV/SVG.
using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;

/// Canonical "p/q" form with q >= 1, e.g. "3/4", "-1/2", "0/1".
std::string to_string(const Rat& r);

/// Parses "p/q" or a bare integer "p". Throws ParseError on anything else.
Rat parse_rational(const std::string& text);

double to_double(const Rat& r);

/// Shortest decimal that round-trips through double, used by CSV/SVG export.
std::string to_decimal(const Rat& r);

Rat rat_abs(const Rat& r);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& s, const RatVec& a);
RatVec vec_abs(const RatVec& a);

}  // namespace ted
