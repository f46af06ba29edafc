#include "ted/rational.hpp"

#include <charconv>
#include <cstdlib>

#include "ted/errors.hpp"

namespace ted {

std::string to_string(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rat parse_rational(const std::string& text) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  long long num = 0;
  auto [p, ec] = std::from_chars(begin, end, num);
  if (ec != std::errc{}) throw ParseError("not a rational: '" + text + "'");
  if (p == end) return Rat(num);
  if (*p != '/') throw ParseError("not a rational: '" + text + "'");
  long long den = 0;
  auto [q, ec2] = std::from_chars(p + 1, end, den);
  if (ec2 != std::errc{} || q != end || den == 0)
    throw ParseError("not a rational: '" + text + "'");
  return Rat(num, den);
}

double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_decimal(const Rat& r) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, to_double(r));
  (void)ec;
  return std::string(buf, p);
}

Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec vec_scale(const Rat& s, const RatVec& a) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

RatVec vec_abs(const RatVec& a) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = rat_abs(a[i]);
  return out;
}

}  // namespace ted
