#pragma once

#include <functional>
#include <set>

#include "ted/errors.hpp"
#include "ted/rational.hpp"

namespace ted::detail {

/// Deterministic epsilon search: candidates are the positive rationals p/q
/// with q <= 64, visited in ascending value order; returns the first one the
/// predicate accepts. The value window widens geometrically so any finite
/// obstruction set is eventually escaped.
inline Rat scan_epsilon(const std::function<bool(const Rat&)>& admissible) {
  // candidates in (0, 1] cover almost every call; computed once
  static const std::vector<Rat> unit_window = [] {
    std::set<Rat> w;
    for (long long q = 1; q <= 64; ++q)
      for (long long p = 1; p <= q; ++p) w.insert(Rat(p, q));
    return std::vector<Rat>(w.begin(), w.end());
  }();
  for (const Rat& c : unit_window)
    if (admissible(c)) return c;

  long long lo = 1;  // window covers values in (lo, hi]
  for (long long hi = 2; hi <= (1LL << 24); lo = hi, hi *= 2) {
    std::set<Rat> window;
    for (long long q = 1; q <= 64; ++q)
      for (long long p = lo * q + 1; p <= hi * q; ++p) window.insert(Rat(p, q));
    for (const Rat& c : window)
      if (admissible(c)) return c;
  }
  throw Error("epsilon scan exhausted");
}

}  // namespace ted::detail
