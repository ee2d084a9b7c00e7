// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "translin/rational.hpp"

namespace translin {

/// Closed-by-default interval over the rationals with optional infinite ends.
/// An absent bound means -inf (lo) or +inf (hi).
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_open = false;
  bool hi_open = false;

  static Interval everything() { return {}; }
  static Interval point(const Rational& c) { return {c, c, false, false}; }
  static Interval closed(const Rational& l, const Rational& u) { return {l, u, false, false}; }
  static Interval at_least(const Rational& l) { return {l, std::nullopt, false, false}; }
  static Interval at_most(const Rational& u) { return {std::nullopt, u, false, false}; }

  bool is_point() const { return lo && hi && *lo == *hi; }

  bool contains(const Rational& x) const {
    if (lo) {
      if (x < *lo || (lo_open && x == *lo)) return false;
    }
    if (hi) {
      if (x > *hi || (hi_open && x == *hi)) return false;
    }
    return true;
  }

  /// Intersection; collapses to an empty optional when the result is void.
  static std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    Interval r;
    if (a.lo && b.lo) {
      if (*a.lo > *b.lo) { r.lo = a.lo; r.lo_open = a.lo_open; }
      else if (*b.lo > *a.lo) { r.lo = b.lo; r.lo_open = b.lo_open; }
      else { r.lo = a.lo; r.lo_open = a.lo_open || b.lo_open; }
    } else {
      r.lo = a.lo ? a.lo : b.lo;
      r.lo_open = a.lo ? a.lo_open : b.lo_open;
    }
    if (a.hi && b.hi) {
      if (*a.hi < *b.hi) { r.hi = a.hi; r.hi_open = a.hi_open; }
      else if (*b.hi < *a.hi) { r.hi = b.hi; r.hi_open = b.hi_open; }
      else { r.hi = a.hi; r.hi_open = a.hi_open || b.hi_open; }
    } else {
      r.hi = a.hi ? a.hi : b.hi;
      r.hi_open = a.hi ? a.hi_open : b.hi_open;
    }
    if (r.lo && r.hi) {
      if (*r.lo > *r.hi) return std::nullopt;
      if (*r.lo == *r.hi && (r.lo_open || r.hi_open)) return std::nullopt;
    }
    return r;
  }
};

}  // namespace translin
