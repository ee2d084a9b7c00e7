// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "translin/rational.hpp"

namespace translin {

/// Assignment from symbols and uninterpreted-application occurrence keys to
/// exact values. Keys are the canonical SMT-LIB2 rendering of the symbol or
/// application term.
struct Model {
  std::map<std::string, Rational> reals;
  std::map<std::string, bool> bools;

  bool has_real(const std::string& key) const { return reals.count(key) != 0; }
  bool has_bool(const std::string& key) const { return bools.count(key) != 0; }

  void set(const std::string& key, Rational v) { reals[key] = std::move(v); }
  void set(const std::string& key, bool v) { bools[key] = v; }
};

}  // namespace translin
