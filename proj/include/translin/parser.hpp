// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

#include "translin/problem.hpp"

namespace translin {

enum class ParseErrorKind { Syntax, Sort, Unsupported };

struct ParseError : std::runtime_error {
  ParseError(ParseErrorKind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  ParseErrorKind kind;
};

/// Parses the supported SMT-LIB2 subset. Rejects anything outside it with a
/// position-annotated error. Decimal literals become exact rationals.
Problem parse(const std::string& text, const std::string& source_name = "<input>");

}  // namespace translin
