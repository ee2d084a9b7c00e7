// SPDX-License-Identifier: Apache-2.0
//
// Shared soundness harness: checks refinement lemmas against the true
// function semantics at sampled guard-region points, using the oracle
// enclosures. Returns an empty string on success, else a diagnostic.
#pragma once

#include <random>
#include <string>

#include "translin/refinement.hpp"

namespace translin::testing {

struct LemmaCheckOptions {
  unsigned samples = 1000;
  unsigned digits = 100;
  unsigned seed = 20240901;
};

std::string check_lemma_soundness(const Lemma& lemma, const LemmaCheckOptions& opts);

}  // namespace translin::testing
