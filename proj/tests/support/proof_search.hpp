#pragma once

#include <cstddef>
#include <vector>

#include "luk/proofs.hpp"

namespace luk::testing {

struct SearchOutcome {
  bool found = false;
  Proof proof;  // hypothesis-free; only the goal's dependency cone
};

// Bounded forward breadth-first search: seed with every instance of
// A0-A4 whose metavariables are drawn from `universe`, then close under
// modus ponens round by round. Test fixture only, not a prover.
SearchOutcome bfs_prove(const Formula& goal, const std::vector<Formula>& universe,
                        std::size_t max_rounds, std::size_t max_facts);

}  // namespace luk::testing
