#pragma once

#include <string>
#include <vector>

#include "lantern/arc_engine.hpp"
#include "lantern/rewrite.hpp"

namespace lantern {

// An arc sent to its own left by a monodromy.
struct Witness {
  std::string name;  // alpha1..alpha4, beta1..beta4, gamma, gamma_prime
  RuleTag rule;
  Word word;
  Arc arc;
  bool both_ends;  // also to the left at the far endpoint
};

// alpha_k: left at C_k under x_k^-1 e^2 f^2 (x = a,b,c,d).
// beta_k: left at C_k under e^-1 f^2.
// gamma (C2 to C4) and gamma_prime (C1 to C3): left at both ends under
// abcd e^-2 f^-1 and abcd e^-1 f^-2.
// Every entry is re-certified on first use; a failure throws
// InvariantViolation.
const std::vector<Witness>& witness_library();

// Left at the start, and at the end too when both_ends is set.
bool certifies(const Witness& w);

}  // namespace lantern
