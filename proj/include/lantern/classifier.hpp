#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lantern/rewrite.hpp"

namespace lantern {

enum class Verdict { HolomorphicallyFillable, Overtwisted, RightVeering, Unknown };

std::string to_string(Verdict v);
std::string to_string(RuleTag t);
std::optional<Verdict> verdict_from_string(const std::string& s);
std::optional<RuleTag> rule_from_string(const std::string& s);

bool is_fillable_rule(RuleTag t);
bool is_overtwisted_rule(RuleTag t);

struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::vector<RuleTag> rules;  // sorted, no duplicates
  std::size_t rotation = 0;    // rotation that produced the deciding tag
  bool mirror = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

enum class OTPattern { E_F_E, F_E_F };

// a^r1 b^r2 c^r3 d^r4 e^m1 f^n e^m2, or the same with e and f exchanged.
struct OTShape {
  std::array<Integer, 4> r{};
  Integer m;  // m1 + m2 (for F_E_F: the single e exponent)
  Integer n;  // the single f exponent (for F_E_F: n1 + n2)
  OTPattern pattern = OTPattern::E_F_E;
};

std::optional<OTShape> match_ot_shape(const ReducedForm& rf);

struct RuleOptions {
  // Apply OT1 to every shape, not only the three-block one. This goes
  // beyond what is proved.
  bool ot1_broad = false;
};

// The H rules that hold for rf as written (no rotation).
std::vector<RuleTag> fillable_rules(const ReducedForm& rf);

// All tags holding for rf as written. OT and R tags are evaluated on the
// e^m1 f^n e^m2 shape; the F_E_F shape is reached through mirror_ef.
Classification classify_rules(const ReducedForm& rf, RuleOptions options = {});

// The symmetry of the sphere sending C_k to C_{k+1}: it exchanges e and f
// (and g and h) and moves r to (r4, r1, r2, r3).
ReducedForm mirror_ef(const ReducedForm& rf);
Word mirror_ef(const Word& w);

// Union of tags over all rotations and their mirrors. Throws
// InvariantViolation if an H tag and an OT tag ever meet.
Classification classify(const ReducedForm& rf, RuleOptions options = {});

}  // namespace lantern
