#include "lantern/witness_library.hpp"

namespace lantern {

namespace {

// None of the witnesses needs to cross the cut system: each runs inside the
// 12-gon between two boundary sides.
Arc straight(BoundaryLabel from, int from_pos, BoundaryLabel to, int to_pos) {
  return Arc{{from, from_pos}, {to, to_pos}, {}};
}

std::vector<Witness> build() {
  using B = BoundaryLabel;
  const Word ot3_a = parse("a b c d e^-2 f^-1");
  const Word ot3_b = parse("a b c d e^-1 f^-2");
  return {
      {"alpha1", RuleTag::OT1, parse("a^-1 e^2 f^2"), straight(B::C1, 0, B::C2, 0), false},
      {"alpha2", RuleTag::OT1, parse("b^-1 e^2 f^2"), straight(B::C2, 0, B::C1, 0), false},
      {"alpha3", RuleTag::OT1, parse("c^-1 e^2 f^2"), straight(B::C3, 0, B::C1, 0), false},
      {"alpha4", RuleTag::OT1, parse("d^-1 e^2 f^2"), straight(B::C4, 0, B::C1, 0), false},
      {"beta1", RuleTag::OT2, parse("e^-1 f^2"), straight(B::C1, 0, B::C3, 0), false},
      {"beta2", RuleTag::OT2, parse("e^-1 f^2"), straight(B::C2, 0, B::C3, 0), false},
      {"beta3", RuleTag::OT2, parse("e^-1 f^2"), straight(B::C3, 0, B::C1, 0), false},
      {"beta4", RuleTag::OT2, parse("e^-1 f^2"), straight(B::C4, 0, B::C1, 0), false},
      {"gamma", RuleTag::OT3, ot3_a, straight(B::C2, 0, B::C4, 1), true},
      {"gamma", RuleTag::OT3, ot3_b, straight(B::C2, 0, B::C4, 1), true},
      {"gamma_prime", RuleTag::OT4, ot3_a, straight(B::C1, 0, B::C3, 0), true},
      {"gamma_prime", RuleTag::OT4, ot3_b, straight(B::C1, 0, B::C3, 0), true},
  };
}

}  // namespace

bool certifies(const Witness& w) {
  if (side_at_start(w.arc, apply_word(w.arc, w.word)) != Side::Left) return false;
  if (!w.both_ends) return true;
  const Arc back = reversed(w.arc);
  return side_at_start(back, apply_word(back, w.word)) == Side::Left;
}

const std::vector<Witness>& witness_library() {
  static const std::vector<Witness> library = [] {
    std::vector<Witness> all = build();
    for (const Witness& w : all) {
      if (!certifies(w)) throw InvariantViolation("witness " + w.name + " fails under " + format(w.word));
    }
    return all;
  }();
  return library;
}

}  // namespace lantern
