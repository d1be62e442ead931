#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "lantern/word.hpp"

namespace lantern {

struct Block {
  Integer m;  // exponent of e
  Integer n;  // exponent of f

  friend bool operator==(const Block&, const Block&) = default;
};

// a^r1 b^r2 c^r3 d^r4 e^m1 f^n1 ... e^ms f^ns. Only m1 and ns may be zero.
// The block count s is whatever the packing produced; it is not certified
// to be the smallest possible.
struct ReducedForm {
  std::array<Integer, 4> r{};
  std::vector<Block> blocks;

  std::size_t s() const { return blocks.size(); }
  bool well_formed() const;

  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

Word expand(const ReducedForm& rf);

// Packs a word without g or h letters. Throws std::invalid_argument otherwise.
ReducedForm pack(const Word& w);

// Replaces g and h by their lantern expressions
//   g = abcd f^-1 e^-1,   h = abcd e^-1 f^-1.
Word substitute_gh(const Word& w);

ReducedForm reduce(const Word& w);

// A cyclic rotation of the e/f letters. With c = conjugator,
// expand(form) = c^-1 * expand(original) * c.
struct Rotation {
  ReducedForm form;
  Word conjugator;
};

// Rotations of the e/f letter sequence, one per starting letter (index k
// starts at letter k). The letter count is capped at kMaxRotationLetters;
// longer inputs throw std::length_error.
inline constexpr long kMaxRotationLetters = 1L << 16;
std::vector<Rotation> rotations(const ReducedForm& rf);
std::vector<ReducedForm> cyclic_rotations(const ReducedForm& rf);

// Lexicographically smallest flattened block list over all rotations.
ReducedForm canonical_form(const ReducedForm& rf);

enum class RuleTag { H1, H2, H3, H4, OT1, OT2, OT3, OT4, R1, R2 };

struct Factorization {
  Word word;               // all exponents positive
  RuleTag rule;            // the H-rule that applied
  std::size_t rotation;    // index into rotations()
  Word conjugator;         // word = conjugator^-1 * expand(rf) * conjugator
};

// Positive factorization of a conjugate of expand(rf) when some rotation
// satisfies H1..H4. Each result is certified with equal_in_mcg; a failed
// certificate throws InvariantViolation.
std::optional<Factorization> positive_factorization(const ReducedForm& rf);

}  // namespace lantern
