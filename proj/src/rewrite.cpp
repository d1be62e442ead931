#include "lantern/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

#include "lantern/arc_engine.hpp"
#include "lantern/classifier.hpp"

namespace lantern {

namespace {

Word lantern_g() { return parse("a b c d f^-1 e^-1"); }
Word lantern_h() { return parse("a b c d e^-1 f^-1"); }

// e/f letters as +-1 (e) and +-2 (f).
using Letters = std::vector<int>;

long checked_length(const Integer& e, long& budget) {
  const Integer a = abs(e);
  if (a > budget) throw std::length_error("exponents too large to rotate letter by letter");
  budget -= a.convert_to<long>();
  return a.convert_to<long>();
}

Letters letters_of(const ReducedForm& rf) {
  Letters out;
  long budget = kMaxRotationLetters;
  auto emit = [&](const Integer& e, int base) {
    const long k = checked_length(e, budget);
    const int letter = e > 0 ? base : -base;
    for (long i = 0; i < k; ++i) out.push_back(letter);
  };
  for (const Block& b : rf.blocks) {
    emit(b.m, 1);
    emit(b.n, 2);
  }
  return out;
}

Word word_of(Letters::const_iterator first, Letters::const_iterator last) {
  std::vector<Term> terms;
  for (auto it = first; it != last; ++it) {
    const Generator g = std::abs(*it) == 1 ? Generator::e : Generator::f;
    terms.push_back({g, *it > 0 ? 1 : -1});
  }
  return free_reduce(terms);
}

Word boundary_word(const std::array<Integer, 4>& r) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < 4; ++k) terms.push_back({static_cast<Generator>(k), r[k]});
  return free_reduce(terms);
}

std::vector<Integer> flatten(const ReducedForm& rf) {
  std::vector<Integer> out;
  for (const Block& b : rf.blocks) {
    out.push_back(b.m);
    out.push_back(b.n);
  }
  return out;
}

Word repeat(const Word& w, const Integer& times) {
  Word out;
  for (Integer i = 0; i < times; ++i) out = out * w;
  return out;
}

}  // namespace

bool ReducedForm::well_formed() const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].m == 0 && i != 0) return false;
    if (blocks[i].n == 0 && i + 1 != blocks.size()) return false;
  }
  // A lone (0,0) block is not a packing of anything.
  return !(blocks.size() == 1 && blocks[0].m == 0 && blocks[0].n == 0);
}

Word expand(const ReducedForm& rf) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < 4; ++k) terms.push_back({static_cast<Generator>(k), rf.r[k]});
  for (const Block& b : rf.blocks) {
    terms.push_back({Generator::e, b.m});
    terms.push_back({Generator::f, b.n});
  }
  return free_reduce(terms);
}

ReducedForm pack(const Word& w) {
  ReducedForm rf;
  std::vector<const Term*> interior;
  for (const Term& t : w.terms()) {
    if (is_boundary(t.generator)) {
      rf.r[index_of(t.generator)] += t.exponent;
    } else if (t.generator == Generator::e || t.generator == Generator::f) {
      interior.push_back(&t);
    } else {
      throw std::invalid_argument("pack: word still contains g or h");
    }
  }
  // Word normal form already alternates e and f.
  for (const Term* t : interior) {
    if (t->generator == Generator::e) {
      rf.blocks.push_back({t->exponent, 0});
    } else if (rf.blocks.empty() || rf.blocks.back().n != 0) {
      rf.blocks.push_back({0, t->exponent});
    } else {
      rf.blocks.back().n = t->exponent;
    }
  }
  return rf;
}

Word substitute_gh(const Word& w) {
  std::vector<Term> out;
  for (const Term& t : w.terms()) {
    if (t.generator != Generator::g && t.generator != Generator::h) {
      out.push_back(t);
      continue;
    }
    const Word unit = t.generator == Generator::g ? lantern_g() : lantern_h();
    const Word piece = t.exponent > 0 ? unit : unit.inverse();
    for (Integer i = abs(t.exponent); i > 0; --i) {
      out.insert(out.end(), piece.terms().begin(), piece.terms().end());
    }
  }
  return free_reduce(out);
}

ReducedForm reduce(const Word& w) { return pack(substitute_gh(w)); }

std::vector<Rotation> rotations(const ReducedForm& rf) {
  const Letters letters = letters_of(rf);
  const Word boundary = boundary_word(rf.r);
  // Strip u ... u^-1 so that rotations of rotations stay in the same set.
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  const Word outer = word_of(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(lo));
  const Letters core(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                     letters.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<Rotation> out;
  if (core.empty()) {
    out.push_back({ReducedForm{rf.r, {}}, outer});
    return out;
  }
  out.reserve(core.size());
  for (std::size_t k = 0; k < core.size(); ++k) {
    const auto split = core.begin() + static_cast<std::ptrdiff_t>(k);
    const Word rotated = boundary * word_of(split, core.end()) * word_of(core.begin(), split);
    out.push_back({pack(rotated), outer * word_of(core.begin(), split)});
  }
  return out;
}

std::vector<ReducedForm> cyclic_rotations(const ReducedForm& rf) {
  std::vector<ReducedForm> out;
  for (Rotation& rot : rotations(rf)) out.push_back(std::move(rot.form));
  return out;
}

ReducedForm canonical_form(const ReducedForm& rf) {
  const std::vector<ReducedForm> all = cyclic_rotations(rf);
  const ReducedForm* best = &all.front();
  std::vector<Integer> best_key = flatten(*best);
  for (const ReducedForm& candidate : all) {
    std::vector<Integer> key = flatten(candidate);
    if (key < best_key) {
      best = &candidate;
      best_key = std::move(key);
    }
  }
  return *best;
}

namespace {

// e^-1 = (abcd)^-1 h f   and   f^-1 = (abcd)^-1 g e.
const Word& positive_for_e_inverse() {
  static const Word w = parse("h f");
  return w;
}
const Word& positive_for_f_inverse() {
  static const Word w = parse("g e");
  return w;
}

Word positive_power(Generator g, const Integer& exponent) {
  if (exponent > 0) return single(g, exponent);
  const Integer k = -exponent;
  return repeat(g == Generator::e ? positive_for_e_inverse() : positive_for_f_inverse(), k);
}

Integer negative_letters(const ReducedForm& rf) {
  Integer total = 0;
  for (const Block& b : rf.blocks) {
    if (b.m < 0) total -= b.m;
    if (b.n < 0) total -= b.n;
  }
  return total;
}

Word lowered_boundary(const ReducedForm& rf, const Integer& drop) {
  std::array<Integer, 4> r = rf.r;
  for (Integer& x : r) x -= drop;
  return boundary_word(r);
}

// Positive word for a single rotation, together with any extra conjugator
// beyond the rotation itself. Returns nullopt when the result would not be
// positive.
struct Candidate {
  Word word;
  Word extra;
};

std::optional<Candidate> build(const ReducedForm& rf, RuleTag rule) {
  Candidate c;
  switch (rule) {
    case RuleTag::H1:
    case RuleTag::H4: {
      c.word = lowered_boundary(rf, negative_letters(rf));
      for (const Block& b : rf.blocks) {
        c.word = c.word * positive_power(Generator::e, b.m) * positive_power(Generator::f, b.n);
      }
      break;
    }
    case RuleTag::H2: {
      const Integer& m = rf.blocks[0].m;
      const Integer& n = rf.blocks[0].n;
      c.word = lowered_boundary(rf, -m - n - 1);
      if (m == -1) {
        // e^-1 f^n = (e^-1 f^-1) f^(n+1)
        c.word = c.word * single(Generator::h) * repeat(positive_for_f_inverse(), -n - 1);
      } else {
        // e^m f^-1 = e^(m+1) (e^-1 f^-1)
        c.word = c.word * repeat(positive_for_e_inverse(), -m - 1) * single(Generator::h);
      }
      break;
    }
    case RuleTag::H3: {
      // e^m f^n = (f g) e^(m+2) h f^(n+1) up to (abcd)^2; conjugating by f
      // moves the leading f onto the trailing f^(n+1).
      const Integer& m = rf.blocks[0].m;
      const Integer& n = rf.blocks[0].n;
      c.word = lowered_boundary(rf, -m - n - 2) * single(Generator::g) *
               repeat(positive_for_e_inverse(), -m - 2) * single(Generator::h) *
               repeat(positive_for_f_inverse(), -n - 2);
      c.extra = single(Generator::f);
      break;
    }
    default:
      return std::nullopt;
  }
  if (!c.word.is_positive()) return std::nullopt;
  return c;
}

}  // namespace

std::optional<Factorization> positive_factorization(const ReducedForm& rf) {
  const std::vector<Rotation> all = rotations(rf);
  const Word original = expand(rf);
  for (std::size_t k = 0; k < all.size(); ++k) {
    const ReducedForm& form = all[k].form;
    // An empty block list reads as the single block (0, 0).
    ReducedForm padded = form;
    if (padded.blocks.empty()) padded.blocks.push_back({0, 0});
    for (RuleTag rule : fillable_rules(form)) {
      auto candidate = build(padded, rule);
      if (!candidate) continue;
      Factorization result{candidate->word, rule, k, all[k].conjugator * candidate->extra};
      const Word target = result.conjugator.inverse() * original * result.conjugator;
      if (!equal_in_mcg(result.word, target)) {
        throw InvariantViolation("positive factorization failed its certificate: " +
                                 format(result.word) + " vs " + format(target));
      }
      return result;
    }
  }
  return std::nullopt;
}

}  // namespace lantern
