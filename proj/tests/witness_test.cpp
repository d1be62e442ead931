#include <doctest.h>

#include "lantern/witness_library.hpp"

using namespace lantern;

namespace {

const Witness& find(const std::string& name, const char* word = nullptr) {
  for (const Witness& w : witness_library()) {
    if (w.name == name && (!word || w.word == parse(word))) return w;
  }
  throw std::runtime_error("no witness " + name);
}

Side side_under(const Arc& a, const Word& w) { return side_at_start(a, apply_word(a, w)); }

}  // namespace

TEST_CASE("library contents") {
  const auto& lib = witness_library();
  CHECK(lib.size() == 12);
  for (const Witness& w : lib) {
    CHECK(certifies(w));
    CHECK(is_embedded(w.arc));
    CHECK(w.arc.start.boundary != w.arc.end.boundary);
  }
  for (int k = 1; k <= 4; ++k) {
    const auto label = static_cast<BoundaryLabel>(k - 1);
    CHECK(find("alpha" + std::to_string(k)).arc.start.boundary == label);
    CHECK(find("beta" + std::to_string(k)).arc.start.boundary == label);
  }
  CHECK(find("gamma").arc.start.boundary == BoundaryLabel::C2);
  CHECK(find("gamma").arc.end.boundary == BoundaryLabel::C4);
}

TEST_CASE("alpha under r_k = -1") {
  const Arc a1 = find("alpha1").arc;
  CHECK(side_under(a1, parse("a^-1 e^2 f^2")) == Side::Left);
  CHECK(side_under(a1, parse("a^-1")) == Side::Left);
  CHECK(apply_twist(apply_twist(a1, Generator::e, 1), Generator::e, -1) == a1);
  // Other m, n > 0 behave the same way.
  const char* xs[] = {"a^-1", "b^-1", "c^-1", "d^-1"};
  for (int k = 0; k < 4; ++k) {
    const Arc a = find("alpha" + std::to_string(k + 1)).arc;
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 3; ++n) {
        const Word w = parse(std::string(xs[k]) + " e^" + std::to_string(m) + " f^" + std::to_string(n));
        CHECK(side_under(a, w) == Side::Left);
      }
    }
  }
}

TEST_CASE("beta under r_k = 0, m = -1") {
  CHECK(side_under(find("beta2").arc, parse("e^-1 f^2")) == Side::Left);
  CHECK(side_under(find("beta3").arc, parse("e^-1 f")) == Side::Left);
  // Positive twists about the other boundary curves keep beta_k to the left.
  CHECK(side_under(find("beta3").arc, parse("a^2 b d^3 e^-1 f")) == Side::Left);
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 3; ++n) {
      CHECK(side_under(find("beta" + std::to_string(k)).arc, parse("e^-1 f^" + std::to_string(n))) ==
            Side::Left);
    }
  }
}

TEST_CASE("gamma is left at both ends") {
  for (const char* w : {"a b c d e^-1 f^-2", "a b c d e^-2 f^-1"}) {
    const Arc g = find("gamma", w).arc;
    CHECK(side_under(g, parse(w)) == Side::Left);
    CHECK(side_under(reversed(g), parse(w)) == Side::Left);
  }
  // Raising r1, r3 and one of r2, r4 keeps the C2 or the C4 end to the left.
  const Arc g = find("gamma").arc;
  CHECK(side_under(g, parse("a^3 b c^2 d^4 e^-2 f^-1")) == Side::Left);
  CHECK(side_under(reversed(g), parse("a^3 b^5 c^2 d e^-2 f^-1")) == Side::Left);
}
