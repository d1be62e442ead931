#include <doctest.h>

#include "lantern/word.hpp"

using namespace lantern;

namespace {

Word terms(std::vector<Term> t) { return free_reduce(t); }

}  // namespace

TEST_CASE("generators") {
  CHECK(kAllGenerators.size() == 8);
  for (Generator g : {Generator::a, Generator::b, Generator::c, Generator::d}) CHECK(is_boundary(g));
  for (Generator g : {Generator::e, Generator::f, Generator::g, Generator::h}) CHECK_FALSE(is_boundary(g));
  CHECK(generator_from_letter('h') == Generator::h);
  CHECK_FALSE(generator_from_letter('i').has_value());
  CHECK(letter_of(Generator::c) == 'c');
}

TEST_CASE("parse reads terms") {
  const Word w = parse("a^2 b c^-1");
  REQUIRE(w.size() == 3);
  CHECK(w.terms()[0] == Term{Generator::a, 2});
  CHECK(w.terms()[1] == Term{Generator::b, 1});
  CHECK(w.terms()[2] == Term{Generator::c, -1});
}

TEST_CASE("parse cancels and accepts juxtaposition") {
  CHECK(parse("e e^-1").empty());
  CHECK(parse("").empty());
  CHECK(parse("   ").empty());
  const Word w = parse("abcdf^-1e^-1");
  CHECK(w == terms({{Generator::a, 1}, {Generator::b, 1}, {Generator::c, 1}, {Generator::d, 1},
                    {Generator::f, -1}, {Generator::e, -1}}));
  CHECK(parse("a b c e") == parse("abce"));
  CHECK(parse("e^0 f") == parse("f"));
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error for " << text);
    return 0;
  };
  CHECK(position_of("a x") == 2);
  CHECK(position_of("a^") == 1);
  CHECK(position_of("^2") == 0);
  CHECK(position_of("e^-") == 1);
  CHECK(position_of("e^+2") == 2);
  CHECK(position_of("e^ 2") == 2);
  CHECK(position_of("A") == 0);
  CHECK_THROWS_AS(parse("(ab)"), ParseError);
}

TEST_CASE("exponents are unbounded") {
  const Word w = parse("e^123456789012345678901234567890 e^-123456789012345678901234567889");
  CHECK(w == parse("e"));
  const Word big = parse("a^99999999999999999999999");
  CHECK(format(big) == "a^99999999999999999999999");
  CHECK(big.power(2) == parse("a^199999999999999999999998"));
}

TEST_CASE("format") {
  CHECK(format(Word{}) == "");
  CHECK(format(terms({{Generator::a, 1}, {Generator::e, -2}})) == "a e^-2");
  CHECK(format(parse("g e f")) == "g e f");
  CHECK(format(parse("ee  f^1")) == "e^2 f");
}

TEST_CASE("free_reduce") {
  CHECK(terms({{Generator::e, 1}, {Generator::e, -1}}).empty());
  CHECK(terms({{Generator::e, 2}, {Generator::a, 1}, {Generator::e, 3}}) ==
        Word::from_terms({{Generator::a, 1}, {Generator::e, 5}}));
  const Word efe = terms({{Generator::e, 1}, {Generator::f, 1}, {Generator::e, 1}});
  CHECK(efe.size() == 3);
  // Cancellation that exposes a new merge.
  CHECK(terms({{Generator::e, 1}, {Generator::f, 2}, {Generator::f, -2}, {Generator::e, 1}}) ==
        parse("e^2"));
  // Boundary letters gather at the front in alphabetical order.
  CHECK(format(parse("d e c f b a d^-1")) == "a b c e f");
}

TEST_CASE("words form a group") {
  const Word w = parse("a e^2 g^-1 f h^3 b^-2");
  CHECK((w * w.inverse()).empty());
  CHECK((w.inverse() * w).empty());
  CHECK(w.power(0).empty());
  CHECK(w.power(3) == w * w * w);
  CHECK(w.power(-2) == w.inverse() * w.inverse());
  CHECK(w.length() == 1 + 2 + 1 + 1 + 3 + 2);
  CHECK(parse("a e f^3").is_positive());
  CHECK_FALSE(parse("a e f^-3").is_positive());
  CHECK(Word{}.is_positive());
}

TEST_CASE("exponent class") {
  CHECK(exponent_class(parse("g e f")) == exponent_class(parse("a b c d")));
  CHECK(exponent_class(parse("h f e")) == exponent_class(parse("a b c d")));
  CHECK(exponent_class(Word{}).is_zero());

  // g - h = (g+e+f-a-b-c-d) - (h+e+f-a-b-c-d) lies in the lattice.
  std::array<Integer, 8> g{}, h{};
  g[index_of(Generator::g)] = 1;
  h[index_of(Generator::h)] = 1;
  std::array<Integer, 8> diff{};
  std::array<Integer, 8> l1{}, l2{};
  for (std::size_t k = 0; k < 4; ++k) l1[k] = l2[k] = -1;
  l1[index_of(Generator::e)] = l2[index_of(Generator::e)] = 1;
  l1[index_of(Generator::f)] = l2[index_of(Generator::f)] = 1;
  l1[index_of(Generator::g)] = 1;
  l2[index_of(Generator::h)] = 1;
  for (std::size_t k = 0; k < 8; ++k) diff[k] = g[k] - h[k] - (l1[k] - l2[k]);
  for (const Integer& x : diff) CHECK(x == 0);
  CHECK(exponent_class(parse("g")) == exponent_class(parse("h")));

  CHECK_FALSE(exponent_class(parse("e")) == exponent_class(parse("f")));
  CHECK_FALSE(exponent_class(parse("a")).is_zero());
}

TEST_CASE("round trip on a fixed sample") {
  for (const char* text : {"", "a", "e^-1", "a^2 b^-3 c d^4 e f^-2 g^3 h^-1 e", "h^-5 g^5"}) {
    const Word w = parse(text);
    CHECK(parse(format(w)) == w);
    CHECK(free_reduce(w.terms()) == w);
  }
}
