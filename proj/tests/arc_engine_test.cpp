#include <doctest.h>

#include <algorithm>
#include <set>

#include "lantern/arc_engine.hpp"

using namespace lantern;

namespace {

using B = BoundaryLabel;

Arc arc(B from, int from_pos, B to, int to_pos, std::vector<int> letters = {}) {
  Arc a{{from, from_pos}, {to, to_pos}, {}};
  for (int l : letters) a.crossings.push_back({std::abs(l), l > 0 ? 1 : -1});
  return a;
}

std::vector<Arc> sample_arcs() {
  return {arc(B::C1, 0, B::C2, 0),          arc(B::C4, 0, B::C3, 0, {2}),
          arc(B::C2, 0, B::C4, 2, {-1, 3}), arc(B::C4, 1, B::C4, 1, {1}),
          arc(B::C3, 0, B::C1, 0, {3, -2}), arc(B::C4, 0, B::C4, 2)};
}

}  // namespace

TEST_CASE("polygon sides") {
  for (int side : polygon::kBoundarySides) {
    CHECK(polygon::is_boundary_side(side));
    CHECK(polygon::side_of(polygon::endpoint_of_side(side)) == side);
  }
  CHECK_FALSE(polygon::is_boundary_side(3));
  CHECK(polygon::side_of({B::C1, 0}) == 2);
  CHECK(polygon::side_of({B::C4, 2}) == 8);
  CHECK_THROWS_AS(polygon::side_of({B::C1, 1}), MalformedArc);
  CHECK_THROWS_AS(polygon::side_of({B::C4, 3}), MalformedArc);
  CHECK_THROWS_AS(polygon::side_of({B::C4, -1}), MalformedArc);
  for (int i = 1; i <= 3; ++i) {
    CHECK(polygon::exit_side(i) == polygon::enter_side(-i));
    CHECK(polygon::exit_side(-i) == polygon::enter_side(i));
    CHECK(polygon::exit_side(i) == 4 * i - 3);
  }
  // Entering at 0 and leaving at 6, sides 1..5 lie to the right.
  CHECK(polygon::right_of(0, 6, 3));
  CHECK_FALSE(polygon::right_of(0, 6, 9));
  CHECK_FALSE(polygon::right_of(0, 6, 6));
  CHECK(polygon::right_of(10, 2, 0));
}

TEST_CASE("crossing words") {
  const std::vector<Crossing> c = {{1, 1}, {3, -1}};
  CHECK(crossings_to_word(c) == FreeWord{1, -3});
  CHECK(word_to_crossings(FreeWord{1, -3}) == c);
  CHECK_THROWS_AS(crossings_to_word({{4, 1}}), MalformedArc);
  CHECK_THROWS_AS(crossings_to_word({{1, 0}}), MalformedArc);
}

TEST_CASE("canonical") {
  CHECK(canonical(arc(B::C1, 0, B::C2, 0, {1, 2, -2, 3})) == arc(B::C1, 0, B::C2, 0, {1, 3}));
  const Arc a = arc(B::C4, 0, B::C3, 0, {2, -1});
  CHECK(canonical(a) == a);
  CHECK(canonical(canonical(a)) == canonical(a));
  // Pushed across delta_1 and back.
  CHECK(canonical(arc(B::C2, 0, B::C3, 0, {1, -1})).crossings.empty());
  CHECK(canonical(arc(B::C2, 0, B::C3, 0, {2, 1, -1, -2})).crossings.empty());
  CHECK_THROWS_AS(canonical(arc(B::C2, 1, B::C3, 0)), MalformedArc);
  CHECK_THROWS_AS(canonical(Arc{{B::C2, 0}, {B::C3, 0}, {{0, 1}}}), MalformedArc);
}

TEST_CASE("reversed") {
  const Arc a = arc(B::C2, 0, B::C4, 2, {-1, 3});
  CHECK(reversed(a) == arc(B::C4, 2, B::C2, 0, {-3, 1}));
  CHECK(reversed(reversed(a)) == a);
}

TEST_CASE("surface model") {
  const SurfaceModel& m = surface_model();
  CHECK(m.curves[index_of(Generator::a)] == FreeWord{1});
  CHECK(m.curves[index_of(Generator::e)] == FreeWord{1, 2});
  CHECK(m.curves[index_of(Generator::f)] == FreeWord{2, 3});
  for (const FreeWord& c : m.curves) CHECK(is_reduced(c));
}

TEST_CASE("twists") {
  // The arc from C1 to C2 inside the 12-gon misses c and its lifts.
  const Arc a = arc(B::C1, 0, B::C2, 0);
  CHECK(apply_twist(a, Generator::c, 1) == a);
  CHECK(apply_twist(a, Generator::c, -1) == a);
  CHECK(apply_twist(a, Generator::a, 1) != a);
  for (const Arc& x : sample_arcs()) {
    for (Generator g : kAllGenerators) {
      CHECK(apply_twist(apply_twist(x, g, 1), g, -1) == canonical(x));
      CHECK(apply_twist(apply_twist(x, g, -1), g, 1) == canonical(x));
    }
  }
}

TEST_CASE("boundary twists veer right") {
  for (int k = 0; k < 4; ++k) {
    const Generator g = static_cast<Generator>(k);
    for (const Arc& x : embedded_arcs_upto(2)) {
      if (static_cast<int>(x.start.boundary) != k) continue;
      // Arcs parallel to the boundary itself are fixed.
      if (apply_twist(x, g, 1) == canonical(x)) {
        CHECK(x.end.boundary == x.start.boundary);
        continue;
      }
      CHECK(side_at_start(x, apply_twist(x, g, 1)) == Side::Right);
      CHECK(side_at_start(x, apply_twist(x, g, -1)) == Side::Left);
    }
  }
}

TEST_CASE("apply_word") {
  for (const Arc& x : sample_arcs()) {
    CHECK(apply_word(x, Word{}) == canonical(x));
    CHECK(apply_word(x, parse("g e f")) == apply_word(x, parse("a b c d")));
    CHECK(apply_word(x, parse("h f e")) == apply_word(x, parse("a b c d")));
    for (const char* w : {"e", "g^-1", "a e^2 f^-1 h", "d^2 g h^-1 f"}) {
      CHECK(apply_word(x, parse(w)) == apply_word_by_twists(x, parse(w)));
    }
  }
  // Left to right: the first letter acts first.
  const Arc x = arc(B::C1, 0, B::C3, 0);
  CHECK(apply_word(x, parse("e f")) == apply_twist(apply_twist(x, Generator::e, 1), Generator::f, 1));
}

TEST_CASE("side_at_start") {
  const Arc a = arc(B::C1, 0, B::C2, 0);
  CHECK(side_at_start(a, a) == Side::Equal);
  const Arc a1 = arc(B::C1, 0, B::C2, 0);
  CHECK(side_at_start(a1, apply_word(a1, parse("a^-1"))) == Side::Left);
  CHECK(side_at_start(a1, apply_word(a1, parse("a"))) == Side::Right);
  CHECK_THROWS_AS(side_at_start(a, arc(B::C2, 0, B::C1, 0)), PreconditionError);
  const auto& arcs = embedded_arcs_upto(3);
  for (std::size_t i = 0; i < arcs.size(); i += 7) {
    for (std::size_t j = 0; j < arcs.size(); j += 11) {
      if (arcs[i].start != arcs[j].start) continue;
      const Side ij = side_at_start(arcs[i], arcs[j]);
      const Side ji = side_at_start(arcs[j], arcs[i]);
      CHECK((ij == Side::Left) == (ji == Side::Right));
      CHECK((ij == Side::Equal) == (arcs[i] == arcs[j]));
    }
  }
}

TEST_CASE("equal_in_mcg") {
  CHECK(equal_in_mcg(parse("g e f"), parse("a b c d")));
  CHECK(equal_in_mcg(parse("h f e"), parse("a b c d")));
  CHECK_FALSE(equal_in_mcg(parse("e^2 f^2"), parse("e f e f")));
  CHECK_FALSE(equal_in_mcg(parse("g"), parse("h")));
  CHECK(equal_in_mcg(Word{}, parse("e e^-1")));
  for (Generator k : {Generator::a, Generator::b, Generator::c, Generator::d}) {
    for (Generator g : kAllGenerators) {
      CHECK(equal_in_mcg(single(k) * single(g), single(g) * single(k)));
    }
  }
  for (Generator x : kAllGenerators) {
    CHECK_FALSE(equal_in_mcg(single(x), Word{}));
    for (Generator y : kAllGenerators) {
      if (x != y) CHECK_FALSE(equal_in_mcg(single(x), single(y)));
    }
  }
  CHECK_FALSE(equal_in_mcg(parse("e f"), parse("f e")));
}

TEST_CASE("filling basis") {
  const auto& basis = filling_basis();
  CHECK(basis.size() == 8);
  std::set<B> touched;
  for (const Arc& x : basis) {
    touched.insert(x.start.boundary);
    touched.insert(x.end.boundary);
  }
  CHECK(touched.size() == 4);
}

TEST_CASE("embedded arcs") {
  CHECK(is_embedded(arc(B::C1, 0, B::C2, 0)));
  CHECK_FALSE(is_embedded(arc(B::C1, 0, B::C1, 0)));
  CHECK(is_embedded(arc(B::C4, 0, B::C4, 0, {1})));
  // Twisting an embedded arc keeps it embedded.
  for (const Arc& x : embedded_arcs_upto(2)) {
    for (Generator g : {Generator::e, Generator::g}) CHECK(is_embedded(apply_twist(x, g, 1)));
  }
  // Spiralling twice around C1 from C4 meets itself.
  CHECK_FALSE(is_embedded(arc(B::C4, 0, B::C4, 0, {1, 1})));
}

TEST_CASE("enumeration agrees with the brute-force filter") {
  const int bound = 4;
  std::set<std::tuple<int, int, FreeWord>> brute;
  std::vector<FreeWord> words = {{}};
  for (int len = 1; len <= bound; ++len) {
    std::vector<FreeWord> next;
    for (const FreeWord& w : words) {
      if (static_cast<int>(w.size()) != len - 1) continue;
      for (int l : {1, -1, 2, -2, 3, -3}) {
        if (!w.empty() && w.back() == -l) continue;
        FreeWord x = w;
        x.push_back(l);
        next.push_back(x);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const FreeWord& w : words) {
    for (int s : polygon::kBoundarySides) {
      for (int t : polygon::kBoundarySides) {
        Arc a{polygon::endpoint_of_side(s), polygon::endpoint_of_side(t), word_to_crossings(w)};
        if (is_embedded(a)) brute.insert({s, t, w});
      }
    }
  }
  std::set<std::tuple<int, int, FreeWord>> listed;
  for (const Arc& a : embedded_arcs_upto(bound)) {
    listed.insert({polygon::side_of(a.start), polygon::side_of(a.end), crossings_to_word(a.crossings)});
  }
  CHECK(listed == brute);
}

TEST_CASE("enumeration order") {
  const auto& arcs = embedded_arcs_upto(5);
  CHECK(std::is_sorted(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    if (x.crossings.size() != y.crossings.size()) return x.crossings.size() < y.crossings.size();
    if (x.start != y.start) return x.start < y.start;
    if (x.end != y.end) return x.end < y.end;
    return x.crossings < y.crossings;
  }));
  CHECK(&embedded_arcs_upto(5) == &arcs);
  CHECK_THROWS_AS(embedded_arcs_upto(-1), PreconditionError);
}

TEST_CASE("right-veering search") {
  const RVReport ot = is_right_veering_upto(parse("a b c d e^-2 f^-1"), 12);
  REQUIRE(ot.witness_found);
  CHECK(side_at_start(*ot.witness, apply_word(*ot.witness, parse("a b c d e^-2 f^-1"))) == Side::Left);
  CHECK(*ot.image == apply_word(*ot.witness, parse("a b c d e^-2 f^-1")));
  CHECK(ot.boundary == ot.witness->start.boundary);

  for (const char* w : {"e f", "", "a", "g h^2 e"}) {
    const RVReport r = is_right_veering_upto(parse(w), 12);
    CHECK_FALSE(r.witness_found);
    CHECK(r.bound == 12);
  }
  CHECK_THROWS_AS(is_right_veering_upto(parse("e"), 0), PreconditionError);

  // The witness is the first left-moving arc in search order.
  const Word w = parse("a^-1 e f");
  const RVReport r = is_right_veering_upto(w, 4);
  REQUIRE(r.witness_found);
  for (const Arc& x : embedded_arcs_upto(4)) {
    if (x == *r.witness) break;
    CHECK(side_at_start(x, apply_word(x, w)) != Side::Left);
  }
}

TEST_CASE("ArcAction") {
  const ArcAction e = ArcAction::twist(Generator::e, 1);
  CHECK(e.then(ArcAction::twist(Generator::e, -1)) == ArcAction::identity());
  CHECK(e.power(3) == ArcAction::of(parse("e^3")));
  CHECK(e.power(0) == ArcAction::identity());
  CHECK_THROWS_AS(e.power(-1), PreconditionError);
  CHECK(ArcAction::of(parse("e f")) == e.then(ArcAction::twist(Generator::f, 1)));
}
