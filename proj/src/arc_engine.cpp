#include "lantern/arc_engine.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace lantern {

std::string to_string(BoundaryLabel b) {
  static const char* names[] = {"C1", "C2", "C3", "C4"};
  return names[static_cast<int>(b)];
}

std::optional<BoundaryLabel> boundary_from_string(const std::string& s) {
  if (s == "C1") return BoundaryLabel::C1;
  if (s == "C2") return BoundaryLabel::C2;
  if (s == "C3") return BoundaryLabel::C3;
  if (s == "C4") return BoundaryLabel::C4;
  return std::nullopt;
}

std::string to_string(Side s) {
  switch (s) {
    case Side::Left: return "Left";
    case Side::Right: return "Right";
    case Side::Equal: return "Equal";
  }
  return "?";
}

namespace polygon {

int side_of(const Endpoint& p) {
  switch (p.boundary) {
    case BoundaryLabel::C1:
    case BoundaryLabel::C2:
    case BoundaryLabel::C3:
      if (p.position != 0) {
        throw MalformedArc(to_string(p.boundary) + " has a single marked point; got position " +
                           std::to_string(p.position));
      }
      return 4 * static_cast<int>(p.boundary) + 2;
    case BoundaryLabel::C4:
      if (p.position < 0 || p.position > 2) {
        throw MalformedArc("C4 positions are 0..2; got " + std::to_string(p.position));
      }
      return 4 * p.position;
  }
  throw MalformedArc("unknown boundary label");
}

bool is_boundary_side(int side) { return side >= 0 && side < kSides && side % 2 == 0; }

Endpoint endpoint_of_side(int side) {
  if (side % 4 == 0) return {BoundaryLabel::C4, side / 4};
  return {static_cast<BoundaryLabel>(side / 4), 0};
}

int exit_side(Letter l) { return l > 0 ? 4 * l - 3 : -4 * l - 1; }
int enter_side(Letter l) { return l > 0 ? 4 * l - 1 : -4 * l - 3; }

bool right_of(int entry, int exit, int side) {
  int off = ((side - entry) % kSides + kSides) % kSides;
  int span = ((exit - entry) % kSides + kSides) % kSides;
  return off > 0 && off < span;
}

}  // namespace polygon

FreeWord crossings_to_word(const std::vector<Crossing>& crossings) {
  FreeWord w;
  w.reserve(crossings.size());
  for (const Crossing& c : crossings) {
    if (c.cut < 1 || c.cut > 3) throw MalformedArc("cut index must be 1..3");
    if (c.sign != 1 && c.sign != -1) throw MalformedArc("crossing sign must be +1 or -1");
    w.push_back(c.sign * c.cut);
  }
  return w;
}

std::vector<Crossing> word_to_crossings(const FreeWord& w) {
  std::vector<Crossing> out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back({std::abs(l), l > 0 ? 1 : -1});
  return out;
}

Arc reversed(const Arc& arc) {
  Arc out{arc.end, arc.start, {}};
  for (auto it = arc.crossings.rbegin(); it != arc.crossings.rend(); ++it) {
    out.crossings.push_back({it->cut, -it->sign});
  }
  return out;
}

Arc canonical(const Arc& arc) {
  polygon::side_of(arc.start);
  polygon::side_of(arc.end);
  Arc out{arc.start, arc.end, word_to_crossings(reduced(crossings_to_word(arc.crossings)))};
  return out;
}

namespace {

using polygon::enter_side;
using polygon::exit_side;

// A lift of a closed curve: the axis through `anchor` that leaves it along
// the rotation of the curve's crossing sequence starting at `offset`.
struct Line {
  FreeWord anchor;
  FreeWord rotation;
};

FreeWord rotate(const FreeWord& c, std::size_t k) {
  FreeWord out(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
  out.insert(out.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

Side classify(const FreeWord& rotation, std::size_t idx, int side) {
  const std::size_t L = rotation.size();
  int in = enter_side(rotation[(idx + L - 1) % L]);
  int out = exit_side(rotation[idx]);
  return polygon::right_of(in, out, side) ? Side::Right : Side::Left;
}

// Which side of the line a point lies on. The point is a tile plus, when the
// tile sits on the line itself, a boundary side of that tile.
std::optional<Side> side_of_line(const Line& line, const FreeWord& tile,
                                 std::optional<int> boundary_side) {
  FreeWord v = concat(inverse(line.anchor), tile);
  const FreeWord& r = line.rotation;
  const std::size_t L = r.size();
  std::size_t idx = 0;
  for (Letter l : v) {
    if (l == r[idx]) {
      idx = (idx + 1) % L;
    } else if (l == -r[(idx + L - 1) % L]) {
      idx = (idx + L - 1) % L;
    } else {
      return classify(r, idx, exit_side(l));
    }
  }
  if (!boundary_side) return std::nullopt;
  return classify(r, idx, *boundary_side);
}

FreeWord word_power(const FreeWord& w, int n) {
  FreeWord out;
  for (int i = 0; i < n; ++i) append_reduced(out, w);
  return out;
}

// A tile on `b` that is not on `a`; lifts of a simple curve share at most a
// bounded stretch.
FreeWord far_tile(const Line& a, const Line& b) {
  for (int m = 1; m <= 256; m *= 2) {
    FreeWord tile = concat(b.anchor, word_power(b.rotation, m));
    if (side_of_line(a, tile, std::nullopt)) return tile;
  }
  throw InvariantViolation("two lifts of a curve share an unbounded stretch");
}

struct CrossedLine {
  Line line;
  int direction;  // +1 when the arc crosses from the right side to the left side
};

}  // namespace

Arc apply_twist_along(const Arc& arc, const FreeWord& curve, int sign) {
  if (curve.empty()) return canonical(arc);
  const int s = polygon::side_of(arc.start);
  const int t = polygon::side_of(arc.end);
  const FreeWord w = reduced(crossings_to_word(arc.crossings));
  const FreeWord empty;

  std::set<FreeWord> seen;
  std::vector<CrossedLine> crossed;
  FreeWord tile;
  for (std::size_t j = 0; j <= w.size(); ++j) {
    for (std::size_t k = 0; k < curve.size(); ++k) {
      Line line{tile, rotate(curve, k)};
      FreeWord key = concat(concat(tile, line.rotation), inverse(tile));
      if (!seen.insert(key).second) continue;
      Side at_start = *side_of_line(line, empty, s);
      Side at_end = *side_of_line(line, w, t);
      if (at_start == at_end) continue;
      crossed.push_back({std::move(line), at_start == Side::Right ? 1 : -1});
    }
    if (j < w.size()) tile.push_back(w[j]);
  }

  // Crossed lifts are pairwise disjoint and each separates the two ends, so
  // they are nested; order them from the start of the arc.
  std::vector<Side> start_sides;
  for (const CrossedLine& c : crossed) start_sides.push_back(*side_of_line(c.line, empty, s));
  std::vector<std::size_t> order(crossed.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (x == y) return false;
    FreeWord probe = far_tile(crossed[x].line, crossed[y].line);
    return *side_of_line(crossed[x].line, probe, std::nullopt) != start_sides[x];
  });

  FreeWord prefix;
  for (std::size_t i : order) {
    const CrossedLine& c = crossed[i];
    FreeWord loop = c.direction * sign > 0 ? c.line.rotation : inverse(c.line.rotation);
    append_reduced(prefix, concat(concat(c.line.anchor, loop), inverse(c.line.anchor)));
  }
  append_reduced(prefix, w);
  return Arc{arc.start, arc.end, word_to_crossings(prefix)};
}

namespace {

// Coordinates of the twist curves. Boundary-parallel curves go once around
// their hole; e and f enclose holes {1,2} and {2,3}; g and h are the two
// curves enclosing {1,3} that complete the lantern relations.
SurfaceModel make_candidate_model() {
  SurfaceModel m;
  m.curves[index_of(Generator::a)] = {1};
  m.curves[index_of(Generator::b)] = {2};
  m.curves[index_of(Generator::c)] = {3};
  m.curves[index_of(Generator::d)] = {1, 2, 3};
  m.curves[index_of(Generator::e)] = {1, 2};
  m.curves[index_of(Generator::f)] = {2, 3};
  m.curves[index_of(Generator::g)] = {1, 2, 3, -2};
  m.curves[index_of(Generator::h)] = {1, 3};
  return m;
}

}  // namespace

// ---- ArcAction --------------------------------------------------------------

ArcAction ArcAction::identity() {
  ArcAction a;
  for (int i = 0; i < 3; ++i) a.loops_[i] = {i + 1};
  return a;
}

FreeWord ArcAction::image_of(const FreeWord& w) const {
  FreeWord out;
  for (Letter l : w) {
    const FreeWord& img = loops_[std::abs(l) - 1];
    append_reduced(out, l > 0 ? img : inverse(img));
  }
  return out;
}

Arc ArcAction::apply(const Arc& arc) const {
  const int s = polygon::side_of(arc.start);
  const int t = polygon::side_of(arc.end);
  FreeWord out = inverse(spokes_[s / 2]);
  append_reduced(out, image_of(crossings_to_word(arc.crossings)));
  append_reduced(out, spokes_[t / 2]);
  return Arc{arc.start, arc.end, word_to_crossings(out)};
}

ArcAction ArcAction::then(const ArcAction& next) const {
  ArcAction out;
  for (int i = 0; i < 3; ++i) out.loops_[i] = next.image_of(loops_[i]);
  for (int k = 0; k < 6; ++k) {
    FreeWord img = inverse(next.spokes_[0]);
    append_reduced(img, next.image_of(spokes_[k]));
    append_reduced(img, next.spokes_[k]);
    out.spokes_[k] = std::move(img);
  }
  return out;
}

ArcAction ArcAction::power(long n) const {
  if (n < 0) {
    throw PreconditionError("ArcAction::power expects a non-negative exponent");
  }
  ArcAction result = identity();
  ArcAction base = *this;
  while (n > 0) {
    if (n & 1L) result = result.then(base);
    base = base.then(base);
    n >>= 1;
  }
  return result;
}

ArcAction ArcAction::from_images(std::array<FreeWord, 3> loops, std::array<FreeWord, 6> spokes) {
  ArcAction a;
  a.loops_ = std::move(loops);
  a.spokes_ = std::move(spokes);
  return a;
}

ArcAction ArcAction::twist_along(const FreeWord& curve, int sign) {
  const Endpoint base{BoundaryLabel::C4, 0};
  std::array<FreeWord, 3> loops;
  std::array<FreeWord, 6> spokes;
  for (int i = 0; i < 3; ++i) {
    Arc loop{base, base, {Crossing{i + 1, 1}}};
    loops[i] = crossings_to_word(apply_twist_along(loop, curve, sign).crossings);
  }
  for (int k = 0; k < 6; ++k) {
    Arc spoke{base, polygon::endpoint_of_side(2 * k), {}};
    spokes[k] = crossings_to_word(apply_twist_along(spoke, curve, sign).crossings);
  }
  return from_images(std::move(loops), std::move(spokes));
}

namespace {

struct TwistTable {
  std::array<ArcAction, 8> positive;
  std::array<ArcAction, 8> negative;
};

const TwistTable& twist_table() {
  static const TwistTable table = [] {
    const SurfaceModel& model = surface_model();
    TwistTable t;
    for (Generator g : kAllGenerators) {
      t.positive[index_of(g)] = ArcAction::twist_along(model.curves[index_of(g)], 1);
      t.negative[index_of(g)] = ArcAction::twist_along(model.curves[index_of(g)], -1);
    }
    return t;
  }();
  return table;
}

long to_long(const Integer& n) {
  if (n > Integer(1L << 40) || n < -Integer(1L << 40)) {
    throw std::range_error("exponent too large for the arc action");
  }
  return n.convert_to<long>();
}

ArcAction action_with_curves(const std::array<ArcAction, 8>& pos,
                             const std::array<ArcAction, 8>& neg, const Word& w) {
  ArcAction result = ArcAction::identity();
  for (const Term& term : w.terms()) {
    long e = to_long(term.exponent);
    const ArcAction& step = e > 0 ? pos[index_of(term.generator)] : neg[index_of(term.generator)];
    result = result.then(step.power(std::abs(e)));
  }
  return result;
}

// The 12-gon with delta sides glued must be a sphere with four holes:
// Euler characteristic -2 and four boundary circles, one per label.
void check_cut_system() {
  // Side i runs from vertex i to vertex i+1. The west copy of delta_i runs
  // from C4 up to C_i, the east copy back down.
  std::vector<int> parent(polygon::kSides);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int i = 1; i <= 3; ++i) {
    int west = 4 * i - 3, east = 4 * i - 1;
    unite(west, (east + 1) % polygon::kSides);
    unite(west + 1, east);
  }
  std::set<int> vertices;
  for (int v = 0; v < polygon::kSides; ++v) vertices.insert(find(v));
  const int V = static_cast<int>(vertices.size());
  const int E = 3 + 6;
  const int F = 1;
  if (V - E + F != -2) throw InvariantViolation("cut system does not give Euler characteristic -2");

  // Boundary circles: boundary sides linked through shared vertices.
  std::vector<int> comp(polygon::kSides);
  std::iota(comp.begin(), comp.end(), 0);
  auto cfind = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (int a : polygon::kBoundarySides) {
    for (int b : polygon::kBoundarySides) {
      bool touch = find(a) == find(b) || find(a) == find((b + 1) % 12) ||
                   find((a + 1) % 12) == find(b) || find((a + 1) % 12) == find((b + 1) % 12);
      if (touch) comp[cfind(a)] = cfind(b);
    }
  }
  std::map<int, std::set<BoundaryLabel>> labels;
  for (int a : polygon::kBoundarySides) labels[cfind(a)].insert(polygon::endpoint_of_side(a).boundary);
  if (labels.size() != 4) throw InvariantViolation("cut system does not give four boundary circles");
  for (const auto& [root, set] : labels) {
    if (set.size() != 1) throw InvariantViolation("a boundary circle mixes labels");
  }
}

void check_lantern(const SurfaceModel& m) {
  std::array<ArcAction, 8> pos, neg;
  for (Generator g : kAllGenerators) {
    pos[index_of(g)] = ArcAction::twist_along(m.curves[index_of(g)], 1);
    neg[index_of(g)] = ArcAction::twist_along(m.curves[index_of(g)], -1);
  }
  const ArcAction boundary = action_with_curves(pos, neg, parse("a b c d"));
  if (action_with_curves(pos, neg, parse("g e f")) != boundary ||
      action_with_curves(pos, neg, parse("h f e")) != boundary) {
    throw InvariantViolation("curve coordinates fail the lantern relations");
  }
}

}  // namespace

const SurfaceModel& surface_model() {
  static const SurfaceModel model = [] {
    check_cut_system();
    SurfaceModel m = make_candidate_model();
    check_lantern(m);
    return m;
  }();
  return model;
}

ArcAction ArcAction::twist(Generator g, int sign) {
  const TwistTable& t = twist_table();
  return sign > 0 ? t.positive[index_of(g)] : t.negative[index_of(g)];
}

ArcAction ArcAction::of(const Word& w) {
  const TwistTable& t = twist_table();
  return action_with_curves(t.positive, t.negative, w);
}

Arc apply_twist(const Arc& arc, Generator curve, int sign) {
  return apply_twist_along(arc, surface_model().curves[index_of(curve)], sign);
}

Arc apply_word(const Arc& arc, const Word& w) { return ArcAction::of(w).apply(canonical(arc)); }

Arc apply_word_by_twists(const Arc& arc, const Word& w) {
  Arc current = canonical(arc);
  for (const Term& term : w.terms()) {
    long e = to_long(term.exponent);
    for (long i = 0; i < std::abs(e); ++i) current = apply_twist(current, term.generator, e > 0 ? 1 : -1);
  }
  return current;
}

Side side_at_start(const Arc& alpha, const Arc& beta) {
  if (alpha.start != beta.start) throw PreconditionError("arcs do not share a start point");
  const FreeWord a = reduced(crossings_to_word(alpha.crossings));
  const FreeWord b = reduced(crossings_to_word(beta.crossings));
  const int s = polygon::side_of(alpha.start);
  const int ta = polygon::side_of(alpha.end);
  const int tb = polygon::side_of(beta.end);
  for (std::size_t i = 0;; ++i) {
    const int entry = i == 0 ? s : enter_side(a[i - 1]);
    const bool a_ends = i == a.size();
    const bool b_ends = i == b.size();
    if (!a_ends && !b_ends && a[i] == b[i]) continue;
    const int xa = a_ends ? ta : exit_side(a[i]);
    const int xb = b_ends ? tb : exit_side(b[i]);
    if (xa == xb) return Side::Equal;  // both end on the same side of the same tile
    return polygon::right_of(entry, xa, xb) ? Side::Right : Side::Left;
  }
}

const std::vector<Arc>& filling_basis() {
  static const std::vector<Arc> basis = [] {
    const Endpoint base{BoundaryLabel::C4, 0};
    std::vector<Arc> arcs;
    for (int side : {2, 4, 6, 8, 10}) arcs.push_back({base, polygon::endpoint_of_side(side), {}});
    for (int i = 1; i <= 3; ++i) {
      arcs.push_back({base, {static_cast<BoundaryLabel>(i - 1), 0}, {Crossing{i, 1}}});
    }
    return arcs;
  }();
  return basis;
}

bool equal_in_mcg(const Word& w1, const Word& w2) {
  const ArcAction a1 = ArcAction::of(w1);
  const ArcAction a2 = ArcAction::of(w2);
  for (const Arc& arc : filling_basis()) {
    if (a1.apply(arc) != a2.apply(arc)) return false;
  }
  return true;
}

}  // namespace lantern

namespace lantern {

namespace {

// A path in the tile tree from boundary side `start` of the base tile along
// `word`; `end` is absent while the path is still being extended.
// Reduced product of `head` and `tail`, read without materializing it.
struct JoinedView {
  const FreeWord& head;
  const FreeWord& tail;
  std::size_t cancel;

  JoinedView(const FreeWord& h, const FreeWord& t) : head(h), tail(t), cancel(0) {
    while (cancel < head.size() && cancel < tail.size() &&
           head[head.size() - 1 - cancel] == -tail[cancel]) {
      ++cancel;
    }
  }
  std::size_t size() const { return head.size() + tail.size() - 2 * cancel; }
  Letter operator[](std::size_t i) const {
    const std::size_t h = head.size() - cancel;
    return i < h ? head[i] : tail[cancel + i - h];
  }
};

struct PathView {
  const FreeWord& word;
  int start;
  std::optional<int> end;
};

// Side of a point relative to the lifted path. Undecided when the point
// shares a boundary side with an end of the path (Never) or when the answer
// depends on how an unfinished path continues (Later).
enum class PointSide { Left, Right, Never, Later };

template <typename Tile>
PointSide locate(const PathView& p, const Tile& tile, std::optional<int> side) {
  std::size_t c = 0;
  while (c < tile.size() && c < p.word.size() && tile[c] == p.word[c]) ++c;
  const int entry = c == 0 ? p.start : enter_side(p.word[c - 1]);
  std::optional<int> exit;
  if (c < p.word.size()) {
    exit = exit_side(p.word[c]);
  } else {
    exit = p.end;
  }
  if (!exit) return PointSide::Later;
  int probe;
  if (c < tile.size()) {
    probe = exit_side(tile[c]);
  } else {
    if (!side) return PointSide::Later;
    probe = *side;
  }
  if (probe == entry || probe == *exit) return PointSide::Never;
  return polygon::right_of(entry, *exit, probe) ? PointSide::Right : PointSide::Left;
}

template <typename Tile>
std::optional<Side> side_of_path(const PathView& p, const Tile& tile, std::optional<int> side) {
  switch (locate(p, tile, side)) {
    case PointSide::Left: return Side::Left;
    case PointSide::Right: return Side::Right;
    default: return std::nullopt;
  }
}

// True when some translate of the lifted path provably crosses it.
bool has_self_crossing(const PathView& p) {
  const FreeWord& w = p.word;
  std::vector<FreeWord> tiles(w.size() + 1);
  for (std::size_t j = 1; j <= w.size(); ++j) {
    tiles[j] = tiles[j - 1];
    tiles[j].push_back(w[j - 1]);
  }
  std::set<FreeWord> translates;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const FreeWord inv = inverse(tiles[i]);
    for (std::size_t j = 0; j < tiles.size(); ++j) {
      if (i != j) translates.insert(concat(tiles[j], inv));
    }
  }
  for (const FreeWord& g : translates) {
    if (g.empty()) continue;
    auto a = side_of_path(p, g, p.start);
    if (!a) continue;
    auto b = side_of_path(p, JoinedView(g, w), p.end);
    if (b && *a != *b) return true;
  }
  return false;
}

}  // namespace

bool is_embedded(const Arc& arc) {
  const FreeWord w = reduced(crossings_to_word(arc.crossings));
  const int s = polygon::side_of(arc.start);
  const int t = polygon::side_of(arc.end);
  if (w.empty() && s == t) return false;
  return !has_self_crossing(PathView{w, s, t});
}

namespace {

struct TrieNode {
  int parent = -1;
  Letter letter = 0;
  int start = 0;
};

struct ArcCatalog {
  std::vector<Arc> arcs;
  std::vector<int> node_of_arc;
  std::vector<int> end_of_arc;
  std::vector<TrieNode> nodes;
  // Derived after sorting.
  std::vector<std::vector<int>> children;
  std::vector<std::vector<int>> arcs_at;
  std::vector<std::size_t> first_arc_below;  // smallest arc index in the subtree
  std::vector<int> roots;
};

// Depth-first growth of embedded arcs. `pending` holds the translates whose
// crossing status still depends on how the path continues; translates that
// have been settled as disjoint never need another look.
class ArcEnumerator {
 public:
  ArcEnumerator(ArcCatalog& out, int bound) : out_(out), bound_(bound) {}

  void run(int start) {
    FreeWord w;
    tiles_.assign(1, FreeWord{});
    out_.nodes.push_back({-1, 0, start});
    grow(w, start, static_cast<int>(out_.nodes.size()) - 1, {});
  }

 private:
  enum class Status { Crossing, Disjoint, Open };

  static Status status(const PathView& p, const FreeWord& g) {
    const PointSide a = locate(p, g, p.start);
    if (a == PointSide::Never) return Status::Disjoint;
    const PointSide b = locate(p, JoinedView(g, p.word), p.end);
    if (b == PointSide::Never) return Status::Disjoint;
    if (a == PointSide::Later || b == PointSide::Later) return Status::Open;
    return a != b ? Status::Crossing : Status::Disjoint;
  }

  void grow(FreeWord& w, int s, int node, const std::vector<FreeWord>& inherited) {
    const PathView partial{w, s, std::nullopt};
    std::vector<FreeWord> pending = inherited;
    // Translates meeting the newest tile.
    if (!w.empty()) {
      const FreeWord& last = tiles_.back();
      for (std::size_t i = 0; i + 1 < tiles_.size(); ++i) {
        pending.push_back(concat(last, inverse(tiles_[i])));
      }
    }
    std::vector<FreeWord> open;
    for (const FreeWord& g : pending) {
      switch (status(partial, g)) {
        case Status::Crossing:
          out_.nodes.pop_back();
          return;
        case Status::Disjoint: break;
        case Status::Open: open.push_back(g); break;
      }
    }
    for (int t : polygon::kBoundarySides) {
      if (w.empty() && t == s) continue;
      const PathView full{w, s, t};
      bool ok = true;
      for (const FreeWord& g : open) {
        if (status(full, g) == Status::Crossing) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out_.arcs.push_back(
            Arc{polygon::endpoint_of_side(s), polygon::endpoint_of_side(t), word_to_crossings(w)});
        out_.node_of_arc.push_back(node);
        out_.end_of_arc.push_back(t);
      }
    }
    if (static_cast<int>(w.size()) >= bound_) return;
    for (Letter l : {1, -1, 2, -2, 3, -3}) {
      if (!w.empty() && w.back() == -l) continue;
      w.push_back(l);
      tiles_.push_back(w);
      out_.nodes.push_back({node, l, s});
      grow(w, s, static_cast<int>(out_.nodes.size()) - 1, open);
      tiles_.pop_back();
      w.pop_back();
    }
  }

  ArcCatalog& out_;
  int bound_;
  std::vector<FreeWord> tiles_;
};

const ArcCatalog& catalog(int bound) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ArcCatalog>> cache;
  if (bound < 0) throw PreconditionError("bound must be non-negative");
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[bound];
  if (!slot) {
    ArcCatalog raw;
    for (int s : polygon::kBoundarySides) ArcEnumerator(raw, bound).run(s);
    std::vector<std::size_t> order(raw.arcs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      const Arc& x = raw.arcs[i];
      const Arc& y = raw.arcs[j];
      if (x.crossings.size() != y.crossings.size()) return x.crossings.size() < y.crossings.size();
      if (x.start != y.start) return x.start < y.start;
      if (x.end != y.end) return x.end < y.end;
      return x.crossings < y.crossings;
    });
    auto sorted = std::make_unique<ArcCatalog>();
    sorted->nodes = std::move(raw.nodes);
    for (std::size_t i : order) {
      sorted->arcs.push_back(std::move(raw.arcs[i]));
      sorted->node_of_arc.push_back(raw.node_of_arc[i]);
      sorted->end_of_arc.push_back(raw.end_of_arc[i]);
    }
    ArcCatalog& c = *sorted;
    const std::size_t n = c.nodes.size();
    c.children.assign(n, {});
    c.arcs_at.assign(n, {});
    c.first_arc_below.assign(n, c.arcs.size());
    for (std::size_t v = 0; v < n; ++v) {
      if (c.nodes[v].parent < 0) {
        c.roots.push_back(static_cast<int>(v));
      } else {
        c.children[c.nodes[v].parent].push_back(static_cast<int>(v));
      }
    }
    for (std::size_t k = 0; k < c.arcs.size(); ++k) {
      c.arcs_at[c.node_of_arc[k]].push_back(static_cast<int>(k));
    }
    // Children are created after their parents, so a reverse sweep suffices.
    for (std::size_t v = n; v-- > 0;) {
      for (int k : c.arcs_at[v]) {
        c.first_arc_below[v] = std::min(c.first_arc_below[v], static_cast<std::size_t>(k));
      }
      const int parent = c.nodes[v].parent;
      if (parent >= 0) {
        c.first_arc_below[parent] = std::min(c.first_arc_below[parent], c.first_arc_below[v]);
      }
    }
    slot = std::move(sorted);
  }
  return *slot;
}

template <typename A, typename B>
Side compare_paths(int start, const A& a, int a_end, const B& b, int b_end) {
  for (std::size_t i = 0;; ++i) {
    const int entry = i == 0 ? start : enter_side(a[i - 1]);
    const bool a_ends = i == a.size();
    const bool b_ends = i == b.size();
    if (!a_ends && !b_ends && a[i] == b[i]) continue;
    const int xa = a_ends ? a_end : exit_side(a[i]);
    const int xb = b_ends ? b_end : exit_side(b[i]);
    if (xa == xb) return Side::Equal;
    return polygon::right_of(entry, xa, xb) ? Side::Right : Side::Left;
  }
}

}  // namespace

const std::vector<Arc>& embedded_arcs_upto(int bound) { return catalog(bound).arcs; }

namespace {

// Depth-first pass over the arc trie that keeps spoke(start)^-1 * h(prefix)
// in a single buffer, undoing each step on the way back up.
class WitnessScan {
 public:
  WitnessScan(const ArcCatalog& cat, const ArcAction& action) : cat_(cat), action_(action) {
    for (int i = 0; i < 3; ++i) inverse_loops_[i] = inverse(action.loops()[i]);
    best_ = cat.arcs.size();
  }

  std::size_t run() {
    for (int root : cat_.roots) {
      image_ = inverse(action_.spokes()[cat_.nodes[root].start / 2]);
      path_.clear();
      visit(root);
    }
    return best_;
  }

 private:
  void visit(int node) {
    if (cat_.first_arc_below[node] >= best_) return;
    const int s = cat_.nodes[node].start;
    for (int k : cat_.arcs_at[node]) {
      if (static_cast<std::size_t>(k) >= best_) break;
      const int t = cat_.end_of_arc[k];
      const JoinedView image(image_, action_.spokes()[t / 2]);
      if (compare_paths(s, path_, t, image, t) == Side::Left) best_ = static_cast<std::size_t>(k);
    }
    for (int child : cat_.children[node]) {
      const Letter l = cat_.nodes[child].letter;
      const FreeWord& step = l > 0 ? action_.loops()[l - 1] : inverse_loops_[-l - 1];
      const std::size_t undo_mark = popped_.size();
      std::size_t pushed = 0;
      for (Letter x : step) {
        if (pushed == 0 && !image_.empty() && image_.back() == -x) {
          popped_.push_back(image_.back());
          image_.pop_back();
        } else {
          image_.push_back(x);
          ++pushed;
        }
      }
      path_.push_back(l);
      visit(child);
      path_.pop_back();
      image_.resize(image_.size() - pushed);
      while (popped_.size() > undo_mark) {
        image_.push_back(popped_.back());
        popped_.pop_back();
      }
    }
  }

  const ArcCatalog& cat_;
  const ArcAction& action_;
  std::array<FreeWord, 3> inverse_loops_;
  FreeWord image_;
  FreeWord path_;
  FreeWord popped_;
  std::size_t best_;
};

}  // namespace

RVReport is_right_veering_upto(const ArcAction& action, int bound) {
  if (bound < 1) throw PreconditionError("bound must be at least 1");
  RVReport report;
  report.bound = bound;
  // Witnesses are usually short. The catalog is sorted by length first, so
  // the first witness within a smaller bound is also the first overall.
  for (int limit = std::min(bound, 3);; limit = std::min(bound, 2 * limit)) {
    const ArcCatalog& cat = catalog(limit);
    const std::size_t k = WitnessScan(cat, action).run();
    if (k < cat.arcs.size()) {
      const Arc& arc = cat.arcs[k];
      report.witness_found = true;
      report.witness = arc;
      report.image = action.apply(arc);
      report.boundary = arc.start.boundary;
      return report;
    }
    if (limit == bound) return report;
  }
}

RVReport is_right_veering_upto(const Word& w, int bound) {
  return is_right_veering_upto(ArcAction::of(w), bound);
}

}  // namespace lantern
