#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lantern/free_word.hpp"
#include "lantern/word.hpp"

namespace lantern {

// Surface model
// -------------
// The four-holed sphere is cut along three disjoint arcs delta_1, delta_2,
// delta_3 running from C1, C2, C3 to C4. The result is a 12-gon whose sides,
// in counter-clockwise order, are
//
//   0: C4 (position 0)   1: delta_1 (west)   2: C1   3: delta_1 (east)
//   4: C4 (position 1)   5: delta_2 (west)   6: C2   7: delta_2 (east)
//   8: C4 (position 2)   9: delta_3 (west)  10: C3  11: delta_3 (east)
//
// Copies of the 12-gon tile the universal cover; a tile is named by the
// reduced free word that reaches it from the base tile. Letter +i leaves a
// tile through side 4i-3 and enters the next one through side 4i-1.

enum class BoundaryLabel : unsigned char { C1, C2, C3, C4 };

std::string to_string(BoundaryLabel b);
std::optional<BoundaryLabel> boundary_from_string(const std::string& s);

// A marked point on the boundary: one per boundary side of the 12-gon.
struct Endpoint {
  BoundaryLabel boundary = BoundaryLabel::C4;
  int position = 0;

  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Crossing {
  int cut = 1;   // 1..3
  int sign = 1;  // +1 crosses delta_cut west to east

  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

struct Arc {
  Endpoint start;
  Endpoint end;
  std::vector<Crossing> crossings;

  friend bool operator==(const Arc&, const Arc&) = default;
};

enum class Side { Left, Right, Equal };
std::string to_string(Side s);

class MalformedArc : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace polygon {

inline constexpr int kSides = 12;

int side_of(const Endpoint& p);            // throws MalformedArc on a bad endpoint
Endpoint endpoint_of_side(int side);       // side must be a boundary side
bool is_boundary_side(int side);
inline constexpr std::array<int, 6> kBoundarySides = {0, 2, 4, 6, 8, 10};

int exit_side(Letter l);
int enter_side(Letter l);

// True when `side` lies strictly inside the counter-clockwise run from
// `entry` to `exit`, i.e. to the right of a path crossing the tile from
// `entry` to `exit`.
bool right_of(int entry, int exit, int side);

}  // namespace polygon

FreeWord crossings_to_word(const std::vector<Crossing>& crossings);
std::vector<Crossing> word_to_crossings(const FreeWord& w);

struct SurfaceModel {
  // Cyclic crossing sequences of the eight twist curves against the cut
  // system, indexed by Generator.
  std::array<FreeWord, 8> curves;
};

// The model is validated on first use: the cut 12-gon must glue up to a
// planar surface with four boundary circles and both lantern relations must
// hold for the curve coordinates. Throws InvariantViolation otherwise.
const SurfaceModel& surface_model();

// Removes backtracks and validates the endpoints. Idempotent.
Arc canonical(const Arc& arc);

// The same arc traversed from its end.
Arc reversed(const Arc& arc);

// Image of a canonical arc under the right (sign=+1) or left (sign=-1) Dehn
// twist along the named curve, computed from the lifts of the curve that
// separate the two ends of the lifted arc.
Arc apply_twist(const Arc& arc, Generator curve, int sign);
Arc apply_twist_along(const Arc& arc, const FreeWord& curve, int sign);

// How a mapping class acts on paths: images of the loops x1,x2,x3 at the
// base point (C4, position 0) and of the six spokes from the base point to
// each marked boundary point.
class ArcAction {
 public:
  static ArcAction identity();
  static ArcAction from_images(std::array<FreeWord, 3> loops, std::array<FreeWord, 6> spokes);
  static ArcAction twist_along(const FreeWord& curve, int sign);
  static ArcAction twist(Generator g, int sign);
  // The word is applied left to right.
  static ArcAction of(const Word& w);

  // First *this, then `next`.
  ArcAction then(const ArcAction& next) const;
  ArcAction power(long n) const;

  Arc apply(const Arc& arc) const;

  const std::array<FreeWord, 3>& loops() const { return loops_; }
  const std::array<FreeWord, 6>& spokes() const { return spokes_; }

  friend bool operator==(const ArcAction&, const ArcAction&) = default;

 private:
  FreeWord image_of(const FreeWord& w) const;

  std::array<FreeWord, 3> loops_;
  std::array<FreeWord, 6> spokes_;  // indexed by boundary side / 2
};

Arc apply_word(const Arc& arc, const Word& w);
// Reference path: folds apply_twist one letter at a time.
Arc apply_word_by_twists(const Arc& arc, const Word& w);

// Where beta ends up relative to alpha at their shared starting point.
Side side_at_start(const Arc& alpha, const Arc& beta);

// Arcs whose action pins down a mapping class: the five spokes from the base
// point plus one arc around each of C1, C2, C3.
const std::vector<Arc>& filling_basis();
bool equal_in_mcg(const Word& w1, const Word& w2);

bool is_embedded(const Arc& arc);

// All embedded arcs with at most `bound` crossings, in search order: by
// number of crossings, then start boundary and position, then end boundary
// and position, then crossing sequence.
const std::vector<Arc>& embedded_arcs_upto(int bound);

struct RVReport {
  bool witness_found = false;
  int bound = 0;
  std::optional<Arc> witness;
  std::optional<Arc> image;
  BoundaryLabel boundary = BoundaryLabel::C1;
};

RVReport is_right_veering_upto(const Word& w, int bound);
RVReport is_right_veering_upto(const ArcAction& action, int bound);

}  // namespace lantern
