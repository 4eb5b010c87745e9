#pragma once

// Voltage operators (Y, eta): an m-premaniplex Y whose darts carry voltages
// in the rank-n universal string group.  Applying one to an n-premaniplex X
// yields the operated premaniplex X x Y on flag pairs, with
//   (x, y)^i = (eta(dart of color i at y) applied to x,  y^i).
// Voltages compose anti-homomorphically along paths: later darts multiply on
// the left.

#include <cstddef>
#include <vector>

#include "vops/coxword.hpp"
#include "vops/cosetenum.hpp"
#include "vops/premaniplex.hpp"

namespace vops {

struct VoltageOperator {
  int source_rank = 0;                        // n
  Premaniplex y;                              // rank m structure
  std::vector<std::vector<CoxWord>> voltages; // voltages[color][flag]
  int base = 0;                               // y0

  int target_rank() const { return y.rank(); }
  const CoxWord& voltage(int flag, int color) const {
    return voltages[color][flag];
  }
};

struct OperatorViolation {
  enum class Kind {
    BadRank,          // voltage with wrong rank at this dart
    InverseMismatch,  // eta(d^{-1}) != eta(d)^{-1} on a proper edge
    NotInvolution,    // semi-edge voltage is not an involution
    HomotopyBroken    // alternating 4-cycle at (flag, color, color2) has
                      // nontrivial voltage
  } kind;
  int flag;
  int color;
  int color2 = -1;
};

struct OperatorReport {
  std::vector<OperatorViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Dart-level consistency plus triviality of every alternating 4-cycle
// voltage; the latter makes the voltage well defined on homotopy classes of
// paths (and makes products of valid operators premaniplexes).
OperatorReport validate_operator(const VoltageOperator& op);

// A path in Y: starts at `start`, traverses the letters of `word` rightmost
// first.
struct Path {
  int start;
  CoxWord word;
};

// Accumulated voltage of the path (anti-homomorphic).
CoxWord voltage_of_path(const VoltageOperator& op, const Path& path);

// X x Y.  Flag (x, y) has index x * |Y| + y.  Requires
// X.rank() == op.source_rank.
Premaniplex product(const Premaniplex& x, const VoltageOperator& op);

// Gauge-normalizes along a BFS spanning tree from op.base: tree darts get
// trivial voltage, a non-tree dart gets the voltage of
// (tree path to it) * dart * (tree path back).  The product is preserved up
// to isomorphism.  Requires Y connected.
VoltageOperator normalize(const VoltageOperator& op);

// Composition: applying `first` then `second` equals applying the returned
// operator.  first: (n,k), second: (k,m) -> result (n,m); the underlying
// premaniplex is first.y x second, and the voltage of a dart ((z,y), i) is
// the first-operator voltage of the path traced in first.y from z by
// second's dart voltage.
VoltageOperator compose(const VoltageOperator& first,
                        const VoltageOperator& second);

// eta along the closed path at op.base with word w; requires w to stabilize
// the base flag.
CoxWord zeta(const VoltageOperator& op, const CoxWord& w);

// Does X x Y stay connected for every connected X?  Equivalent to zeta
// mapping the base-flag stabilizer onto the whole source group; decided by
// (a) connectivity of Y, (b) a mod-2 abelianization certificate, (c) capped
// coset enumeration.
enum class Tri { Yes, No, Inconclusive };
struct ConnectivityCheck {
  Tri verdict = Tri::Inconclusive;
  // Finite index of the voltage subgroup when established (1 for Yes).
  std::size_t index = 0;
  bool abelian_witness = false;  // No decided by abelianization
  std::size_t cosets = 0;        // enumeration size when it ran
};
ConnectivityCheck preserves_connectivity(const VoltageOperator& op,
                                         std::size_t cap = kDefaultCosetCap);

}  // namespace vops
