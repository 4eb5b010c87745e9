#pragma once

// Symmetry analysis of operated premaniplexes X x Y: which automorphisms
// come from X, which lift from Y, and when the absence of anything further
// can be certified through the quotients Z attached to the flags of Y.

#include <cstddef>
#include <optional>
#include <vector>

#include "vops/symmetry.hpp"
#include "vops/voltage.hpp"

namespace vops {

// Embedded copy of an automorphism of X inside X x Y (acts on the X
// coordinate, fixes the Y coordinate).
FlagPermutation embed_x_automorphism(const FlagPermutation& g, int y_size);

// Orbit bookkeeping: with the product connected the automorphism group acts
// freely, so  product_orbits * index = x_orbits * y_size  with
// index = [Aut(X x Y) : Aut(X)].
struct OrbitAccount {
  std::size_t x_orbits;           // k
  std::size_t y_size;             // |Y|
  std::size_t x_aut_order;        // |Aut(X)|
  std::size_t lifted_aut_order;   // embedded copy, equals x_aut_order
  std::size_t product_aut_order;  // |Aut(X x Y)|
  std::size_t index;              // product_aut_order / x_aut_order
  std::size_t product_orbits;
  std::size_t t;                  // x_orbits * y_size / product_orbits
};
OrbitAccount orbit_accounting(const Premaniplex& x, const VoltageOperator& op);

// The quotient Z attached to a flag y1 of Y: realize the zeta images of the
// Schreier generators of the simultaneous stabilizer of (base, y1), read off
// the component of (base, y1) in the diagonal square of Y.  y1 == base gives
// the coset graph of zeta of the whole base stabilizer.
struct ZResult {
  CosetTable::Status status = CosetTable::Status::Capped;
  std::optional<Premaniplex> graph;
  std::size_t cosets = 0;
  bool ok() const { return status == CosetTable::Status::Complete; }
};
ZResult z_upsilon(const VoltageOperator& op, int y1,
                  std::size_t cap = kDefaultCosetCap);

// Certification of "no extra symmetry".  Covering X -> Z_y1 is necessary
// for an automorphism moving the base Y-coordinate to y1's class, so:
//  - NoExtra: no Z for y1 != base is covered and Aut(Y) is trivial;
//    every automorphism of the product comes from X.
//  - NoExtraBeyondLifts: no Z outside the Aut(Y)-orbit of the base is
//    covered; every automorphism is a lift of some tau in Aut(Y).
//  - ExtraPresent: only ever asserted from a direct comparison of
//    |Aut(X x Y)| against the lifted bound, never from a covering alone.
enum class Verdict { NoExtra, NoExtraBeyondLifts, ExtraPresent, Inconclusive };

struct ZRecord {
  int y1;
  bool in_base_orbit;  // y1 lies in the Aut(Y)-orbit of the base flag
  bool capped;
  std::size_t z_flags;  // when built
  bool covered;         // X covers Z (when built)
};

struct ExtraSymmetryCertificate {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<ZRecord> records;
  bool direct_checked = false;      // fell back to computing Aut(X x Y)
  std::size_t product_aut_order = 0;  // when direct_checked
  std::size_t lifted_order = 0;       // |lifted group| when direct_checked
};
// Requires preserves_connectivity(op) == Yes (throws DomainError otherwise,
// CappedError when that check is inconclusive).
ExtraSymmetryCertificate certify(const Premaniplex& x,
                                 const VoltageOperator& op,
                                 std::size_t cap = kDefaultCosetCap);

// Automorphisms of Y that fix every dart voltage; they always lift.
std::vector<FlagPermutation> aut_preserving(const VoltageOperator& op);

// Searches for a lift of tau in Aut(X x Y): an automorphism sending
// (x0, base) to some (x', base tau).  Product must be connected.
std::optional<FlagPermutation> find_lift(const Premaniplex& x,
                                         const VoltageOperator& op,
                                         const FlagPermutation& tau);

// The lifted group: embedded Aut(X) together with one lift per liftable
// tau in Aut(Y); its order is |Aut(X)| * |{liftable tau}|.
struct LiftedGroup {
  AutomorphismGroup group;
  std::vector<int> lifting_taus;  // indices into automorphisms(Y).elements
  std::size_t y_aut_order;
  bool equals_full;  // group == Aut(X x Y)
};
LiftedGroup lifted_group(const Premaniplex& x, const VoltageOperator& op);

// Checks tau-compatibility of an endomorphism r_i -> images[i] (it must
// match eta(d tau) = images(eta(d)) on every dart; throws DomainError
// otherwise), then tests X^{tau} x Y  ~  X x Y where X^{tau} is X operated
// by the one-flag operator with those images.
bool same_result_check(const Premaniplex& x, const VoltageOperator& op,
                       const FlagPermutation& tau,
                       const std::vector<CoxWord>& images);

}  // namespace vops
