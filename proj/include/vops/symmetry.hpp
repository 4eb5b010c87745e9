#pragma once

// Color-preserving morphisms between premaniplexes.  On a connected source a
// morphism is determined by the image of one flag, so searches are linear in
// the flag count per candidate.

#include <optional>
#include <vector>

#include "vops/premaniplex.hpp"

namespace vops {

struct FlagPermutation {
  std::vector<int> images;
  int operator()(int flag) const { return images[flag]; }
  friend bool operator==(const FlagPermutation&, const FlagPermutation&) =
      default;
  friend auto operator<=>(const FlagPermutation&, const FlagPermutation&) =
      default;
};

// Attempts the unique color-preserving extension of x0 -> q0.  P must be
// connected.  On conflict returns the dart (flag, color) of P where the
// extension failed.
struct MorphismResult {
  std::optional<std::vector<int>> mapping;  // flag of P -> flag of Q
  int conflict_flag = -1;
  int conflict_color = -1;
  bool ok() const { return mapping.has_value(); }
};
MorphismResult extend_morphism(const Premaniplex& p, const Premaniplex& q,
                               int x0, int q0);

struct AutomorphismGroup {
  std::vector<FlagPermutation> elements;       // ordered by image of base
  std::vector<int> orbit_of;                   // flag -> orbit id
  std::vector<std::vector<int>> orbit_lists;   // ascending, by least member
  std::size_t order() const { return elements.size(); }
};

// Full automorphism group of a connected premaniplex.  The action is free,
// so the order divides (and is at most) the flag count.
AutomorphismGroup automorphisms(const Premaniplex& p);

// Group generated by a set of flag permutations (each must be an
// automorphism of p); closure under composition.
AutomorphismGroup generated_group(const Premaniplex& p,
                                  std::vector<FlagPermutation> generators);

// Orbit partition of the flags under a list of automorphisms.
std::vector<std::vector<int>> orbits(const Premaniplex& p,
                                     const std::vector<FlagPermutation>& g);

// Both connected.  Isomorphism additionally requires equal flag counts.
bool is_isomorphic(const Premaniplex& p, const Premaniplex& q);
// True iff some morphism p -> q exists (then it is onto q).
bool covers(const Premaniplex& p, const Premaniplex& q);

// Symmetry type graph: quotient by the full automorphism group.
Quotient stg(const Premaniplex& p);

}  // namespace vops
