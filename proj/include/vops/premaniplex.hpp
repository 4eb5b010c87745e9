#pragma once

// Premaniplexes: rank-n flag graphs given by one involution per color on a
// dense 0-based flag set.  Fixed points are semi-edges.  The premaniplex
// axiom asks that colors at distance >= 2 commute (alternating 4-paths
// close).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vops/coxword.hpp"

namespace vops {

class Premaniplex {
 public:
  Premaniplex() = default;

  // Shape checks only (sizes and entry ranges); axiom violations are
  // reported by validate(), not here.
  Premaniplex(int rank, std::vector<std::vector<int>> perms);

  int rank() const { return rank_; }
  int flag_count() const { return flags_; }

  // x^i.
  int adj(int flag, int color) const { return perms_[color][flag]; }
  const std::vector<std::vector<int>>& perms() const { return perms_; }

  friend bool operator==(const Premaniplex&, const Premaniplex&) = default;

 private:
  int rank_ = 0;
  int flags_ = 0;
  std::vector<std::vector<int>> perms_;
};

struct Violation {
  enum class Kind { NotInvolution, AxiomBroken } kind;
  int flag;
  int color;        // offending color (NotInvolution) or smaller color (Axiom)
  int color2 = -1;  // second color for AxiomBroken
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Premaniplex& p);

bool is_connected(const Premaniplex& p);

// Connected + no semi-edges + no parallel edges.
bool is_maniplex(const Premaniplex& p);

// Applies w to x, rightmost letter first.  w.rank() must equal p.rank().
int apply_word(const Premaniplex& p, int flag, const CoxWord& w);

// Flag sets of the connected components, each ascending, ordered by least
// flag.
std::vector<std::vector<int>> components(const Premaniplex& p);

// The component of `flag` as its own premaniplex.  `to_parent[i]` is the
// original index of the component's flag i; `base` is the new index of
// `flag`.
struct Component {
  Premaniplex graph;
  std::vector<int> to_parent;
  int base;
};
Component component_of(const Premaniplex& p, int flag);

// BFS spanning tree of the base's component, exploring colors in increasing
// order.  `darts` lists tree darts (flag, color) in discovery order,
// oriented from the discovered-from flag.  `word_to[x]` satisfies
// apply_word(p, base, word_to[x]) == x for reached x.
struct SpanningTree {
  int base;
  std::vector<std::pair<int, int>> darts;
  std::vector<CoxWord> word_to;
  std::vector<char> reached;
};
SpanningTree spanning_tree(const Premaniplex& p, int base);

// Schreier generators of the stabilizer of `base` in C^n acting by
// monodromy: one word per non-tree dart (x, i) of the base's component,
// ordered by (flag, color):  inverse(word_to[x^i]) * r_i * word_to[x].
// Semi-edges contribute one dart; a non-tree proper edge contributes both
// (mutually inverse) darts.
struct SchreierSubgroup {
  int rank;
  int base;
  std::vector<CoxWord> generators;
};
SchreierSubgroup schreier_generators(const Premaniplex& p, int base);

// Quotient by a group of automorphisms, given as flag-image tables.  Throws
// DomainError if some table is not an automorphism.  Orbits are numbered by
// least member; returns the quotient and the flag -> orbit map.
struct Quotient {
  Premaniplex graph;
  std::vector<int> orbit_of;
};
Quotient quotient(const Premaniplex& p,
                  const std::vector<std::vector<int>>& group);

// Builders.
Premaniplex one_vertex(int rank);                           // 1^n
Premaniplex two_flag(int rank, const std::vector<int>& semi_colors);  // 2_I
Premaniplex polygon(int p);                                 // rank 2, 2p flags

}  // namespace vops
