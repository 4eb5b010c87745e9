#pragma once

// HLT-style Todd-Coxeter coset enumeration for presentations whose
// generators are all involutions (the squares are folded into the table:
// setting c*g = d always sets d*g = c).  Used to answer finite-index
// questions about subgroups of the universal string group C^n and to build
// flag graphs of abstract polytopes from Schlafli symbols.

#include <cstddef>
#include <optional>
#include <vector>

#include "vops/coxword.hpp"
#include "vops/premaniplex.hpp"

namespace vops {

struct Presentation {
  int generator_count = 0;
  // Relator words as raw letter sequences (beyond the implicit squares).
  std::vector<std::vector<int>> relators;
  // When set, inject (i j i j) for every pair with |i-j| >= 2, turning the
  // free product of involutions into the universal string group.
  bool string_commutations = false;
};

struct CosetTable {
  enum class Status { Complete, Capped };
  Status status = Status::Capped;
  // Alive cosets compacted in first-definition order; coset 0 is the
  // subgroup.  Only meaningful when status == Complete.
  std::vector<std::vector<int>> rows;
  // Cosets alive when enumeration stopped (equals rows.size() on
  // completion).
  std::size_t cosets = 0;
};

inline constexpr std::size_t kDefaultCosetCap = 1000000;

CosetTable todd_coxeter(const Presentation& pres,
                        const std::vector<std::vector<int>>& subgroup,
                        std::size_t cap = kDefaultCosetCap);

// Flag graph of the string Coxeter group [p_1, ..., p_{n-1}] (optionally
// with extra relators, e.g. a Petrie relator): enumerate the trivial
// subgroup; flags are group elements and i-adjacency is right multiplication
// by r_i.  Throws CappedError when the cap is hit.
Premaniplex coxeter_flag_graph(const std::vector<int>& schlafli,
                               const std::vector<std::vector<int>>& extra = {},
                               std::size_t cap = kDefaultCosetCap);

// Coset graph of <gens> <= C^n on the cosets of the subgroup; the base flag
// (coset 0) has monodromy stabilizer exactly <gens>.  Inconclusive when
// capped.
struct SchreierRealization {
  CosetTable::Status status = CosetTable::Status::Capped;
  std::optional<Premaniplex> graph;
  std::size_t cosets = 0;
  bool ok() const { return status == CosetTable::Status::Complete; }
};
SchreierRealization realize_schreier(int rank,
                                     const std::vector<CoxWord>& gens,
                                     std::size_t cap = kDefaultCosetCap);

}  // namespace vops
