#pragma once

// Serialization.  Both formats are line-oriented; '#' starts a comment
// anywhere.  Writers emit a fixed byte-exact layout so outputs diff cleanly.
//
//   pmx 1                      vop 1
//   rank <n>                   source-rank <n>
//   flags <k>                  rank <m>
//   perm 0: ...                flags <k>
//   ...                        perm 0: ...
//                              ...
//                              volt 0: [..] [..] ...
//                              ...
//
// The optional "base <y0>" line of a .vop records the operator's base flag
// (default 0).

#include <iosfwd>
#include <string>

#include "vops/premaniplex.hpp"
#include "vops/voltage.hpp"

namespace vops {

// Parse + shape checks only; axiom violations are left to validate().
Premaniplex read_pmx_text(const std::string& text);
Premaniplex read_pmx_file(const std::string& path);
// Throws DomainError (with the first violation) when the content fails
// validate().
Premaniplex read_pmx_file_validated(const std::string& path);

std::string write_pmx_text(const Premaniplex& p);
void write_pmx_file(const std::string& path, const Premaniplex& p);

VoltageOperator read_vop_text(const std::string& text);
VoltageOperator read_vop_file(const std::string& path);
// Enforces validate_operator (and the premaniplex axioms of Y).
VoltageOperator read_vop_file_validated(const std::string& path);

std::string write_vop_text(const VoltageOperator& op);
void write_vop_file(const std::string& path, const VoltageOperator& op);

// Graphviz export: flags ascending, edges color-major; semi-edges appear as
// dashed self-loops.
std::string write_dot_text(const Premaniplex& p);

}  // namespace vops
