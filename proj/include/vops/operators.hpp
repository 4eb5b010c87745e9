#pragma once

// The built-in voltage operators: classical map/polytope operations encoded
// as premaniplexes with voltages.

#include <string>
#include <vector>

#include "vops/voltage.hpp"

namespace vops {

// (3,3)-operators on rank-3 premaniplexes.
VoltageOperator medial();
VoltageOperator truncation();
VoltageOperator petrie();
// compose(medial(), truncation()): the 6-flag omnitruncation.
VoltageOperator omnitruncation();

// (n,n)-operators on one flag.
VoltageOperator dual(int n);
VoltageOperator d_operator(int n, const std::vector<CoxWord>& images);
VoltageOperator double_cover(int n);

// (n,n+1)-operators.
VoltageOperator prism(int n);
VoltageOperator pyramid(int n);

// Registry for the CLI and file exports.  Parameterized entries use the
// names "prism:<n>", "pyramid:<n>", "dual:<n>", "double_cover:<n>".
std::vector<std::string> builtin_names();
VoltageOperator builtin(const std::string& name);

}  // namespace vops
