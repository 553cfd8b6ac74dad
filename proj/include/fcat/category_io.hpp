#pragma once

#include <iosfwd>
#include <string>

#include "fcat/category.hpp"
#include "fcat/fusion_ring.hpp"

namespace fcat {

// Line-oriented text format, '#' comments:
//   category <name>
//   labels <n>
//   label <idx> <name> dual <dualidx>        (idx 0 = vacuum)
//   fuse <a> <b> <c>                          (one line per triple with N = 1)
//   f <u> <a> <b> <c> <q> <p> <re> <im>       (absent entries are zero)
//   r <c> <a> <b> <re> <im>                   (optional braiding)
FusionCategory load_category(const std::string& path);
FusionCategory load_category(std::istream& in, const std::string& origin);
void save_category(const FusionCategory& cat, const std::string& path);
void save_category(const FusionCategory& cat, std::ostream& out);

// Same format, but `fuse` lines may repeat to declare integer multiplicities.
// Used for principal-graph work on rings that are not multiplicity-free.
FusionRing load_fusion_ring(const std::string& path);
FusionRing load_fusion_ring(std::istream& in, const std::string& origin);

}  // namespace fcat
