#pragma once

#include "fcat/category.hpp"

namespace fcat {

FusionCategory make_vec_zp(int p);
FusionCategory make_fibonacci();
FusionCategory make_ising();
FusionCategory make_yang_lee();
FusionCategory make_haagerup_h3(int p1 = +1, int p2 = +1);

/// Looks up a catalog category by name: vec_z2, vec_z3, ..., fibonacci, ising,
/// yang_lee, haagerup_h3 (signs via arguments).
FusionCategory catalog(const std::string& name, int p1 = +1, int p2 = +1);

}  // namespace fcat
