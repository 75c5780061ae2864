#pragma once

#include <string>
#include <string_view>

#include "cdlab/group.hpp"

namespace cdlab {

// Built-in families. Labels are the canonical spec strings, so a group and
// its catalog entry always agree.
Group cyclic(int n, const GroupLimits& limits = {});
Group dihedral(int n, const GroupLimits& limits = {});     // order 2n
Group dicyclic(int n, const GroupLimits& limits = {});     // order 4n; n=2 is Q8
Group symmetric(int n, const GroupLimits& limits = {});
Group alternating(int n, const GroupLimits& limits = {});
Group elementary_abelian(int p, int k, const GroupLimits& limits = {});
Group heisenberg(int p, const GroupLimits& limits = {});   // order p^3, exponent p for odd p
Group extraspecial_exp_p2(int p, const GroupLimits& limits = {});  // order p^3, exponent p^2

// Spec grammar: `<family>:<param>[:<param>]` or `product(<spec>,<spec>)`,
// e.g. "dihedral:4", "elementary_abelian:2:3",
// "product(symmetric:3,cyclic:2)". Products nest.
Group named(std::string_view spec, const GroupLimits& limits = {});

// Validates the grammar without constructing anything.
void check_catalog_spec(std::string_view spec);

}  // namespace cdlab
