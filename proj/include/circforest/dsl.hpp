// dsl.hpp — textual family descriptors: parsing and canonical formatting.
#pragma once

#include <string>

#include "circforest/families.hpp"

namespace circforest {

// Parses a descriptor like "GP(n,2)", "Y(n;1,1,1)", "SW(5;[1],[2,3])",
// "X(K_3,C(1))" or "FOLIATION{base:edges[(1,2):1];fibers:[[1],[]]}".
// A concrete first argument binds n. Diagnostics carry a byte position and,
// for syntax errors, the set of acceptable tokens.
FamilyDescriptor parse_family(const std::string& text);

// Canonical text; parse_family(format_family(d)) == d. I(n,k,1) prints as
// GP(n,k); scalar shorthand is used whenever every slot is a single jump.
std::string format_family(const FamilyDescriptor& desc);

}  // namespace circforest
