#ifndef POSETVAL_CATALOG_H_
#define POSETVAL_CATALOG_H_

#include <string>
#include <string_view>
#include <vector>

#include "posetval/poset.h"
#include "posetval/valuation.h"

namespace posetval {

// Fixture posets by name:
//   P1          0 < {a,b,c} < {d,e} < 1 (bounded, not a lattice)
//   M2          0 < {p,q} < 1 (Boolean lattice on two atoms)
//   JC          {z1,z2} < a, {z1,z3} < b, {z2,z3} < c, {a,b,c} < 1
//   N5          pentagon 0 < a < c < 1, 0 < b < 1
//   M3          diamond 0 < {a,b,c} < 1
//   chain(n)    0 < 1 < ... < n-1
//   boolean(n)  subsets of n letters under inclusion; "0" is the empty set
// Throws Error(kUnknownName).
Poset NamedPoset(std::string_view name);
PosetPtr NamedPosetPtr(std::string_view name);

// Names accepted by NamedPoset, with parameterized ones in generic form.
std::vector<std::string> NamedPosetNames();

// Textual cover list in the poset file format.
std::string NamedPosetText(std::string_view name);

}  // namespace posetval

#endif  // POSETVAL_CATALOG_H_
