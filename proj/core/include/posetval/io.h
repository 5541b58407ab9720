#ifndef POSETVAL_IO_H_
#define POSETVAL_IO_H_

#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "posetval/group.h"
#include "posetval/metric.h"
#include "posetval/poset.h"

namespace posetval {

// Poset text: one `a < b` per line, `element x` declares an element, `#`
// starts a comment. Throws ParseError (with line number) or
// Error(kCycleDetected).
PosetBuild ReadPosetText(std::istream& in);
PosetBuild ParsePosetText(std::string_view text);

// `element` lines for every element in index order, then one line per cover.
void WritePosetText(std::ostream& out, const Poset& p);

// `name value` per line. Every element must appear exactly once; a missing
// element raises Error(kNotTotal), anything else ParseError.
std::vector<double> ReadElementValues(std::istream& in, const Poset& p);

// `order n` followed by n rows of n indices.
FiniteGroup ReadGroupTable(std::istream& in);

// Hasse diagram in DOT, bottom to top.
void WriteDot(std::ostream& out, const Poset& p);

// Reads back the node and edge statements written by WriteDot.
PosetBuild ReadDot(std::istream& in);

// Distance table with element names as header row and first column.
void WriteDistanceCsv(std::ostream& out, const Poset& p, const DistanceMatrix& d);

}  // namespace posetval

#endif  // POSETVAL_IO_H_
