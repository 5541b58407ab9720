#ifndef POSETVAL_TOOLS_REPORT_H_
#define POSETVAL_TOOLS_REPORT_H_

#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

namespace posetval::cli {

using Json = nlohmann::ordered_json;

// Finite values become JSON numbers; infinities become "inf" / "-inf".
Json Number(double v);

// Shortest round-trip text for v; integral values print without a fraction.
std::string FormatNumber(double v);

void RenderJson(std::ostream& out, const Json& report);

// Indented key/value listing; arrays of objects print as aligned tables.
void RenderHuman(std::ostream& out, const Json& report);

}  // namespace posetval::cli

#endif  // POSETVAL_TOOLS_REPORT_H_
