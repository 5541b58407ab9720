#include "report.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

namespace posetval::cli {

Json Number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string FormatNumber(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) return "0";  // also folds -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void RenderJson(std::ostream& out, const Json& report) {
  out << report.dump(2) << "\n";
}

namespace {

bool IsScalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string Scalar(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  if (j.is_number_float()) return FormatNumber(j.get<double>());
  if (j.is_number()) return j.dump();
  return j.dump();
}

std::string Cell(const Json& j) {
  if (IsScalar(j)) return Scalar(j);
  if (j.is_array() && std::all_of(j.begin(), j.end(), IsScalar)) {
    std::string s;
    for (const Json& e : j) s += (s.empty() ? "" : ",") + Scalar(e);
    return s.empty() ? "-" : s;
  }
  return j.dump();
}

void Table(std::ostream& out, const Json& rows, const std::string& pad) {
  std::vector<std::string> keys;
  for (const Json& row : rows) {
    for (const auto& [k, v] : row.items()) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
  }
  std::vector<std::vector<std::string>> cells{keys};
  for (const Json& row : rows) {
    std::vector<std::string> line;
    for (const std::string& k : keys) line.push_back(row.contains(k) ? Cell(row[k]) : "");
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(keys.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : cells) {
    std::string text = pad;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += line[c];
      if (c + 1 < line.size()) text += std::string(width[c] - line[c].size() + 2, ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  }
}

void Render(std::ostream& out, const Json& object, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : object.items()) {
    if (IsScalar(value)) {
      out << pad << key << ": " << Scalar(value) << "\n";
    } else if (value.is_object()) {
      out << pad << key << ":\n";
      Render(out, value, indent + 2);
    } else if (value.empty()) {
      out << pad << key << ": (none)\n";
    } else if (std::all_of(value.begin(), value.end(), IsScalar)) {
      out << pad << key << ": " << Cell(value) << "\n";
    } else if (std::all_of(value.begin(), value.end(),
                           [](const Json& e) { return e.is_object(); })) {
      out << pad << key << ":\n";
      Table(out, value, pad + "  ");
    } else {
      out << pad << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

void RenderHuman(std::ostream& out, const Json& report) { Render(out, report, 0); }

}  // namespace posetval::cli
