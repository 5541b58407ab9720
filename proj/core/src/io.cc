#include "posetval/io.h"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <unordered_set>

#include "posetval/error.h"

namespace posetval {

namespace {

// Splits a line into whitespace-separated tokens, dropping a `#` comment.
std::vector<std::string> Tokens(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

double ParseNumber(const std::string& token, int line) {
  double value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError(line, "expected a finite number, got '" + token + "'");
  }
  return value;
}

long ParseInteger(const std::string& token, int line) {
  long value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

std::string Quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Reads a quoted DOT identifier starting at pos; advances pos past it.
std::string Unquote(const std::string& s, std::size_t& pos, int line) {
  if (pos >= s.size() || s[pos] != '"') throw ParseError(line, "expected '\"'");
  std::string out;
  for (++pos; pos < s.size(); ++pos) {
    if (s[pos] == '\\' && pos + 1 < s.size()) {
      out += s[++pos];
    } else if (s[pos] == '"') {
      ++pos;
      return out;
    } else {
      out += s[pos];
    }
  }
  throw ParseError(line, "unterminated string");
}

void SkipSpace(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

PosetBuild ReadPosetText(std::istream& in) {
  std::vector<NamedPair> pairs;
  std::vector<std::string> declared;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::vector<std::string> t = Tokens(line);
    if (t.empty()) continue;
    if (t.size() == 2 && t[0] == "element") {
      declared.push_back(t[1]);
    } else if (t.size() == 3 && t[1] == "<") {
      pairs.emplace_back(t[0], t[2]);
    } else {
      throw ParseError(line_no, "expected 'a < b' or 'element x'");
    }
  }
  return BuildPoset(pairs, declared);
}

PosetBuild ParsePosetText(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ReadPosetText(in);
}

void WritePosetText(std::ostream& out, const Poset& p) {
  for (const std::string& name : p.names()) out << "element " << name << "\n";
  for (const Cover& c : p.covers()) {
    out << p.name(c.lower) << " < " << p.name(c.upper) << "\n";
  }
}

std::vector<double> ReadElementValues(std::istream& in, const Poset& p) {
  std::vector<double> values(p.size(), 0.0);
  std::vector<bool> seen(p.size(), false);
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::vector<std::string> t = Tokens(line);
    if (t.empty()) continue;
    if (t.size() != 2) throw ParseError(line_no, "expected 'element value'");
    std::optional<Index> i = p.Find(t[0]);
    if (!i) throw ParseError(line_no, "unknown element '" + t[0] + "'");
    if (seen[*i]) throw ParseError(line_no, "duplicate element '" + t[0] + "'");
    seen[*i] = true;
    values[*i] = ParseNumber(t[1], line_no);
  }
  for (Index i = 0; i < p.size(); ++i) {
    if (!seen[i]) {
      throw Error(ErrorCode::kNotTotal, "no value for element '" + p.name(i) + "'");
    }
  }
  return values;
}

FiniteGroup ReadGroupTable(std::istream& in) {
  int line_no = 0;
  long n = -1;
  std::vector<std::vector<int>> table;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::vector<std::string> t = Tokens(line);
    if (t.empty()) continue;
    if (n < 0) {
      if (t.size() != 2 || t[0] != "order") throw ParseError(line_no, "expected 'order n'");
      n = ParseInteger(t[1], line_no);
      if (n < 1 || n > 4096) throw ParseError(line_no, "order out of range");
      continue;
    }
    if (static_cast<long>(table.size()) == n) throw ParseError(line_no, "too many rows");
    if (static_cast<long>(t.size()) != n) {
      throw ParseError(line_no, "expected " + std::to_string(n) + " entries");
    }
    std::vector<int> row;
    for (const std::string& tok : t) {
      long v = ParseInteger(tok, line_no);
      if (v < 0 || v >= n) throw ParseError(line_no, "entry out of range: " + tok);
      row.push_back(static_cast<int>(v));
    }
    table.push_back(std::move(row));
  }
  if (n < 0) throw ParseError(line_no + 1, "missing 'order n' line");
  if (static_cast<long>(table.size()) != n) {
    throw ParseError(line_no + 1, "expected " + std::to_string(n) + " rows, got " +
                                      std::to_string(table.size()));
  }
  return FiniteGroup(std::move(table));
}

void WriteDot(std::ostream& out, const Poset& p) {
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (const std::string& name : p.names()) out << "  " << Quote(name) << ";\n";
  for (const Cover& c : p.covers()) {
    out << "  " << Quote(p.name(c.lower)) << " -> " << Quote(p.name(c.upper)) << ";\n";
  }
  out << "}\n";
}

PosetBuild ReadDot(std::istream& in) {
  std::vector<NamedPair> pairs;
  std::vector<std::string> declared;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::size_t pos = 0;
    SkipSpace(line, pos);
    if (pos == line.size() || line[pos] != '"') continue;  // header, attributes, braces
    std::string from = Unquote(line, pos, line_no);
    SkipSpace(line, pos);
    if (line.compare(pos, 2, "->") == 0) {
      pos += 2;
      SkipSpace(line, pos);
      pairs.emplace_back(from, Unquote(line, pos, line_no));
    } else {
      declared.push_back(from);
    }
  }
  return BuildPoset(pairs, declared);
}

void WriteDistanceCsv(std::ostream& out, const Poset& p, const DistanceMatrix& d) {
  std::ostringstream buf;
  buf << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const std::string& name : p.names()) buf << "," << name;
  buf << "\n";
  for (Index i = 0; i < p.size(); ++i) {
    buf << p.name(i);
    for (Index j = 0; j < p.size(); ++j) {
      const double v = d.at(i, j);
      buf << ",";
      if (std::isinf(v)) {
        buf << (v > 0 ? "inf" : "-inf");
      } else {
        buf << v;
      }
    }
    buf << "\n";
  }
  out << buf.str();
}

}  // namespace posetval
