#include "posetval/catalog.h"

#include <charconv>
#include <memory>
#include <sstream>

#include "posetval/error.h"
#include "posetval/io.h"

namespace posetval {

namespace {

// {lows} < {highs}: every high covers every low.
void AllCovers(std::vector<NamedPair>& out, std::initializer_list<const char*> lows,
               std::initializer_list<const char*> highs) {
  for (const char* lo : lows) {
    for (const char* hi : highs) out.emplace_back(lo, hi);
  }
}

// Parses "prefix(n)"; returns -1 when the name does not have that shape.
int ParameterOf(std::string_view name, std::string_view prefix) {
  if (name.size() < prefix.size() + 3 || name.substr(0, prefix.size()) != prefix ||
      name[prefix.size()] != '(' || name.back() != ')') {
    return -1;
  }
  std::string_view digits = name.substr(prefix.size() + 1,
                                        name.size() - prefix.size() - 2);
  int value = -1;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return -1;
  return value;
}

Poset Chain(int n) {
  std::vector<NamedPair> pairs;
  std::vector<std::string> declared;
  for (int i = 0; i < n; ++i) declared.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(declared[i], declared[i + 1]);
  return MakePoset(pairs, declared);
}

std::string SubsetName(unsigned mask) {
  if (mask == 0) return "0";
  std::string s;
  for (int bit = 0; bit < 26; ++bit) {
    if (mask & (1u << bit)) s.push_back(static_cast<char>('a' + bit));
  }
  return s;
}

Poset Boolean(int n) {
  const unsigned count = 1u << n;
  std::vector<std::string> declared;
  for (unsigned m = 0; m < count; ++m) declared.push_back(SubsetName(m));
  std::vector<NamedPair> pairs;
  for (unsigned m = 0; m < count; ++m) {
    for (int bit = 0; bit < n; ++bit) {
      if (!(m & (1u << bit))) pairs.emplace_back(declared[m], declared[m | (1u << bit)]);
    }
  }
  return MakePoset(pairs, declared);
}

}  // namespace

Poset NamedPoset(std::string_view name) {
  std::vector<NamedPair> pairs;
  if (name == "P1") {
    AllCovers(pairs, {"0"}, {"a", "b", "c"});
    AllCovers(pairs, {"a", "b", "c"}, {"d", "e"});
    AllCovers(pairs, {"d", "e"}, {"1"});
    return MakePoset(pairs);
  }
  if (name == "M2") {
    AllCovers(pairs, {"0"}, {"p", "q"});
    AllCovers(pairs, {"p", "q"}, {"1"});
    return MakePoset(pairs);
  }
  if (name == "JC") {
    AllCovers(pairs, {"z1", "z2"}, {"a"});
    AllCovers(pairs, {"z1", "z3"}, {"b"});
    AllCovers(pairs, {"z2", "z3"}, {"c"});
    AllCovers(pairs, {"a", "b", "c"}, {"1"});
    return MakePoset(pairs, {"z1", "z2", "z3"});
  }
  if (name == "N5") {
    pairs = {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}};
    return MakePoset(pairs);
  }
  if (name == "M3") {
    AllCovers(pairs, {"0"}, {"a", "b", "c"});
    AllCovers(pairs, {"a", "b", "c"}, {"1"});
    return MakePoset(pairs);
  }
  if (int n = ParameterOf(name, "chain"); n >= 1) return Chain(n);
  if (int n = ParameterOf(name, "boolean"); n >= 0 && n <= 8) return Boolean(n);
  throw Error(ErrorCode::kUnknownName, "unknown fixture '" + std::string(name) + "'");
}

PosetPtr NamedPosetPtr(std::string_view name) {
  return std::make_shared<const Poset>(NamedPoset(name));
}

std::vector<std::string> NamedPosetNames() {
  return {"P1", "M2", "JC", "N5", "M3", "chain(n)", "boolean(n)"};
}

std::string NamedPosetText(std::string_view name) {
  std::ostringstream out;
  out << "# fixture " << name << "\n";
  WritePosetText(out, NamedPoset(name));
  return out.str();
}

}  // namespace posetval
