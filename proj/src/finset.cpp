#include "dagrel/finset.hpp"

namespace dagrel {

FinSet FinSet::segment(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  int width = 1;
  for (int t = n; t >= 10; t /= 10) ++width;
  for (int i = 1; i <= n; ++i) {
    std::string s = std::to_string(i);
    labels.push_back(std::string(static_cast<std::size_t>(width) - s.size(), '0') + s);
  }
  return FinSet(std::move(labels));
}

static void append_escaped(std::string& out, const std::string& s) {
  for (char c : s) {
    if (c == '\\' || c == '|' || c == '(' || c == ')') out += '\\';
    out += c;
  }
}

std::string pair_label(const std::string& a, const std::string& b) {
  std::string out = "(";
  append_escaped(out, a);
  out += '|';
  append_escaped(out, b);
  out += ')';
  return out;
}

}  // namespace dagrel
