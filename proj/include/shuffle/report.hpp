#ifndef SHUFFLE_REPORT_HPP
#define SHUFFLE_REPORT_HPP

#include <string>
#include <vector>

namespace shuffle {

// One line of a verification report: `<id> PASS|FAIL <detail>`.
struct CheckLine {
  std::string id;
  bool pass = false;
  std::string detail;

  std::string str() const { return id + (pass ? " PASS " : " FAIL ") + detail; }
};

struct Report {
  std::vector<CheckLine> lines;

  void add(CheckLine line) { lines.push_back(std::move(line)); }
  void add(std::string id, bool pass, std::string detail) { lines.push_back({std::move(id), pass, std::move(detail)}); }
  void append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }
  bool ok() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& l : lines) n += !l.pass;
    return n;
  }
  std::string str() const {
    std::string s;
    for (const auto& l : lines) s += l.str() + "\n";
    return s;
  }
};

}  // namespace shuffle

#endif  // SHUFFLE_REPORT_HPP
