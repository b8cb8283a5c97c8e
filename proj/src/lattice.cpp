#include "shuffle/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace shuffle {

int gcd_abs(int a, int b) { return std::gcd(std::abs(a), std::abs(b)); }

std::string LatticeTriangle::str() const {
  return "(" + std::to_string(k1) + "," + std::to_string(d1) + ")+(" + std::to_string(k2) + "," +
         std::to_string(d2) + ")";
}

const char* to_string(TriangleClass c) {
  switch (c) {
    case TriangleClass::kEmpty: return "empty";
    case TriangleClass::kQuasiEmpty: return "quasi-empty";
    case TriangleClass::kNeither: return "neither";
  }
  return "?";
}

namespace {

// Twice the area; positive exactly when Z lies on the left of XY turned
// towards larger slope, i.e. d1/k1 > d2/k2.
long cross(const LatticeTriangle& t) { return long(t.k2) * t.d1 - long(t.k1) * t.d2; }

}  // namespace

int interior_points(const LatticeTriangle& t) {
  long boundary = gcd_abs(t.k2, t.d2) + gcd_abs(t.k1, t.d1) + gcd_abs(t.k(), t.d());
  return static_cast<int>((cross(t) - boundary + 2) / 2);
}

TriangleClass classify_triangle(const LatticeTriangle& t) {
  if (t.k1 <= 0 || t.k2 <= 0 || cross(t) <= 0) return TriangleClass::kNeither;
  if (interior_points(t) != 0) return TriangleClass::kNeither;
  bool xy = gcd_abs(t.k2, t.d2) == 1;
  bool yz = gcd_abs(t.k1, t.d1) == 1;
  if (xy && yz) return TriangleClass::kEmpty;
  if (xy || yz) return TriangleClass::kQuasiEmpty;
  return TriangleClass::kNeither;
}

std::vector<LatticeTriangle> ranked_empty_triangles(int k, int d) {
  std::vector<LatticeTriangle> out;
  for (int k2 = 1; k2 < k; ++k2) {
    // An empty triangle has twice-area gcd(k, d) <= k, so Y sits at most one
    // unit below the chord.
    int top = floor_div(k2 * d, k);
    for (int d2 = top - 2; d2 <= top; ++d2) {
      LatticeTriangle t{k - k2, d - d2, k2, d2};
      if (classify_triangle(t) == TriangleClass::kEmpty) out.push_back(t);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const LatticeTriangle& a, const LatticeTriangle& b) {
    if (a.k2 != b.k2) return a.k2 < b.k2;
    if (std::abs(a.d2) != std::abs(b.d2)) return std::abs(a.d2) < std::abs(b.d2);
    return a.d2 < b.d2;
  });
  return out;
}

bool slope_less(std::pair<int, int> a, std::pair<int, int> b) {
  long lhs = long(a.second) * b.first, rhs = long(b.second) * a.first;
  if (lhs != rhs) return lhs < rhs;
  return a.first < b.first;
}

std::string Collection::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(parts[i].first) + "," + std::to_string(parts[i].second) + ")";
  }
  return s + "}";
}

}  // namespace shuffle
