#ifndef SHUFFLE_LATTICE_HPP
#define SHUFFLE_LATTICE_HPP

#include <string>
#include <vector>

namespace shuffle {

// Floor of a / b for b > 0.
inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int gcd_abs(int a, int b);

// Triangle with vertices X = (0,0), Y = (k2,d2), Z = (k1+k2, d1+d2).
struct LatticeTriangle {
  int k1 = 0, d1 = 0, k2 = 0, d2 = 0;
  int k() const { return k1 + k2; }
  int d() const { return d1 + d2; }
  std::string str() const;
};

enum class TriangleClass { kEmpty, kQuasiEmpty, kNeither };
const char* to_string(TriangleClass c);

// Pick's theorem on the triangle. Triangles with k1 or k2 <= 0, or with
// d1/k1 <= d2/k2, are classified kNeither.
TriangleClass classify_triangle(const LatticeTriangle& t);
// Lattice points strictly inside the triangle (Pick), for valid triangles.
int interior_points(const LatticeTriangle& t);

// All empty triangles with apex sum (k, d), ranked by k2, then |d2|, then d2.
std::vector<LatticeTriangle> ranked_empty_triangles(int k, int d);

// Unordered collection of bidegrees, sorted by slope, then by k.
struct Collection {
  std::vector<std::pair<int, int>> parts;
  std::string str() const;
};
// Slope order used for ordered products: increasing d/k, and increasing k
// inside one slope.
bool slope_less(std::pair<int, int> a, std::pair<int, int> b);

}  // namespace shuffle

#endif  // SHUFFLE_LATTICE_HPP
