#include "shuffle/x_identities.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "shuffle/generators.hpp"
#include "shuffle/pointwise.hpp"

namespace shuffle {
namespace {

// One side of an identity: a sum of scaled X elements or products of two.
struct Piece {
  ParamScalar c;
  EpsilonVector left;
  std::optional<EpsilonVector> right;
};
using Side = std::vector<Piece>;

ShuffleElement symbolic(const Side& side) {
  ShuffleElement total;
  bool first = true;
  for (const auto& pc : side) {
    ShuffleElement x = build_X_eps(pc.left);
    if (pc.right) x = shuffle_mul(x, build_X_eps(*pc.right));
    x = pc.c * x;
    total = first ? x : total + x;
    first = false;
  }
  return total;
}

PointFn pointwise(const Side& side) {
  PointFn total;
  for (const auto& pc : side) {
    PointFn f = x_fn(pc.left);
    if (pc.right) f = product(f, pc.left.k(), x_fn(*pc.right));
    f = scaled(pc.c, f);
    total = total ? sum(total, f) : f;
  }
  return total;
}

int side_k(const Side& side) {
  const auto& pc = side.front();
  return pc.left.k() + (pc.right ? pc.right->k() : 0);
}

CheckLine compare(const std::string& id, const Side& lhs, const Side& rhs, int points, std::uint32_t seed) {
  const int k = side_k(lhs);
  if (k <= kMaxZ) {
    bool ok = symbolic(lhs) == symbolic(rhs);
    return {id, ok, ok ? "symbolic, k=" + std::to_string(k) : "symbolic difference, k=" + std::to_string(k)};
  }
  PointFn f = pointwise(lhs), g = pointwise(rhs);
  std::mt19937 rng(seed);
  std::vector<int> vars(k);
  std::iota(vars.begin(), vars.end(), 0);
  for (int t = 0; t < points; ++t) {
    EvalPoint p = random_point(rng, k);
    if (f(p, vars) != g(p, vars)) return {id, false, "differs at point " + std::to_string(t) + ", k=" + std::to_string(k)};
  }
  return {id, true, "pointwise at " + std::to_string(points) + " points, k=" + std::to_string(k)};
}

std::string bits_of(int mask, int len) {
  std::string s;
  for (int j = len - 1; j >= 0; --j) s += (mask >> j) & 1 ? '1' : '0';
  return s;
}

std::string ray_tag(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

Report id1_suite(int a, int b, int t_max, int points, std::uint32_t seed) {
  Report rep;
  for (int t = 2; t <= t_max; ++t) {
    Side lhs{{1, EpsilonVector(a, b, t, std::string(t - 1, '0')), std::nullopt},
             {-q_pow(t - 1), EpsilonVector(a, b, t, std::string(t - 1, '1')), std::nullopt}};
    Side rhs;
    for (int s = 0; s <= t - 2; ++s) {
      const int r = t - 2 - s;
      rhs.push_back({q_pow(s), EpsilonVector(a, b, r + 1, std::string(r, '0')), EpsilonVector(a, b, s + 1, std::string(s, '1'))});
    }
    rep.add(compare("id1" + ray_tag(a, b) + " t=" + std::to_string(t), lhs, rhs, points, seed + t));
  }
  return rep;
}

Report x_concat_suite(int a, int b, int max_len, int points, std::uint32_t seed) {
  Report rep;
  for (int len = 0; len <= max_len; ++len)
    for (int le = 0; le <= len; ++le) {
      const int lf = len - le;
      for (int x = 0; x < (1 << le); ++x)
        for (int y = 0; y < (1 << lf); ++y) {
          std::string e = bits_of(x, le), f = bits_of(y, lf);
          const int n = le + lf + 2;
          Side lhs{{1, EpsilonVector(a, b, le + 1, e), EpsilonVector(a, b, lf + 1, f)}};
          Side rhs{{1, EpsilonVector(a, b, n, e + "0" + f), std::nullopt}, {-q_pow(1), EpsilonVector(a, b, n, e + "1" + f), std::nullopt}};
          rep.add(compare("xcat" + ray_tag(a, b) + " [" + e + "]*[" + f + "]", lhs, rhs, points, seed + x * 64 + y + len * 4096));
        }
    }
  return rep;
}

}  // namespace shuffle
