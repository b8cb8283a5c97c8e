#include "shuffle/pointwise.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "shuffle/errors.hpp"

namespace shuffle {
namespace {

Rational checked_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw AccidentalPole("pointwise: evaluation at a pole");
  return a / b;
}

}  // namespace

bool generic(const EvalPoint& p) {
  const Rational one(1);
  for (const Rational& c : {p.q1(), p.q2, p.q()})
    if (c == one || c == -one) return false;
  for (std::size_t i = 0; i < p.z.size(); ++i)
    for (std::size_t j = 0; j < p.z.size(); ++j) {
      if (i == j) continue;
      Rational r = p.z[i] / p.z[j];
      if (r == one || r == p.q1() || r == p.q2 || r == p.q()) return false;
    }
  return true;
}

EvalPoint random_point(std::mt19937& rng, int k) {
  std::uniform_int_distribution<int> num(-60, 60), den(1, 13);
  for (;;) {
    std::set<Rational> seen{Rational(0), Rational(1), Rational(-1)};
    auto draw = [&] {
      for (;;) {
        Rational r(num(rng), den(rng));
        if (seen.insert(r).second) return r;
      }
    };
    EvalPoint p;
    p.s = draw();
    p.q2 = draw();
    for (int i = 0; i < k; ++i) p.z.push_back(draw());
    if (generic(p)) return p;
  }
}

Rational eval_omega(const EvalPoint& p, int i, int j) {
  const Rational& x = p.z[i];
  const Rational& y = p.z[j];
  return checked_div((x - y) * (x - p.q() * y), (x - p.q1() * y) * (x - p.q2 * y));
}

Rational eval_scalar(const ParamScalar& c, const EvalPoint& p) {
  auto value = [&](const LaurentPoly& f) {
    Rational v = 0;
    for (const auto& t : f.terms()) v += t.coeff * rational_pow(p.s, t.mono.s()) * rational_pow(p.q2, t.mono.q2());
    return v;
  };
  return checked_div(value(c.num()), value(c.den()));
}

Rational eval_element(const ShuffleElement& e, const EvalPoint& p) {
  const int k = e.k();
  if (static_cast<int>(p.z.size()) < k) throw Error("eval_element: point has too few variables");
  Rational num = 0;
  for (const auto& t : e.num().terms()) {
    Rational v = t.coeff * rational_pow(p.s, t.mono.s()) * rational_pow(p.q2, t.mono.q2());
    for (int i = 0; i < k; ++i) v *= rational_pow(p.z[i], t.mono.zexp(i));
    num += v;
  }
  Rational frame = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (i < j) frame *= (p.z[i] - p.z[j]) * (p.z[i] - p.z[j]);
      frame = checked_div(frame, (p.z[i] - p.q1() * p.z[j]) * (p.z[i] - p.q2 * p.z[j]));
    }
  return num * frame / eval_scalar(ParamScalar(e.den()), p);
}

Rational eval_X(std::span<const int> m, const EvalPoint& p, std::span<const int> vars) {
  const int k = static_cast<int>(vars.size());
  if (static_cast<int>(m.size()) != k) throw Error("eval_X: exponent count differs from variable count");
  if (k == 0) return 1;
  const int full = (1 << k) - 1;
  // om[x][y] = omega(z_x / z_y) on local indices
  std::vector<std::vector<Rational>> om(k, std::vector<Rational>(k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (x != y) om[x][y] = eval_omega(p, vars[x], vars[y]);
  std::vector<std::vector<Rational>> f(full + 1, std::vector<Rational>(k));
  for (int x = 0; x < k; ++x) f[1 << x][x] = rational_pow(p.z[vars[x]], m[0]);
  for (int set = 1; set < full; ++set) {
    const int pos = std::popcount(static_cast<unsigned>(set));
    for (int last = 0; last < k; ++last) {
      if (!((set >> last) & 1) || f[set][last].is_zero()) continue;
      for (int x = 0; x < k; ++x) {
        if ((set >> x) & 1) continue;
        Rational step = rational_pow(p.z[vars[x]], m[pos]);
        for (int y = 0; y < k; ++y)
          if ((set >> y) & 1) step *= om[y][x];
        step = checked_div(step, Rational(1) - p.q() * p.z[vars[x]] / p.z[vars[last]]);
        f[set | (1 << x)][x] += f[set][last] * step;
      }
    }
  }
  Rational total = 0;
  for (int last = 0; last < k; ++last) total += f[full][last];
  return total;
}

PointFn x_fn(const EpsilonVector& e) {
  std::vector<int> m = e.exponents();
  return [m](const EvalPoint& p, std::span<const int> vars) { return eval_X(m, p, vars); };
}

PointFn scaled(const ParamScalar& c, PointFn f) {
  return [c, f](const EvalPoint& p, std::span<const int> vars) { return eval_scalar(c, p) * f(p, vars); };
}

PointFn sum(PointFn f, PointFn g) {
  return [f, g](const EvalPoint& p, std::span<const int> vars) { return f(p, vars) + g(p, vars); };
}

PointFn product(PointFn f, int ka, PointFn g) {
  return [f, ka, g](const EvalPoint& p, std::span<const int> vars) {
    const int k = static_cast<int>(vars.size());
    std::vector<int> pick(k, 0);
    std::fill(pick.begin(), pick.begin() + ka, 1);
    Rational total = 0;
    // prev_permutation walks the 0/1 masks with ka ones
    do {
      std::vector<int> a, b;
      for (int i = 0; i < k; ++i) (pick[i] ? a : b).push_back(vars[i]);
      Rational t = f(p, a) * g(p, b);
      for (int i : a)
        for (int j : b) t *= eval_omega(p, i, j);
      total += t;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return total;
  };
}

}  // namespace shuffle
