#include "shuffle/generators.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "shuffle/errors.hpp"
#include "shuffle/symmetrize.hpp"

namespace shuffle {
namespace {

const Monomial kQ = pm(2, 1);
const Monomial kQ1 = pm(2, 0);
const Monomial kQ2m = pm(0, 1);

// prod_{i<j} (z_i - q z_j)(z_j - q1 z_i)(z_j - q2 z_i), with the (z_i - q z_{i+1})
// factors left out when skip_adjacent is set. Kept as two halves whose
// product is the kernel; the full expansion is large from k = 6 on.
struct Kernel {
  LaurentPoly left;
  LaurentPoly right;
  LaurentPoly full() const { return left * right; }
};

Kernel omega_kernel(int k, bool skip_adjacent) {
  struct Factor {
    int i;
    Monomial c;
    int j;
  };
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (!(skip_adjacent && j == i + 1)) fs.push_back({i, kQ, j});
      fs.push_back({j, kQ1, i});
      fs.push_back({j, kQ2m, i});
    }
  }
  // From k = 6 on the expanded kernel no longer fits comfortably; a short
  // right half keeps the fused product's pair count near the expanded size.
  const std::size_t right = k >= 6 ? 3 : 0;
  const std::size_t split = fs.size() - std::min(fs.size() / 2, right);
  Kernel out{LaurentPoly::constant(1, k), LaurentPoly::constant(1, k)};
  for (std::size_t x = 0; x < fs.size(); ++x) {
    LaurentPoly& side = x < split ? out.left : out.right;
    side = side.times_linear(fs[x].i, fs[x].c, fs[x].j);
  }
  return out;
}

Monomial z_monomial(std::span<const int> e) {
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) m.set(Monomial::z_slot(static_cast<int>(i)), e[i]);
  return m;
}

LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_constant()) return a;
  if (a.is_constant()) return b;
  return exact_div(a * b, param_gcd(a, b));
}

// sum c_i z^{m_i} over a common scalar denominator: returns the numerator
// polynomial in k variables and stores the denominator.
LaurentPoly combine(const std::vector<std::pair<Monomial, ParamScalar>>& parts, int k, LaurentPoly* den) {
  LaurentPoly l = LaurentPoly::constant(1);
  for (const auto& [m, c] : parts)
    if (!c.is_zero()) l = lcm(l, c.den());
  std::vector<Term> terms;
  for (const auto& [m, c] : parts) {
    if (c.is_zero()) continue;
    LaurentPoly scaled = c.num() * exact_div(l, c.den());
    for (const auto& t : scaled.terms()) terms.push_back({t.mono + m, t.coeff});
  }
  *den = l;
  return LaurentPoly::from_terms(k, std::move(terms));
}

ShuffleElement symmetrize(const std::vector<std::pair<Monomial, ParamScalar>>& parts, int k, const Kernel& kernel) {
  LaurentPoly den;
  LaurentPoly lin = combine(parts, k, &den);
  LaurentPoly dom = dominant_product(lin * kernel.left, kernel.right, 0, k);
  return ShuffleElement::from_parts(k, schur_expand(dom, 0, k), den);
}

// prod_{i<k-1} z_i
Monomial chain_monomial(int k) {
  Monomial m;
  for (int i = 0; i + 1 < k; ++i) m.set(Monomial::z_slot(i), 1);
  return m;
}

ShuffleElement x_combination(const std::vector<std::pair<Monomial, ParamScalar>>& parts, int k) {
  Kernel kernel = omega_kernel(k, true);
  kernel.left = kernel.left.times_monomial(chain_monomial(k));
  return symmetrize(parts, k, kernel);
}

ParamScalar p_prefactor(int k, int n) {
  ParamScalar q1m1 = q1_pow(1) - 1, one_m_q2 = ParamScalar(1) - q2_pow(1);
  return q1m1.pow(k) * one_m_q2.pow(k) / ((q1_pow(n) - 1) * (ParamScalar(1) - q2_pow(n)));
}

template <class V, class Key = std::pair<int, int>>
class Memo {
 public:
  bool find(const Key& key, V* out) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    *out = it->second;
    return true;
  }
  void put(const Key& key, const V& v) {
    std::lock_guard<std::mutex> lock(mu_);
    map_[key] = v;
  }
  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    map_.clear();
  }

 private:
  std::mutex mu_;
  std::map<Key, V> map_;
};

Memo<ShuffleElement>& p_memo() {
  static Memo<ShuffleElement> m;
  return m;
}

Memo<ShuffleElement, std::string>& x_memo() {
  static Memo<ShuffleElement, std::string> m;
  return m;
}

Memo<RecursiveP>& rec_memo() {
  static Memo<RecursiveP> m;
  return m;
}

void check_k(int k) {
  if (k < 1 || k > kMaxZ) throw Error("generator: k must lie in 1.." + std::to_string(kMaxZ));
}

}  // namespace

ParamScalar alpha(int n) {
  if (n < 1) throw Error("alpha: n must be positive");
  return (q1_pow(n) - 1) * (q2_pow(n) - 1) * (q_pow(-n) - 1) / ParamScalar(n);
}

// ---- words ----

WordExpression WordExpression::word(Word w, const ParamScalar& c) {
  WordExpression e;
  e.add(w, c);
  return e;
}

void WordExpression::add(const Word& w, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool WordExpression::homogeneous(int* k, int* d) const {
  if (terms_.empty()) return false;
  int k0 = -1, d0 = 0;
  for (const auto& [w, c] : terms_) {
    int dw = 0;
    for (int x : w) dw += x;
    if (k0 < 0) {
      k0 = static_cast<int>(w.size());
      d0 = dw;
    } else if (k0 != static_cast<int>(w.size()) || d0 != dw) {
      return false;
    }
  }
  if (k) *k = k0;
  if (d) *d = d0;
  return true;
}

WordExpression WordExpression::operator-() const {
  WordExpression r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

WordExpression operator+(const WordExpression& a, const WordExpression& b) {
  WordExpression r = a;
  for (const auto& [w, c] : b.terms_) r.add(w, c);
  return r;
}

WordExpression operator-(const WordExpression& a, const WordExpression& b) { return a + (-b); }

WordExpression operator*(const WordExpression& a, const WordExpression& b) {
  WordExpression r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      WordExpression::Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(w, ca * cb);
    }
  }
  return r;
}

WordExpression operator*(const ParamScalar& c, const WordExpression& a) {
  WordExpression r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : a.terms_) r.add(w, c * x);
  return r;
}

std::string WordExpression::str() const {
  std::ostringstream os;
  for (const auto& [w, c] : terms_) {
    os << c.str() << " [";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << "]\n";
  }
  return os.str();
}

WordExpression bracket(const WordExpression& a, const WordExpression& b) { return a * b - b * a; }

ShuffleElement word_to_element(const WordExpression& w) {
  int k, d;
  if (!w.homogeneous(&k, &d)) throw Error("word_to_element: expression is zero or inhomogeneous");
  if (k == 0) return ShuffleElement::from_parts(0, w.terms().begin()->second.num(), w.terms().begin()->second.den());
  check_k(k);
  std::vector<std::pair<Monomial, ParamScalar>> parts;
  for (const auto& [word, c] : w.terms()) parts.emplace_back(z_monomial(word), c);
  return symmetrize(parts, k, omega_kernel(k, false));
}

// ---- X elements ----

ShuffleElement build_X(std::span<const int> m) {
  const int k = static_cast<int>(m.size());
  check_k(k);
  return x_combination({{z_monomial(m), ParamScalar(1)}}, k);
}

EpsilonVector::EpsilonVector(int a_, int b_, int n_, std::string bits_) : a(a_), b(b_), n(n_), bits(std::move(bits_)) {
  if (a < 1 || n < 1) throw Error("EpsilonVector: a and n must be positive");
  if (gcd_abs(a, b) != 1) throw Error("EpsilonVector: gcd(a, b) must be 1");
  if (static_cast<int>(bits.size()) != n - 1) throw Error("EpsilonVector: bits must have length n - 1");
  for (char c : bits)
    if (c != '0' && c != '1') throw Error("EpsilonVector: bits must be 0/1");
}

int EpsilonVector::eps(int j) const {
  if (j == 0) return 1;
  if (j == n) return 0;
  if (j < 0 || j > n) throw Error("EpsilonVector: index out of range");
  return bits[j - 1] - '0';
}

int EpsilonVector::ones() const {
  int r = 0;
  for (char c : bits) r += c == '1';
  return r;
}

int EpsilonVector::S(int i) const {
  int v = floor_div(i * d(), k());
  if (i % a == 0 && i / a >= 1 && i / a <= n - 1) v -= eps(i / a);
  return v;
}

std::vector<int> EpsilonVector::exponents() const {
  std::vector<int> m(k());
  for (int j = 1; j <= k(); ++j) m[j - 1] = S(j) - S(j - 1);
  return m;
}

std::string EpsilonVector::key() const {
  return std::to_string(a) + ":" + std::to_string(b) + ":" + std::to_string(n) + ":" + bits;
}

std::string hook_bits(int r, int s) { return std::string(r, '0') + std::string(s, '1'); }

ShuffleElement build_X_eps(const EpsilonVector& e) {
  ShuffleElement x;
  if (x_memo().find(e.key(), &x)) return x;
  x = build_X(e.exponents());
  x_memo().put(e.key(), x);
  return x;
}

ShuffleElement build_X_eps_sum(const std::vector<std::pair<EpsilonVector, ParamScalar>>& parts) {
  if (parts.empty()) throw Error("build_X_eps_sum: empty sum");
  const int k = parts.front().first.k();
  std::vector<std::pair<Monomial, ParamScalar>> mono;
  for (const auto& [e, c] : parts) {
    if (e.k() != k || e.d() != parts.front().first.d()) throw Error("build_X_eps_sum: mixed bidegrees");
    mono.emplace_back(z_monomial(e.exponents()), c);
  }
  check_k(k);
  return x_combination(mono, k);
}

// ---- P ----

ShuffleElement build_P(int k, int d) {
  check_k(k);
  ShuffleElement cached;
  if (p_memo().find({k, d}, &cached)) return cached;
  const int n = gcd_abs(k, d), a = k / n, b = d / n;
  std::vector<std::pair<EpsilonVector, ParamScalar>> parts;
  for (int s = 0; s < n; ++s) parts.emplace_back(EpsilonVector(a, b, n, hook_bits(n - 1 - s, s)), q_pow(s));
  ShuffleElement p = p_prefactor(k, n) * build_X_eps_sum(parts);
  p_memo().put({k, d}, p);
  return p;
}

ShuffleElement build_P_literal(int k, int d) {
  check_k(k);
  const int n = gcd_abs(k, d), a = k / n;
  // prod z_i^{floor(id/k) - floor((i-1)d/k)} * sum_x q^x prod (z_{a j + 1} / z_{a j}),
  // j running over n-1 .. n-x (1-based indices).
  Monomial base;
  for (int i = 1; i <= k; ++i) base.set(Monomial::z_slot(i - 1), floor_div(i * d, k) - floor_div((i - 1) * d, k));
  std::vector<Term> sum;
  for (int x = 0; x < n; ++x) {
    Monomial m = base + pm(2 * x, x);
    for (int j = n - 1; j >= n - x; --j) {
      m.set(Monomial::z_slot(a * j), m.zexp(a * j) + 1);
      m.set(Monomial::z_slot(a * j - 1), m.zexp(a * j - 1) - 1);
    }
    sum.push_back({m, Rational(1)});
  }
  LaurentPoly numer = LaurentPoly::from_terms(k, std::move(sum));
  // 1 / prod (1 - q z_{i+1}/z_i) = prod z_i / prod (z_i - q z_{i+1})
  LaurentPoly chain = LaurentPoly::constant(1, k);
  for (int i = 0; i + 1 < k; ++i) chain = chain.times_linear(i, kQ, i + 1);
  LaurentPoly g = exact_div(omega_kernel(k, false).full(), chain);
  g = (g * numer).times_monomial(chain_monomial(k));
  ShuffleElement x = ShuffleElement::from_parts(k, alternant_quotient_serial(g, 0, k));
  return p_prefactor(k, n) * x;
}

namespace {

// exp-series coefficient F_j = (1/j) sum_{m=1}^j m alpha_m u_m F_{j-m}, F_0 = 1,
// in words and in elements side by side.
struct Series {
  std::vector<WordExpression> words;
  std::vector<ShuffleElement> elems;
};

Series exp_series(const std::vector<RecursiveP>& u, int upto) {
  Series f;
  f.words.resize(upto + 1);
  f.elems.resize(upto + 1);
  for (int j = 1; j <= upto; ++j) {
    WordExpression w;
    ShuffleElement e;
    bool first = true;
    for (int m = 1; m <= j; ++m) {
      ParamScalar c = ParamScalar(m) * alpha(m) / ParamScalar(j);
      WordExpression tw = j == m ? u[m].word : u[m].word * f.words[j - m];
      ShuffleElement te = j == m ? u[m].element : shuffle_mul(u[m].element, f.elems[j - m]);
      w = w + c * tw;
      e = first ? c * te : e + c * te;
      first = false;
    }
    f.words[j] = w;
    f.elems[j] = e;
  }
  return f;
}

}  // namespace

RecursiveP build_P_recursive(int k, int d, int rank) {
  check_k(k);
  RecursiveP out;
  if (rank == 0 && rec_memo().find({k, d}, &out)) return out;
  if (k == 1) {
    if (rank != 0) throw Error("build_P_recursive: no alternative triangle at k = 1");
    out.word = WordExpression::word({d});
    out.element = ShuffleElement::from_parts(1, LaurentPoly::z(0, 1, d));
    rec_memo().put({k, d}, out);
    return out;
  }
  auto tris = ranked_empty_triangles(k, d);
  if (rank < 0 || rank >= static_cast<int>(tris.size()))
    throw Error("build_P_recursive: no empty triangle of rank " + std::to_string(rank) + " at (" +
                std::to_string(k) + "," + std::to_string(d) + ")");
  const LatticeTriangle t = tris[rank];
  RecursiveP p1 = build_P_recursive(t.k1, t.d1);
  RecursiveP p2 = build_P_recursive(t.k2, t.d2);
  // theta_{k,d} / alpha_1 = [P_{k1,d1}, P_{k2,d2}]
  WordExpression theta_w = bracket(p1.word, p2.word);
  ShuffleElement theta_e = commutator(p1.element, p2.element);
  const int n = gcd_abs(k, d);
  if (n == 1) {
    out.word = theta_w;
    out.element = theta_e;
  } else {
    const int a = k / n, b = d / n;
    std::vector<RecursiveP> u(n);
    for (int m = 1; m < n; ++m) u[m] = build_P_recursive(m * a, m * b);
    Series f = exp_series(u, n - 1);
    WordExpression corr_w;
    ShuffleElement corr_e = ShuffleElement::zero(k, d);
    for (int m = 1; m < n; ++m) {
      ParamScalar c = ParamScalar(m) * alpha(m) / ParamScalar(n);
      corr_w = corr_w + c * (u[m].word * f.words[n - m]);
      corr_e = corr_e + c * shuffle_mul(u[m].element, f.elems[n - m]);
    }
    ParamScalar inv = alpha(n).inverse();
    ParamScalar a1 = alpha(1);
    out.word = inv * (a1 * theta_w - corr_w);
    out.element = inv * (a1 * theta_e - corr_e);
  }
  if (rank == 0) rec_memo().put({k, d}, out);
  return out;
}

// ---- theta / Q ----

namespace {

void partitions(int n, int max_part, std::vector<int>* cur, std::vector<std::vector<int>>* out) {
  if (n == 0) {
    out->push_back(*cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur->push_back(p);
    partitions(n - p, p, cur, out);
    cur->pop_back();
  }
}

}  // namespace

ThetaQ build_theta_Q(int a, int b, int n_max) {
  if (a < 1 || gcd_abs(a, b) != 1) throw Error("build_theta_Q: need a >= 1 and gcd(a, b) = 1");
  if (n_max < 1) throw Error("build_theta_Q: n_max must be positive");
  std::vector<RecursiveP> u(n_max + 1);
  for (int m = 1; m <= n_max; ++m) u[m].element = build_P(m * a, m * b);
  ThetaQ out;

  // theta through the logarithmic-derivative recurrence
  std::vector<ShuffleElement> f(n_max + 1);
  for (int j = 1; j <= n_max; ++j) {
    ShuffleElement e = ShuffleElement::zero(j * a, j * b);
    for (int m = 1; m <= j; ++m) {
      ParamScalar c = ParamScalar(m) * alpha(m) / ParamScalar(j);
      e = e + c * (j == m ? u[m].element : shuffle_mul(u[m].element, f[j - m]));
    }
    f[j] = e;
    out.theta.push_back(e);
  }

  // Q by summing over partitions: prod_i alpha_{l_i} P_{l_i} / prod_r mult_r!
  for (int j = 1; j <= n_max; ++j) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(j, j, &cur, &parts);
    ShuffleElement total = ShuffleElement::zero(j * a, j * b);
    for (const auto& lam : parts) {
      ParamScalar c = 1;
      ShuffleElement prod;
      bool first = true;
      std::map<int, int> mult;
      for (int p : lam) {
        c *= alpha(p);
        ++mult[p];
        prod = first ? u[p].element : shuffle_mul(prod, u[p].element);
        first = false;
      }
      for (const auto& [p, r] : mult)
        for (int i = 2; i <= r; ++i) c /= ParamScalar(i);
      total = total + c * prod;
    }
    out.Q.push_back(total);
  }
  return out;
}

void clear_generator_memo() {
  p_memo().clear();
  x_memo().clear();
  rec_memo().clear();
}

}  // namespace shuffle
