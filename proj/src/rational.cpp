#include "shuffle/rational.hpp"

#include <limits>
#include <stdexcept>

namespace shuffle {
namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

uint64_t gcd64(uint64_t a, uint64_t b) {
  while (b != 0) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits_i64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

constexpr int64_t kMin = std::numeric_limits<int64_t>::min();

}  // namespace

Rational::Rational(int64_t n, int64_t d) : num_(0), den_(1) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  assign_small_or_big(n, d);
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) {
  mpq_class c = q;
  c.canonicalize();
  assign_big(std::move(c));
}

Rational::Rational(const Rational& o) : num_(0), den_(1) {
  if (o.is_big()) {
    big_ = new mpq_class(o.big());
    den_ = 0;
  } else {
    num_ = o.num_;
    den_ = o.den_;
  }
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  if (o.is_big()) {
    if (is_big()) {
      big() = o.big();
    } else {
      big_ = new mpq_class(o.big());
      den_ = 0;
    }
  } else {
    release();
    num_ = o.num_;
    den_ = o.den_;
  }
  return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
  if (this == &o) return *this;
  release();
  num_ = o.num_;
  den_ = o.den_;
  o.num_ = 0;
  o.den_ = 1;
  return *this;
}

void Rational::release() noexcept {
  if (is_big()) {
    delete big_;
    num_ = 0;
    den_ = 1;
  }
}

void Rational::assign_big(mpq_class&& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (fits_i64(n) && fits_i64(d) && n.get_si() != kMin) {
    int64_t nn = n.get_si();
    int64_t dd = d.get_si();
    release();
    num_ = nn;
    den_ = dd;
    return;
  }
  if (is_big()) {
    big() = std::move(q);
  } else {
    big_ = new mpq_class(std::move(q));
    den_ = 0;
  }
}

void Rational::assign_small_or_big(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    release();
    num_ = 0;
    den_ = 1;
    return;
  }
  if (d != 1) {
    u128 an = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
    u128 g = gcd128(an, static_cast<u128>(d));
    if (g != 1) {
      n /= static_cast<__int128>(g);
      d /= static_cast<__int128>(g);
    }
  }
  constexpr __int128 lo = static_cast<__int128>(kMin) + 1;
  constexpr __int128 hi = std::numeric_limits<int64_t>::max();
  if (n >= lo && n <= hi && d <= hi) {
    release();
    num_ = static_cast<int64_t>(n);
    den_ = static_cast<int64_t>(d);
    return;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  q.canonicalize();
  assign_big(std::move(q));
}

bool Rational::is_integer() const { return is_big() ? big().get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (is_big()) return sgn(big());
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
  if (is_big()) return big();
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  return is_big() ? mpz_class(big().get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return is_big() ? mpz_class(big().get_den()) : mpz_class(static_cast<long>(den_));
}

std::string Rational::str() const {
  if (is_big()) return big().get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
  if (q.get_den() == 0) throw std::invalid_argument("bad rational: " + std::string(text));
  return Rational(q);
}

Rational Rational::operator-() const {
  if (is_big()) return Rational(mpq_class(-big()));
  if (num_ == kMin) return Rational(mpq_class(-to_mpq()));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!is_big() && !o.is_big()) {
    if (den_ == 1 && o.den_ == 1) {
      int64_t r;
      if (!__builtin_add_overflow(num_, o.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
    }
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    assign_small_or_big(n, d);
    return *this;
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!is_big() && !o.is_big()) {
    if (den_ == 1 && o.den_ == 1) {
      int64_t r;
      if (!__builtin_sub_overflow(num_, o.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
    }
    __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    assign_small_or_big(n, d);
    return *this;
  }
  assign_big(to_mpq() - o.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!is_big() && !o.is_big()) {
    if (den_ == 1 && o.den_ == 1) {
      int64_t r;
      if (!__builtin_mul_overflow(num_, o.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
    }
    // cross-reduce first so the 128-bit product cannot overflow
    uint64_t g1 = gcd64(num_ < 0 ? -static_cast<uint64_t>(num_) : num_, o.den_);
    uint64_t g2 = gcd64(o.num_ < 0 ? -static_cast<uint64_t>(o.num_) : o.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    __int128 n = static_cast<__int128>(num_ / static_cast<int64_t>(g1)) * (o.num_ / static_cast<int64_t>(g2));
    __int128 d = static_cast<__int128>(den_ / static_cast<int64_t>(g2)) * (o.den_ / static_cast<int64_t>(g1));
    assign_small_or_big(n, d);
    return *this;
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!is_big() && !o.is_big() && o.num_ != kMin) {
    Rational inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
    return *this *= inv;
  }
  assign_big(to_mpq() / o.to_mpq());
  return *this;
}

void Rational::add_product(const Rational& b, const Rational& c) {
  if (!is_big() && !b.is_big() && !c.is_big() && den_ == 1 && b.den_ == 1 && c.den_ == 1) {
    int64_t p, r;
    if (!__builtin_mul_overflow(b.num_, c.num_, &p) && !__builtin_add_overflow(num_, p, &r) && r != kMin) {
      num_ = r;
      return;
    }
  }
  *this += b * c;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.is_big() != b.is_big()) return false;  // canonical: big only when it does not fit
  if (a.is_big()) return a.big() == b.big();
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.is_big() && !b.is_big()) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

Rational rational_pow(const Rational& x, int e) {
  Rational base = e >= 0 ? x : Rational(1) / x;
  int n = e >= 0 ? e : -e;
  Rational r = 1;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return r;
}

}  // namespace shuffle
