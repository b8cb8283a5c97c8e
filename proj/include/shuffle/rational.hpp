#ifndef SHUFFLE_RATIONAL_HPP
#define SHUFFLE_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace shuffle {

// Exact rational number. Values whose numerator and denominator fit in 64
// bits are stored inline; anything larger spills to a heap-allocated mpq_t.
// The representation is always canonical (lowest terms, positive
// denominator, inline whenever possible), so equality is structural.
class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(int64_t n) noexcept : num_(n), den_(1) {}  // NOLINT: implicit by design of arithmetic
  Rational(int64_t n, int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_) {
    o.den_ = 1;
    o.num_ = 0;
  }
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept;
  ~Rational() { release(); }

  bool is_zero() const noexcept { return den_ != 0 && num_ == 0; }
  bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  // Numerator and denominator as GMP integers.
  mpz_class numerator() const;
  mpz_class denominator() const;

  std::string str() const;
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  // a += b * c without a temporary in the common inline case.
  void add_product(const Rational& b, const Rational& c);

 private:
  bool is_big() const noexcept { return den_ == 0; }
  mpq_class& big() const noexcept { return *big_; }
  void release() noexcept;
  void assign_big(mpq_class&& q);
  void assign_small_or_big(__int128 n, __int128 d);

  union {
    int64_t num_;
    mpq_class* big_;
  };
  int64_t den_;  // 0 marks the heap representation
};

// x^e for any integer e; throws on 0^-n
Rational rational_pow(const Rational& x, int e);

}  // namespace shuffle

#endif  // SHUFFLE_RATIONAL_HPP
