#ifndef SHUFFLE_MONOMIAL_HPP
#define SHUFFLE_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace shuffle {

// Number of z-variable slots a monomial can carry (z1..z6). Enough for
// five-variable elements plus one auxiliary slot for a scaling symbol.
inline constexpr int kMaxZ = 6;
inline constexpr int kSlots = 2 + kMaxZ;

// Laurent monomial s^a q2^b z1^c1 ... z6^c6 with 16-bit signed exponents,
// packed as eight lanes into two machine words. Lane 0 (s) is the most
// significant, so comparing the sign-flipped words gives the lexicographic
// order on (s, q2, z1, ..., z6).
class Monomial {
 public:
  static constexpr int kS = 0;
  static constexpr int kQ2 = 1;
  static constexpr int z_slot(int i) { return 2 + i; }

  constexpr Monomial() noexcept : w_{0, 0} {}

  static Monomial params(int s_exp, int q2_exp) noexcept {
    Monomial m;
    m.set(kS, s_exp);
    m.set(kQ2, q2_exp);
    return m;
  }
  static Monomial z(int i, int e = 1) noexcept {
    Monomial m;
    m.set(z_slot(i), e);
    return m;
  }

  int get(int slot) const noexcept {
    return static_cast<int16_t>(static_cast<uint16_t>(w_[slot >> 2] >> shift(slot)));
  }
  void set(int slot, int v) noexcept {
    uint64_t mask = uint64_t{0xFFFF} << shift(slot);
    w_[slot >> 2] = (w_[slot >> 2] & ~mask) | (uint64_t{static_cast<uint16_t>(static_cast<int16_t>(v))} << shift(slot));
  }

  int s() const noexcept { return get(kS); }
  int q2() const noexcept { return get(kQ2); }
  int zexp(int i) const noexcept { return get(z_slot(i)); }

  int z_degree() const noexcept {
    int d = 0;
    for (int i = 0; i < kMaxZ; ++i) d += zexp(i);
    return d;
  }
  // Sum of z exponents over [first, first + count).
  int z_degree(int first, int count) const noexcept {
    int d = 0;
    for (int i = first; i < first + count; ++i) d += zexp(i);
    return d;
  }
  bool z_free() const noexcept { return (w_[0] & 0xFFFFFFFFu) == 0 && w_[1] == 0; }
  Monomial param_part() const noexcept {
    Monomial m;
    m.w_[0] = w_[0] & ~uint64_t{0xFFFFFFFF};
    return m;
  }
  Monomial z_part() const noexcept {
    Monomial m;
    m.w_[0] = w_[0] & uint64_t{0xFFFFFFFF};
    m.w_[1] = w_[1];
    return m;
  }

  friend Monomial operator+(Monomial a, Monomial b) noexcept {
    Monomial r;
    r.w_[0] = swar_add(a.w_[0], b.w_[0]);
    r.w_[1] = swar_add(a.w_[1], b.w_[1]);
    return r;
  }
  friend Monomial operator-(Monomial a, Monomial b) noexcept {
    Monomial r;
    r.w_[0] = swar_sub(a.w_[0], b.w_[0]);
    r.w_[1] = swar_sub(a.w_[1], b.w_[1]);
    return r;
  }
  Monomial& operator+=(Monomial b) noexcept { return *this = *this + b; }
  Monomial scaled(int factor) const noexcept {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) r.set(i, get(i) * factor);
    return r;
  }
  Monomial negated() const noexcept { return Monomial{} - *this; }

  friend bool operator==(Monomial a, Monomial b) noexcept { return a.w_[0] == b.w_[0] && a.w_[1] == b.w_[1]; }
  friend bool operator!=(Monomial a, Monomial b) noexcept { return !(a == b); }
  friend bool operator<(Monomial a, Monomial b) noexcept {
    uint64_t a0 = a.w_[0] ^ kHigh, b0 = b.w_[0] ^ kHigh;
    if (a0 != b0) return a0 < b0;
    return (a.w_[1] ^ kHigh) < (b.w_[1] ^ kHigh);
  }
  friend bool operator>(Monomial a, Monomial b) noexcept { return b < a; }

  std::size_t hash() const noexcept {
    uint64_t h = w_[0] * 0x9E3779B97F4A7C15ull;
    h ^= (w_[1] + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2)) * 0xBF58476D1CE4E5B9ull;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

 private:
  static constexpr uint64_t kHigh = 0x8000800080008000ull;
  static constexpr int shift(int slot) noexcept { return (3 - (slot & 3)) * 16; }
  static constexpr uint64_t swar_add(uint64_t a, uint64_t b) noexcept {
    return ((a & ~kHigh) + (b & ~kHigh)) ^ ((a ^ b) & kHigh);
  }
  static constexpr uint64_t swar_sub(uint64_t a, uint64_t b) noexcept {
    return ((a | kHigh) - (b & ~kHigh)) ^ ((a ^ ~b) & kHigh);
  }

  std::array<uint64_t, 2> w_;
};

struct MonomialHash {
  std::size_t operator()(Monomial m) const noexcept { return m.hash(); }
};

}  // namespace shuffle

#endif  // SHUFFLE_MONOMIAL_HPP
