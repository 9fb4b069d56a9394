#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lowen {

enum class DomainKind { Rational, PrimeField };

// Tag shared by every element of a FiniteSet. The prime-field factory is the
// one place a modulus is primality-checked; sets and scalars built from an
// already-validated GroundDomain skip the test.
struct GroundDomain {
  DomainKind kind = DomainKind::Rational;
  std::uint64_t modulus = 0;  // prime p for PrimeField, 0 for Rational

  static GroundDomain rational() { return GroundDomain{DomainKind::Rational, 0}; }
  static GroundDomain prime_field(std::uint64_t p);  // throws on composite p

  bool operator==(const GroundDomain&) const = default;
  std::string str() const;
};

std::size_t hash_mpz(const mpz_class& z);

// Exact rational scalar. Always fully reduced, denominator > 0, zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, integers embed
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "-12" or "3/6" (reduced on the way in). Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat::raw(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat::raw(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat::raw(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b);  // throws on b == 0
  Rat operator-() const { return raw(-v_); }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::size_t hash() const;

 private:
  // GMP arithmetic on canonical operands yields canonical results; skip the
  // redundant canonicalize on that path.
  static Rat raw(mpq_class q) {
    Rat r;
    r.v_ = std::move(q);
    return r;
  }
  mpq_class v_;
};

// Residue modulo a fixed prime, stored as the least nonnegative representative.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  std::string str() const { return std::to_string(v_); }

  friend Fp operator+(const Fp& a, const Fp& b) { return Fp::raw(add_mod(a.v_, b.v_, a.p_), a.p_); }
  friend Fp operator-(const Fp& a, const Fp& b) { return Fp::raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    return Fp::raw(static_cast<std::uint64_t>((static_cast<__uint128_t>(a.v_) * b.v_) % a.p_), a.p_);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp pow(std::uint64_t e) const;

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) { return a.v_ <=> b.v_; }

  std::size_t hash() const {
    std::uint64_t z = v_ + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp f;
    f.v_ = v;
    f.p_ = p;
    return f;
  }
  static std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;  // p < 2^63 so no overflow
    return s >= p ? s - p : s;
  }
  std::uint64_t v_, p_;
};

template <class S>
struct ScalarHash {
  std::size_t operator()(const S& s) const { return s.hash(); }
};

template <class S>
GroundDomain domain_of(const S&);
template <>
inline GroundDomain domain_of<Rat>(const Rat&) { return GroundDomain::rational(); }
template <>
inline GroundDomain domain_of<Fp>(const Fp& x) { return GroundDomain{DomainKind::PrimeField, x.modulus()}; }

}  // namespace lowen
