#include "lowen/scalar.hpp"

#include <stdexcept>

#include "lowen/primality.hpp"

namespace lowen {

GroundDomain GroundDomain::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
  return GroundDomain{DomainKind::PrimeField, p};
}

std::string GroundDomain::str() const {
  if (kind == DomainKind::Rational) return "rational";
  return "fp p=" + std::to_string(modulus);
}

std::size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr m = z.get_mpz_t();
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(m->_mp_size);
  const int n = m->_mp_size < 0 ? -m->_mp_size : m->_mp_size;
  for (int i = 0; i < n; ++i) {
    h ^= static_cast<std::uint64_t>(m->_mp_d[i]);
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat operator/(const Rat& a, const Rat& b) {
  if (sgn(b.v_) == 0) throw std::invalid_argument("division by zero");
  return Rat::raw(a.v_ / b.v_);
}

std::size_t Rat::hash() const {
  std::size_t h = hash_mpz(v_.get_num());
  h ^= hash_mpz(v_.get_den()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  const auto slash = text.find('/');
  auto check_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (slash == std::string_view::npos) {
    if (!check_int(text)) throw std::invalid_argument("bad integer literal: " + std::string(text));
    return Rat(mpz_class(std::string(text)));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!check_int(num) || !check_int(den)) {
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  }
  return Rat(mpz_class(std::string(num)), mpz_class(std::string(den)));
}

Fp Fp::pow(std::uint64_t e) const { return raw(powmod_u64(v_, e, p_), p_); }

}  // namespace lowen
