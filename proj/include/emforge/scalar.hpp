#pragma once

// Exact scalars: rationals, and the prime field Z/P.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "emforge/errors.hpp"
#include "emforge/matrix.hpp"

namespace emforge {

using Rational = boost::multiprecision::cpp_rational;

template <std::int64_t P>
class ModP {
  static_assert(P >= 2, "modulus must be a prime >= 2");

 public:
  ModP() = default;
  ModP(std::int64_t x) : v_(mod_floor(x, P)) {}  // NOLINT: integers embed implicitly

  std::int64_t value() const noexcept { return v_; }

  friend ModP operator+(ModP a, ModP b) { return ModP((a.v_ + b.v_) % P); }
  friend ModP operator-(ModP a, ModP b) { return ModP(a.v_ - b.v_); }
  friend ModP operator*(ModP a, ModP b) { return ModP(static_cast<std::int64_t>(static_cast<__int128>(a.v_) * b.v_ % P)); }
  ModP operator-() const { return ModP(-v_); }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }
  friend bool operator!=(ModP a, ModP b) { return a.v_ != b.v_; }

  ModP inverse() const {
    if (v_ == 0) throw InvalidInput("division by zero in Z/" + std::to_string(P));
    std::int64_t e = P - 2;
    ModP base = *this, r = 1;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }

 private:
  std::int64_t v_ = 0;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static std::string name() { return "rational"; }
  static Rational fraction(std::int64_t num, std::int64_t den) { return Rational(num, den); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static std::string str(const Rational& x) { return x.str(); }

  /// "3", "-2/5".
  static Rational parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Integer(s));
      const Integer den(s.substr(slash + 1));
      if (den == 0) throw ParseError(s, "zero denominator");
      return Rational(Integer(s.substr(0, slash)), den);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(s, "not a rational number");
    }
  }
};

template <std::int64_t P>
struct ScalarTraits<ModP<P>> {
  static std::string name() { return "Z/" + std::to_string(P); }
  static ModP<P> fraction(std::int64_t num, std::int64_t den) { return ModP<P>(num) / ModP<P>(den); }
  static bool is_zero(const ModP<P>& x) { return x.value() == 0; }
  static std::string str(const ModP<P>& x) { return std::to_string(x.value()); }
  static ModP<P> parse(const std::string& s) {
    const Rational r = ScalarTraits<Rational>::parse(s);
    const Integer n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
    const auto num = static_cast<std::int64_t>(mod_floor(n, Integer(P)));
    const auto den = static_cast<std::int64_t>(mod_floor(d, Integer(P)));
    if (den == 0) throw ParseError(s, "denominator vanishes in Z/" + std::to_string(P));
    return fraction(num, den);
  }
};

/// Prime used by the prime-field scalar option.
inline constexpr std::int64_t kFieldPrime = 1000003;
using FieldScalar = ModP<kFieldPrime>;

}  // namespace emforge
