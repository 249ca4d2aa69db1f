#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace comod {

// Exact rational scalar. boost keeps it canonical: numerator and
// denominator coprime, denominator positive.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Errors. Axiom violations are *values* (CheckResult below); these exceptions
// are reserved for malformed input, field-capability refusals and internal
// assertion failures, mapped to distinct CLI exit codes.
// ---------------------------------------------------------------------------

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecError : std::runtime_error {
  int line = 0;
  SpecError(const std::string& msg, int ln = 0)
      : std::runtime_error(ln > 0 ? msg + " (line " + std::to_string(ln) + ")" : msg), line(ln) {}
};

// Raised when an algorithm cannot certify its own answer over the chosen
// field (small positive characteristic); never a silent wrong result.
struct FieldRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InputError(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

// ---------------------------------------------------------------------------
// Prime fields with runtime modulus. Every element carries its modulus so
// values from different fields cannot be mixed silently.
// ---------------------------------------------------------------------------

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t p) : v_(p ? value % p : value), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = joint(a, b);
    return Fp((a.v_ + b.v_) % p, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t p = joint(a, b);
    return Fp((a.v_ + p - b.v_) % p, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = joint(a, b);
    return Fp(static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v_) * b.v_) % p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(v_ ? p_ - v_ : 0, p_); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw InputError("F_p scalars from different fields");
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const {
    require(v_ != 0, "division by zero in F_p");
    // extended Euclid on (v, p)
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(v_);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    internal_check(r == 1, "modulus not prime");
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_);
  }

 private:
  static std::uint64_t joint(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw InputError("F_p scalars from different fields");
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    internal_check(p != 0, "unbound F_p scalar");
    return p;
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

// ---------------------------------------------------------------------------
// Scalar trait functions. Generic code builds constants from an exemplar of
// the right field (for F_p the exemplar carries the modulus).
// ---------------------------------------------------------------------------

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.value() == 0; }

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }

inline Rat one_like(const Rat&) { return Rat(1); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }

inline Rat from_long_like(const Rat&, long long n) { return Rat(n); }
inline Fp from_long_like(const Fp& x, long long n) {
  std::uint64_t p = x.modulus();
  long long r = n % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return Fp(static_cast<std::uint64_t>(r), p);
}

inline std::string scalar_str(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}
inline std::string scalar_str(const Fp& x) { return std::to_string(x.value()); }

// ---------------------------------------------------------------------------
// Runtime field descriptor. The CLI dispatches on this; the core library is
// templated on the scalar type.
// ---------------------------------------------------------------------------

struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;  // set iff PrimeField

  static FieldSpec rationals() { return {Kind::Rationals, 0}; }
  static FieldSpec prime(std::uint64_t p) {
    require(is_prime_u64(p), "modulus " + std::to_string(p) + " is not prime");
    return {Kind::PrimeField, p};
  }
  std::string describe() const {
    return kind == Kind::Rationals ? "rational" : "prime " + std::to_string(p);
  }
};

template <class F>
F field_zero(const FieldSpec& fs);

template <>
inline Rat field_zero<Rat>(const FieldSpec& fs) {
  require(fs.kind == FieldSpec::Kind::Rationals, "field mismatch: expected rationals");
  return Rat(0);
}
template <>
inline Fp field_zero<Fp>(const FieldSpec& fs) {
  require(fs.kind == FieldSpec::Kind::PrimeField, "field mismatch: expected prime field");
  return Fp(0, fs.p);
}

// Parses "a", "-a" or "a/b" with b > 0.  Over F_p the value is reduced mod p
// (for a/b the denominator must be invertible).
template <class F>
F parse_scalar(const std::string& tok, const F& exemplar) {
  auto slash = tok.find('/');
  std::string num = slash == std::string::npos ? tok : tok.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : tok.substr(slash + 1);
  if (num.empty() || den.empty()) throw SpecError("malformed scalar '" + tok + "'");
  BigInt n, d;
  try {
    n = BigInt(num);
    d = BigInt(den);
  } catch (const std::exception&) {
    throw SpecError("malformed scalar '" + tok + "'");
  }
  if (d <= 0) throw SpecError("scalar '" + tok + "' must have positive denominator");
  if constexpr (std::is_same_v<F, Rat>) {
    (void)exemplar;
    return Rat(n, d);
  } else {
    std::uint64_t p = exemplar.modulus();
    auto reduce = [&](const BigInt& x) {
      BigInt r = x % p;
      if (r < 0) r += p;
      return static_cast<std::uint64_t>(r);
    };
    Fp nf(reduce(n), p), df(reduce(d), p);
    if (is_zero(df)) throw SpecError("scalar '" + tok + "': denominator divisible by " + std::to_string(p));
    return nf / df;
  }
}

}  // namespace comod
