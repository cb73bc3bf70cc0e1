// Scalar types and coefficient-ring descriptors for the exact homology engine.
//
// Three scalar types are supported: arbitrary-precision integers (GMP mpz),
// arbitrary-precision rationals (GMP mpq) and prime fields with a runtime
// modulus.  All matrix code is templated on the scalar; the runtime Ring
// descriptor selects the instantiation at the API boundary.

#ifndef REFHOM_NUMERIC_HPP
#define REFHOM_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <Eigen/Core>

namespace refhom {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when two prime-field elements with different moduli meet.
struct MixedModulus : std::logic_error {
  MixedModulus() : std::logic_error("prime-field elements with different moduli") {}
};

/// Element of F_p with the modulus carried at runtime.
///
/// A default-constructed or int-constructed element is an "unbound" literal
/// (p == 0); the first arithmetic contact with a bound element adopts its
/// modulus.  This lets Eigen's Scalar(0)/Scalar(1) internals work unchanged.
struct Fp {
  long long v = 0;
  std::uint32_t p = 0;  // 0 = unbound literal

  Fp() = default;
  Fp(long long x) : v(x) {}
  Fp(long long x, std::uint32_t mod) : v(x), p(mod) { normalize(); }

  void normalize() {
    if (p) {
      v %= static_cast<long long>(p);
      if (v < 0) v += static_cast<long long>(p);
    }
  }

  static std::uint32_t join(std::uint32_t a, std::uint32_t b) {
    if (a && b && a != b) throw MixedModulus();
    return a ? a : b;
  }

  bool is_zero() const { return p ? v == 0 : v == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.v + b.v, join(a.p, b.p)); }
  friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.v - b.v, join(a.p, b.p)); }
  friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.v * b.v, join(a.p, b.p)); }
  Fp operator-() const { return Fp(-v, p); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  /// Multiplicative inverse.  Unbound +-1 literals invert to themselves so
  /// untouched unit vectors can serve as elimination pivots.
  Fp inverse() const {
    if (!p && (v == 1 || v == -1)) return *this;
    if (!p || v == 0) throw std::domain_error("Fp::inverse of zero or unbound element");
    long long t = 0, nt = 1, r = p, nr = v;
    while (nr != 0) {
      long long q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return Fp(t, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint32_t m = join(a.p, b.p);
    return Fp(a.v, m).v == Fp(b.v, m).v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  // abs and ordering exist only so Eigen's sparse pruning compiles; the order
  // is the canonical-representative order and has no field meaning.
  friend Fp abs(const Fp& a) { return Fp(a.v, a.p); }
  friend bool operator<(const Fp& a, const Fp& b) {
    std::uint32_t m = join(a.p, b.p);
    return Fp(a.v, m).v < Fp(b.v, m).v;
  }
  friend bool operator<=(const Fp& a, const Fp& b) {
    std::uint32_t m = join(a.p, b.p);
    return Fp(a.v, m).v <= Fp(b.v, m).v;
  }
  friend bool operator>(const Fp& a, const Fp& b) { return b < a; }
  friend bool operator>=(const Fp& a, const Fp& b) { return b <= a; }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Descriptor of the coefficient ring.
struct Ring {
  enum class Kind { Integers, Rationals, PrimeField };

  Kind kind = Kind::Integers;
  std::uint32_t characteristic = 0;  // 0 for Z and Q, the prime p for F_p

  static Ring integers() { return {Kind::Integers, 0}; }
  static Ring rationals() { return {Kind::Rationals, 0}; }
  static Ring prime_field(std::uint32_t p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("prime_field: characteristic must be prime >= 2");
    return {Kind::PrimeField, p};
  }

  bool is_field() const { return kind != Kind::Integers; }
  bool two_invertible() const {
    return kind == Kind::Rationals || (kind == Kind::PrimeField && characteristic != 2);
  }
  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind == b.kind && a.characteristic == b.characteristic;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

  std::string name() const {
    switch (kind) {
      case Kind::Integers: return "Z";
      case Kind::Rationals: return "Q";
      case Kind::PrimeField: return "F" + std::to_string(characteristic);
    }
    return "?";
  }
};

// Per-scalar compile-time facts plus the runtime conversion from exact
// rational coefficients (num/den) into the scalar type.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Int> {
  static constexpr bool is_field = false;
  static bool is_zero(const Int& x) { return sgn(x) == 0; }
  static Int from_fraction(const Ring&, const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(r) != 0) throw std::invalid_argument("non-integral coefficient over Z");
    return q;
  }
};

template <>
struct ScalarTraits<Rat> {
  static constexpr bool is_field = true;
  static bool is_zero(const Rat& x) { return sgn(x) == 0; }
  static Rat from_fraction(const Ring&, const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
};

template <>
struct ScalarTraits<Fp> {
  static constexpr bool is_field = true;
  static bool is_zero(const Fp& x) { return x.is_zero(); }
  static Fp from_fraction(const Ring& ring, const Int& num, const Int& den) {
    std::uint32_t p = ring.characteristic;
    Int n = num % p, d = den % p;
    Fp dv(d.get_si(), p);
    if (dv.is_zero()) throw std::invalid_argument("denominator not invertible mod p");
    return Fp(n.get_si(), p) * dv.inverse();
  }
};

template <class S>
bool scalar_is_zero(const S& x) {
  return ScalarTraits<S>::is_zero(x);
}

/// Integer n as a scalar of the given ring.
template <class S>
S scalar_of(const Ring& ring, long n) {
  return ScalarTraits<S>::from_fraction(ring, Int(n), Int(1));
}

/// Calls f with a std::type_identity tag for the scalar type matching the ring.
template <class F>
decltype(auto) dispatch_ring(const Ring& ring, F&& f) {
  switch (ring.kind) {
    case Ring::Kind::Integers: return f(std::type_identity<Int>{});
    case Ring::Kind::Rationals: return f(std::type_identity<Rat>{});
    case Ring::Kind::PrimeField: return f(std::type_identity<Fp>{});
  }
  throw std::logic_error("unreachable ring kind");
}

}  // namespace refhom

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
    ReadCost = 6, AddCost = 100, MulCost = 100
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
    ReadCost = 6, AddCost = 150, MulCost = 150
  };
};

template <>
struct NumTraits<refhom::Fp> : GenericNumTraits<refhom::Fp> {
  typedef refhom::Fp Real;
  typedef refhom::Fp NonInteger;
  typedef refhom::Fp Nested;
  typedef refhom::Fp Literal;
  static inline Real epsilon() { return refhom::Fp(0); }
  static inline Real dummy_precision() { return refhom::Fp(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0, IsSigned = 0, IsComplex = 0, RequireInitialization = 1,
    ReadCost = 1, AddCost = 2, MulCost = 2
  };
};

}  // namespace Eigen

#endif  // REFHOM_NUMERIC_HPP
