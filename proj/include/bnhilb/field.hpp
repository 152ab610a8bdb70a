#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "bnhilb/errors.hpp"

namespace bnhilb {

// Counter-based generator: mix(seed, counter) gives independent streams, so
// sampling stays deterministic under any evaluation order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t counter) {
    return splitmix64(splitmix64(seed) ^ counter * 0x9e3779b97f4a7c15ULL);
}

inline bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

template <class F>
concept FieldOps = requires(const F& f, const typename F::Elem& a, const typename F::Elem& b) {
    typename F::Elem;
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.neg(a) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.eq(a, b) } -> std::convertible_to<bool>;
    { f.from_int(std::int64_t{}) } -> std::convertible_to<typename F::Elem>;
    { f.sample(std::uint64_t{}) } -> std::convertible_to<typename F::Elem>;
    { f.str(a) } -> std::convertible_to<std::string>;
};

// Z/p with p prime.  Elements are canonical representatives in [0, p).
// p < 2^31 so products fit in 64 bits.
class PrimeField {
  public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (1ULL << 31)) throw domain_error("prime field: modulus must be < 2^31");
        if (!is_prime_u64(p)) throw domain_error("prime field: modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw domain_error("prime field: inverse of zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(t);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem from_int(std::int64_t v) const {
        std::int64_t m = v % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(m);
    }
    Elem sample(std::uint64_t r) const { return r % p_; }
    std::string str(Elem a) const { return std::to_string(a); }

  private:
    std::uint64_t p_;
};

// Exact rationals on top of GMP.  Random samples are the integers [-9, 9],
// which keeps sampled data readable while staying exact.
class RationalField {
  public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw domain_error("rational field: inverse of zero");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }
    Elem sample(std::uint64_t r) const { return Elem(static_cast<long>(r % 19) - 9); }
    std::string str(const Elem& a) const { return a.get_str(); }
};

static_assert(FieldOps<PrimeField>);
static_assert(FieldOps<RationalField>);

}  // namespace bnhilb
