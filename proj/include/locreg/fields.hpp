#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace locreg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

enum class FieldKind { Rationals, PrimeField };

// Runtime description of a coefficient field: QQ or GF(p) with p prime.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::int64_t p = 0;

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec prime_field(std::int64_t p) {
        if (!is_prime(p)) throw InvalidField("GF(" + std::to_string(p) + "): modulus is not prime");
        return {FieldKind::PrimeField, p};
    }
    bool operator==(const FieldSpec&) const = default;
    std::string name() const {
        return kind == FieldKind::Rationals ? std::string("QQ") : "GF(" + std::to_string(p) + ")";
    }
};

// Exact rational arithmetic over arbitrary-precision integers.
struct RationalField {
    using Elem = BigRat;

    FieldSpec spec() const { return FieldSpec::rationals(); }
    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(std::int64_t v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return Elem(1) / a; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.str(); }
};

// GF(p) with elements normalized to [0, p). p is bounded so that products
// fit in a signed 64-bit intermediate.
struct PrimeFieldT {
    using Elem = std::int64_t;
    std::int64_t p;

    explicit PrimeFieldT(std::int64_t p_) : p(p_) {
        if (!is_prime(p_)) throw InvalidField("GF(" + std::to_string(p_) + "): modulus is not prime");
        if (p_ >= (std::int64_t(1) << 31)) throw InvalidField("prime modulus too large");
    }

    FieldSpec spec() const { return FieldSpec::prime_field(p); }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(std::int64_t v) const {
        Elem r = v % p;
        return r < 0 ? r + p : r;
    }
    Elem add(Elem a, Elem b) const {
        Elem r = a + b;
        return r >= p ? r - p : r;
    }
    Elem sub(Elem a, Elem b) const {
        Elem r = a - b;
        return r < 0 ? r + p : r;
    }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        // extended Euclid
        if (a == 0) throw Error("division by zero in GF(" + std::to_string(p) + ")");
        std::int64_t t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return t < 0 ? t + p : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string str(Elem a) const { return std::to_string(a); }
};

template <class F>
concept CoeffField = requires(const F f, typename F::Elem a) {
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.neg(a) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.eq(a, a) } -> std::convertible_to<bool>;
    { f.from_int(std::int64_t{}) } -> std::convertible_to<typename F::Elem>;
    { f.spec() } -> std::convertible_to<FieldSpec>;
    { f.str(a) } -> std::convertible_to<std::string>;
};

static_assert(CoeffField<RationalField>);
static_assert(CoeffField<PrimeFieldT>);

}  // namespace locreg
