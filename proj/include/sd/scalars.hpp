#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "sd/common.hpp"

namespace sd {

/// Field contexts: each provides an element type and the arithmetic the
/// generic tensor / elimination code needs. PrimeField carries its modulus at
/// runtime, which is why the operations live on the context rather than the
/// element.

struct RationalField {
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw InputError("division by zero");
        return Elem(1) / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    double to_double(const Elem& a) const { return a.get_d(); }
    std::string to_string(const Elem& a) const {
        // canonical "num/den" with explicit denominator
        return a.get_num().get_str() + "/" + a.get_den().get_str();
    }

    static Elem parse(const std::string& s) {
        mpq_class q;
        try {
            q = mpq_class(s);
        } catch (const std::invalid_argument&) {
            throw InputError("bad rational literal '" + s + "'");
        }
        if (q.get_den() == 0) throw InputError("rational with zero denominator: '" + s + "'");
        q.canonicalize();
        return q;
    }
};

struct PrimeField {
    std::uint32_t p = 0;
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t prime = 0) : p(prime) {}

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
    }
    Elem neg(Elem a) const { return (p - a) % p; }
    Elem inv(Elem a) const {
        if (a == 0) throw InputError("division by zero in F_p");
        // Fermat: a^(p-2)
        std::uint64_t base = a, r = 1, exp = p - 2;
        while (exp) {
            if (exp & 1) r = (r * base) % p;
            base = (base * base) % p;
            exp >>= 1;
        }
        return static_cast<Elem>(r);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    double to_double(Elem a) const { return static_cast<double>(a); }
    std::string to_string(Elem a) const { return std::to_string(a); }

    Elem from_int(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        return static_cast<Elem>(m);
    }
};

struct RealField {
    using Elem = double;
    double zero_tol = 1e-12;

    Elem zero() const { return 0.0; }
    Elem one() const { return 1.0; }
    Elem add(Elem a, Elem b) const { return a + b; }
    Elem sub(Elem a, Elem b) const { return a - b; }
    Elem mul(Elem a, Elem b) const { return a * b; }
    Elem neg(Elem a) const { return -a; }
    Elem inv(Elem a) const { return 1.0 / a; }
    bool is_zero(Elem a) const { return std::abs(a) <= zero_tol; }
    bool eq(Elem a, Elem b) const { return is_zero(a - b); }
    double to_double(Elem a) const { return a; }
    std::string to_string(Elem a) const { return std::to_string(a); }
};

template <class F>
constexpr bool is_exact_field_v = !std::is_same_v<F, RealField>;

}  // namespace sd
