#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exalg {

// Exact rational scalar. All arithmetic in the library is exact; there is no
// floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Coefficient field: either Q or a prime field F_p.
struct FieldSpec {
    enum class Kind { rationals, prime } kind = Kind::rationals;
    std::int64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(std::int64_t p);

    bool is_rationals() const { return kind == Kind::rationals; }
    bool operator==(const FieldSpec&) const = default;
    std::string name() const {
        return is_rationals() ? "q" : "fp:" + std::to_string(p);
    }
};

namespace fp {

inline std::int64_t normalize(std::int64_t x, std::int64_t p) {
    x %= p;
    return x < 0 ? x + p : x;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(
        static_cast<__int128>(a) * b % p);
}

// Modular inverse by extended Euclid; requires gcd(a, p) = 1.
std::int64_t inv(std::int64_t a, std::int64_t p);

// Image of a rational in F_p; throws if p divides the denominator.
std::int64_t reduce(const Rat& r, std::int64_t p);

bool is_prime(std::int64_t n);

}  // namespace fp

inline FieldSpec FieldSpec::prime(std::int64_t p) {
    if (!fp::is_prime(p)) {
        throw std::invalid_argument("field characteristic must be prime: " +
                                    std::to_string(p));
    }
    return FieldSpec{Kind::prime, p};
}

// Parses "q" or "fp:P".
FieldSpec parse_field(const std::string& s);

}  // namespace exalg
