#include "exalg/field.hpp"

namespace exalg {
namespace fp {

std::int64_t inv(std::int64_t a, std::int64_t p) {
    a = normalize(a, p);
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
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
    // r == gcd(a, p) == 1 since p is prime and a != 0 mod p
    return normalize(t, p);
}

std::int64_t reduce(const Rat& r, std::int64_t p) {
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class pz(static_cast<long>(p));
    mpz_class dm = den % pz;
    if (dm == 0) {
        throw std::domain_error("denominator divisible by field characteristic " +
                                std::to_string(p));
    }
    mpz_class nm = num % pz;
    std::int64_t n = normalize(nm.get_si(), p);
    std::int64_t d = normalize(dm.get_si(), p);
    return mul(n, inv(d, p), p);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace fp

FieldSpec parse_field(const std::string& s) {
    if (s == "q" || s == "Q") return FieldSpec::rationals();
    if (s.rfind("fp:", 0) == 0) {
        std::size_t pos = 0;
        std::int64_t p = std::stoll(s.substr(3), &pos);
        if (pos != s.size() - 3) {
            throw std::invalid_argument("bad field spec: " + s);
        }
        return FieldSpec::prime(p);
    }
    throw std::invalid_argument("bad field spec: " + s + " (want q or fp:P)");
}

}  // namespace exalg
