#include "exalg/series.hpp"

#include <sstream>
#include <stdexcept>

namespace exalg {

namespace {

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, ZInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly out(std::max(a.size(), b.size()), ZInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

using QPoly = std::vector<Rat>;

QPoly to_q(const ZPoly& p) {
    QPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rat(p[i]);
    return out;
}

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// euclidean remainder over Q
QPoly qrem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        qtrim(a);
    }
    return a;
}

// primitive integer polynomial with positive leading coefficient
ZPoly primitive(const QPoly& p) {
    if (p.empty()) return {};
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& c : p) {
        mpz_class d = c.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    ZPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat scaled = p[i] * Rat(lcm_den);
        out[i] = scaled.get_num();
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), out[i].get_mpz_t());
    }
    if (gcd_num != 0) {
        for (auto& c : out) c /= gcd_num;
    }
    if (!out.empty() && out.back() < 0) {
        for (auto& c : out) c = -c;
    }
    return out;
}

ZPoly poly_gcd(ZPoly a, ZPoly b) {
    QPoly x = to_q(a), y = to_q(b);
    qtrim(x);
    qtrim(y);
    while (!y.empty()) {
        QPoly r = qrem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return primitive(x);
}

// exact division, callers guarantee divisibility
ZPoly divexact(const ZPoly& a, const ZPoly& g) {
    if (a.empty()) return {};
    QPoly x = to_q(a);
    QPoly d = to_q(g);
    QPoly q(x.size() - d.size() + 1, Rat(0));
    while (x.size() >= d.size() && !x.empty()) {
        Rat c = x.back() / d.back();
        std::size_t off = x.size() - d.size();
        q[off] = c;
        for (std::size_t i = 0; i < d.size(); ++i) x[off + i] -= c * d[i];
        qtrim(x);
    }
    if (!x.empty()) throw std::logic_error("series: inexact polynomial division");
    ZPoly out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!is_integer(q[i])) {
            throw std::logic_error("series: non-integer quotient");
        }
        out[i] = q[i].get_num();
    }
    trim(out);
    return out;
}

std::string poly_str(const ZPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        ZInt a = abs(p[i]);
        bool neg = p[i] < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace

std::string RationalGF::str() const {
    if (is_zero()) return "0";
    std::string n = poly_str(num);
    if (den.size() == 1 && den[0] == 1) return n;
    return "(" + n + ")/(" + poly_str(den) + ")";
}

RationalGF make_gf(ZPoly num, ZPoly den) {
    trim(num);
    trim(den);
    if (den.empty()) throw std::invalid_argument("series: zero denominator");
    if (num.empty()) return {{}, {ZInt(1)}};
    ZPoly g = poly_gcd(num, den);
    if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
        num = divexact(num, g);
        den = divexact(den, g);
    }
    // joint content
    ZInt c(0);
    for (const auto& x : num) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    for (const auto& x : den) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    if (c > 1) {
        for (auto& x : num) x /= c;
        for (auto& x : den) x /= c;
    }
    if (den[0] == 0) {
        throw std::invalid_argument("series: denominator divisible by t is not expandable");
    }
    if (den[0] < 0) {
        for (auto& x : num) x = -x;
        for (auto& x : den) x = -x;
    }
    if (den[0] != 1) {
        throw std::invalid_argument("series: denominator constant term must be a unit");
    }
    return {std::move(num), std::move(den)};
}

RationalGF gf_add(const RationalGF& a, const RationalGF& b) {
    return make_gf(add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den));
}

RationalGF gf_mul(const RationalGF& a, const RationalGF& b) {
    return make_gf(mul(a.num, b.num), mul(a.den, b.den));
}

RationalGF gf_shift(const RationalGF& a, int k) {
    if (k < 0) throw std::invalid_argument("series: negative shift");
    if (a.is_zero()) return a;
    ZPoly num(static_cast<std::size_t>(k), ZInt(0));
    num.insert(num.end(), a.num.begin(), a.num.end());
    return make_gf(std::move(num), a.den);
}

bool gf_equal(const RationalGF& a, const RationalGF& b) {
    return mul(a.num, b.den) == mul(b.num, a.den);
}

TruncatedSeries expand(const RationalGF& gf, int N) {
    if (N < 0) throw std::invalid_argument("series: negative truncation order");
    TruncatedSeries s;
    s.coeff.assign(static_cast<std::size_t>(N) + 1, ZInt(0));
    if (gf.is_zero()) return s;
    // den[0] = 1 by construction: c_n = num_n - sum_{k>=1} den_k c_{n-k}
    for (int n = 0; n <= N; ++n) {
        ZInt acc = n < static_cast<int>(gf.num.size()) ? gf.num[n] : ZInt(0);
        int kmax = std::min<int>(n, static_cast<int>(gf.den.size()) - 1);
        for (int k = 1; k <= kmax; ++k) {
            acc -= gf.den[static_cast<std::size_t>(k)] * s.coeff[static_cast<std::size_t>(n - k)];
        }
        s.coeff[static_cast<std::size_t>(n)] = acc;
    }
    return s;
}

RationalGF series_free_gca(const GcaSignature& sig) {
    ZPoly num = {ZInt(1)}, den = {ZInt(1)};
    for (const auto& g : sig.gens) {
        ZPoly factor(static_cast<std::size_t>(g.degree) + 1, ZInt(0));
        factor[0] = 1;
        factor[static_cast<std::size_t>(g.degree)] = g.odd() ? 1 : -1;
        if (g.odd()) {
            num = mul(num, factor);
        } else {
            den = mul(den, factor);
        }
    }
    return make_gf(std::move(num), std::move(den));
}

RationalGF series_quotient_principal(const RationalGF& ring_series,
                                     int relation_degree) {
    if (relation_degree < 0) throw std::invalid_argument("series: negative degree");
    ZPoly factor(static_cast<std::size_t>(relation_degree) + 1, ZInt(0));
    factor[0] = 1;
    factor[static_cast<std::size_t>(relation_degree)] -= 1;  // degree 0 gives 0
    return gf_mul(ring_series, make_gf(std::move(factor), {ZInt(1)}));
}

RationalGF series_divided_polynomial(int degree) {
    if (degree <= 0) throw std::invalid_argument("series: degree must be positive");
    ZPoly den(static_cast<std::size_t>(degree) + 1, ZInt(0));
    den[0] = 1;
    den[static_cast<std::size_t>(degree)] = -1;
    return make_gf({ZInt(1)}, std::move(den));
}

RationalGF series_tensor_algebra(const std::vector<int>& degrees) {
    ZPoly den = {ZInt(1)};
    for (int d : degrees) {
        if (d <= 0) throw std::invalid_argument("series: degree must be positive");
        if (den.size() <= static_cast<std::size_t>(d)) {
            den.resize(static_cast<std::size_t>(d) + 1, ZInt(0));
        }
        den[static_cast<std::size_t>(d)] -= 1;
    }
    return make_gf({ZInt(1)}, std::move(den));
}

RationalGF series_tensor_quotient(const std::vector<int>& degrees,
                                  const std::vector<int>& sub_degrees) {
    ZPoly num = {ZInt(1)};
    for (int d : sub_degrees) {
        if (d <= 0) throw std::invalid_argument("series: degree must be positive");
        if (num.size() <= static_cast<std::size_t>(d)) {
            num.resize(static_cast<std::size_t>(d) + 1, ZInt(0));
        }
        num[static_cast<std::size_t>(d)] -= 1;
    }
    RationalGF full = series_tensor_algebra(degrees);
    return gf_mul(make_gf(std::move(num), {ZInt(1)}), full);
}

RationalGF series_loop_odd_sphere(int sphere_dim) {
    if (sphere_dim < 3 || sphere_dim % 2 == 0) {
        throw std::invalid_argument("series: loop space wants an odd sphere dimension >= 3");
    }
    return series_divided_polynomial(sphere_dim - 1);
}

RationalGF series_sphere(int dim) {
    if (dim <= 0) throw std::invalid_argument("series: sphere dimension must be positive");
    ZPoly num(static_cast<std::size_t>(dim) + 1, ZInt(0));
    num[0] = 1;
    num[static_cast<std::size_t>(dim)] = 1;
    return make_gf(std::move(num), {ZInt(1)});
}

DecompositionResult decomposition_check(
    const RationalGF& lhs, const std::vector<std::pair<int, RationalGF>>& summands,
    int N) {
    TruncatedSeries left = expand(lhs, N);
    std::vector<ZInt> right(static_cast<std::size_t>(N) + 1, ZInt(0));
    for (const auto& [shift, gf] : summands) {
        if (shift < 0) throw std::invalid_argument("series: negative shift");
        if (shift > N) continue;
        TruncatedSeries part = expand(gf, N - shift);
        for (int n = 0; n + shift <= N; ++n) {
            right[static_cast<std::size_t>(n + shift)] += part.coeff[static_cast<std::size_t>(n)];
        }
    }
    DecompositionResult res;
    for (int n = 0; n <= N; ++n) {
        if (left.coeff[static_cast<std::size_t>(n)] != right[static_cast<std::size_t>(n)]) {
            res.ok = false;
            res.first_mismatch = n;
            res.lhs_value = left.coeff[static_cast<std::size_t>(n)];
            res.rhs_value = right[static_cast<std::size_t>(n)];
            break;
        }
    }
    return res;
}

}  // namespace exalg
