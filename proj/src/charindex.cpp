#include "exalg/charindex.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace exalg {

LaurentPoly LaurentPoly::monomial(LExp e, const Rat& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(LExp e, const Rat& c) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) {
        if (c == 0) terms_.erase(it);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            out.add_term({ea.first + eb.first, ea.second + eb.second},
                         ca * cb);
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mon;
        auto var = [&](const char* name, int k) {
            if (k == 0) return;
            if (!mon.empty()) mon += "*";
            mon += name;
            if (k != 1) mon += "^" + std::to_string(k);
        };
        var("x", e.first);
        var("y", e.second);
        Rat a = c > 0 ? c : Rat(-c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mon.empty()) {
            os << rat_str(a);
        } else if (a == 1) {
            os << mon;
        } else {
            os << rat_str(a) << "*" << mon;
        }
    }
    return os.str();
}

LaurentPoly one_minus(LExp w) {
    if (w == LExp{0, 0})
        throw std::invalid_argument("one_minus: unit monomial");
    LaurentPoly p = LaurentPoly::monomial({0, 0}, rat(1));
    p.add_term(w, rat(-1));
    return p;
}

std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& f, LExp w) {
    if (w == LExp{0, 0})
        throw std::invalid_argument("divide_one_minus: unit monomial");
    // Split the support into cosets of the subgroup generated by w. On each
    // coset the division f = q (1 - w) says q_t = sum of the f coefficients
    // up to step t, and the quotient has finite support exactly when the
    // whole coset sums to zero.
    struct Coset {
        std::map<int, Rat> steps;
    };
    std::map<LExp, Coset> cosets;
    auto split = [&](LExp e) {
        int t;
        if (w.first != 0) {
            int r = e.first % w.first;
            if (r < 0) r += std::abs(w.first);
            t = (e.first - r) / w.first;
        } else {
            int r = e.second % w.second;
            if (r < 0) r += std::abs(w.second);
            t = (e.second - r) / w.second;
        }
        LExp rep{e.first - t * w.first, e.second - t * w.second};
        return std::pair<LExp, int>{rep, t};
    };
    for (const auto& [e, c] : f.terms()) {
        auto [rep, t] = split(e);
        cosets[rep].steps[t] = c;
    }
    LaurentPoly q;
    for (const auto& [rep, coset] : cosets) {
        int t0 = coset.steps.begin()->first;
        int t1 = coset.steps.rbegin()->first;
        Rat run = 0;
        for (int t = t0; t <= t1; ++t) {
            auto it = coset.steps.find(t);
            if (it != coset.steps.end()) run += it->second;
            if (t < t1)
                q.add_term({rep.first + t * w.first, rep.second + t * w.second},
                           run);
        }
        if (run != 0) return std::nullopt;
    }
    return q;
}

LaurentFraction::LaurentFraction(LaurentPoly num, std::vector<LExp> den)
    : numerator(std::move(num)), denominator(std::move(den)) {
    for (const auto& w : denominator)
        if (w == LExp{0, 0})
            throw std::invalid_argument(
                "LaurentFraction: unit monomial in the denominator");
}

LaurentPoly LaurentFraction::reduce() const {
    LaurentPoly out = numerator;
    for (const auto& w : denominator) {
        auto q = divide_one_minus(out, w);
        if (!q)
            throw std::logic_error(
                "LaurentFraction: the sum does not clear its denominators");
        out = *q;
    }
    return out;
}

FixedPointTable weight_table(int n) {
    if (n < 1)
        throw std::invalid_argument(
            "weight_table: only the strata with n >= 1 carry a table");
    FixedPointTable t;
    t.n = n;
    if (n % 2 == 0) {
        int k = n / 2;
        t.points = {{{-1, k}, {0, 1}},
                    {{0, -1}, {-1, -k}},
                    {{1, k}, {0, -1}},
                    {{0, 1}, {1, -(k + 1)}},
                    {{-1, k + 1}, {1, -k}}};
    } else {
        int k = (n + 1) / 2;
        t.points = {{{k, -(k + 1)}, {-(k - 1), k}},
                    {{k - 1, -k}, {1, -1}},
                    {{-1, 1}, {-k, k - 1}},
                    {{k, -(k - 1)}, {-1, 1}},
                    {{1, -1}, {-k, k + 1}}};
    }
    return t;
}

LaurentPoly atiyah_bott_index(const FixedPointTable& t) {
    if (t.points.empty())
        throw std::invalid_argument("atiyah_bott_index: empty fixed point set");
    LaurentPoly num;
    std::vector<LExp> den;
    for (const auto& [w1, w2] : t.points) {
        den.push_back(w1);
        den.push_back(w2);
    }
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        const auto& [w1, w2] = t.points[i];
        LaurentPoly s1 = LaurentPoly::monomial(w1, rat(1));
        s1.add_term(w2, rat(1));
        LaurentPoly s2 = LaurentPoly::monomial(
            {w1.first + w2.first, w1.second + w2.second}, rat(1));
        LaurentPoly term = s1 * s2;
        for (std::size_t j = 0; j < t.points.size(); ++j) {
            if (j == i) continue;
            term = term * one_minus(t.points[j].first) *
                   one_minus(t.points[j].second);
        }
        num += term;
    }
    return LaurentFraction(std::move(num), std::move(den)).reduce();
}

LaurentPoly character_negative_part(const LaurentPoly& index,
                                    std::size_t expected_count) {
    LaurentPoly out;
    for (const auto& [e, c] : index.terms())
        if (c < 0) out.add_term(e, Rat(-c));
    if (out.term_count() != expected_count)
        throw std::logic_error(
            "character_negative_part: expected " +
            std::to_string(expected_count) + " terms, found " +
            std::to_string(out.term_count()));
    return out;
}

WeightBasis euler_form_basis(int n) {
    if (n < 1) throw std::invalid_argument("euler_form_basis: n >= 1");
    auto r = make_ring({{"x", 2}, {"y", 2}});
    Poly x = Poly::generator(r, "x"), y = Poly::generator(r, "y");
    if (n % 2 == 0) return {x, y};
    return {x + y, x};
}

Poly euler_class_from_character(const LaurentPoly& ch,
                                const WeightBasis& basis) {
    Poly prod = Poly::constant(basis.u.ring(), rat(1));
    for (const auto& [e, c] : ch.terms()) {
        if (c <= 0 || !is_integer(c))
            throw std::invalid_argument(
                "euler_class_from_character: character coefficients must be "
                "positive integers");
        Poly form = rat(e.first) * basis.u + rat(e.second) * basis.v;
        if (form.is_zero())
            throw std::invalid_argument(
                "euler_class_from_character: trivial weight in the character");
        for (long m = c.get_num().get_si(); m > 0; --m) prod *= form;
    }
    if (prod.leading_term().second < 0) prod *= rat(-1);
    return prod;
}

LaurentPoly character_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("character_closed_form: n >= 1");
    LaurentPoly out;
    if (n % 2 == 0) {
        int k = n / 2;
        for (int j = -k; j <= k - 1; ++j) out.add_term({1, j}, rat(1));
    } else {
        int k = (n + 1) / 2;
        for (int j = 1 - k; j <= k - 1; ++j) out.add_term({j, 1 - j}, rat(1));
    }
    return out;
}

Poly euler_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("euler_closed_form: n >= 1");
    auto r = make_ring({{"x", 2}, {"y", 2}});
    Poly x = Poly::generator(r, "x"), y = Poly::generator(r, "y");
    int k = n % 2 == 0 ? n / 2 : (n + 1) / 2;
    int low = n % 2 == 0 ? -k : 1 - k;
    Poly prod = Poly::constant(r, rat(1));
    for (int j = low; j <= k - 1; ++j) prod *= x + rat(j) * y;
    return prod;
}

}  // namespace exalg
