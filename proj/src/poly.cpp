#include "exalg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace exalg {

int PolyRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

RingPtr make_ring(std::vector<GeneratorDecl> gens) {
    for (const auto& g : gens) {
        if (g.degree <= 0 || g.degree % 2 != 0) {
            throw std::invalid_argument("polynomial generator " + g.name +
                                        " must have positive even degree");
        }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (gens[i].name == gens[j].name) {
                throw std::invalid_argument("duplicate generator " + gens[i].name);
            }
        }
    }
    return std::make_shared<PolyRing>(PolyRing{std::move(gens)});
}

int monomial_degree(const PolyRing& ring, const ExpVec& e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * ring.gens[i].degree;
    return d;
}

bool monomial_divides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

bool monomial_greater(const PolyRing& ring, const ExpVec& a, const ExpVec& b) {
    int da = monomial_degree(ring, a), db = monomial_degree(ring, b);
    if (da != db) return da > db;
    return a > b;  // lex, earlier generators more significant
}

namespace {
void enumerate(const PolyRing& ring, std::size_t i, int remaining, ExpVec& cur,
               std::vector<ExpVec>& out) {
    if (i == ring.gens.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int d = ring.gens[i].degree;
    for (int e = remaining / d; e >= 0; --e) {
        cur[i] = e;
        enumerate(ring, i + 1, remaining - e * d, cur, out);
    }
    cur[i] = 0;
}
}  // namespace

std::vector<ExpVec> monomials_of_degree(const PolyRing& ring, int degree) {
    std::vector<ExpVec> out;
    if (degree < 0) return out;
    ExpVec cur(ring.gens.size(), 0);
    enumerate(ring, 0, degree, cur, out);
    std::sort(out.begin(), out.end(), [&](const ExpVec& a, const ExpVec& b) {
        return monomial_greater(ring, a, b);
    });
    return out;
}

Poly::Poly(RingPtr ring) : ring_(std::move(ring)), terms_(Cmp{ring_.get()}) {
    if (!ring_) throw std::invalid_argument("null ring");
}

Poly Poly::constant(RingPtr ring, const Rat& c) {
    Poly p(std::move(ring));
    p.add_term(ExpVec(p.ring_->size(), 0), c);
    return p;
}

Poly Poly::generator(RingPtr ring, const std::string& name) {
    Poly p(std::move(ring));
    int i = p.ring_->index_of(name);
    if (i < 0) throw std::invalid_argument("unknown generator " + name);
    ExpVec e(p.ring_->size(), 0);
    e[i] = 1;
    p.add_term(e, Rat(1));
    return p;
}

Poly Poly::monomial(RingPtr ring, const ExpVec& e, const Rat& c) {
    Poly p(std::move(ring));
    if (e.size() != p.ring_->size()) {
        throw std::invalid_argument("exponent vector length mismatch");
    }
    for (int x : e) {
        if (x < 0) throw std::invalid_argument("negative exponent");
    }
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::pair<ExpVec, Rat> Poly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    return *terms_.begin();
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = monomial_degree(*ring_, terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
        if (monomial_degree(*ring_, e) != d) return false;
    }
    return true;
}

int Poly::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    if (!is_homogeneous()) throw std::domain_error("degree of inhomogeneous polynomial");
    return monomial_degree(*ring_, terms_.begin()->first);
}

Poly Poly::homogeneous_part(int degree) const {
    Poly out(ring_);
    for (const auto& [e, c] : terms_) {
        if (monomial_degree(*ring_, e) == degree) out.add_term(e, c);
    }
    return out;
}

namespace {
void check_same_ring(const Poly& a, const Poly& b) {
    if (!(*a.ring() == *b.ring())) throw std::invalid_argument("ring mismatch");
}
}  // namespace

Poly Poly::operator-() const {
    Poly out(ring_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same_ring(a, b);
    Poly out(a.ring());
    ExpVec e(a.ring()->size());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [e, coeff] : terms_) coeff *= c;
    }
    return *this;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    Poly out = Poly::constant(ring_, Rat(1));
    for (int i = 0; i < n; ++i) out *= *this;
    return out;
}

Poly normal_form(const Poly& f, const Poly& g) {
    check_same_ring(f, g);
    if (g.is_zero()) throw std::invalid_argument("normal form by zero divisor");
    auto [lg, cg] = g.leading_term();
    Poly r = f;
    for (;;) {
        // first (largest) term divisible by lt(g)
        auto it = r.terms_.begin();
        for (; it != r.terms_.end(); ++it) {
            if (monomial_divides(lg, it->first)) break;
        }
        if (it == r.terms_.end()) return r;
        ExpVec q(it->first.size());
        for (std::size_t i = 0; i < q.size(); ++i) q[i] = it->first[i] - lg[i];
        Rat qc = it->second / cg;
        r -= Poly::monomial(r.ring_, q, qc) * g;
    }
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
    check_same_ring(f, g);
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly q(f.ring());
    Poly r = f;
    auto [lg, cg] = g.leading_term();
    while (!r.is_zero()) {
        auto [lr, cr] = r.leading_term();
        if (!monomial_divides(lg, lr)) return std::nullopt;
        ExpVec e(lr.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = lr[i] - lg[i];
        Poly t = Poly::monomial(f.ring(), e, cr / cg);
        q += t;
        r -= t * g;
    }
    if (!(q * g == f)) {  // exactness certificate, kept in release builds
        throw std::logic_error("divide_exact: re-multiplication mismatch");
    }
    return q;
}

Poly substitute(const Poly& f, const RingPtr& target,
                const std::vector<Poly>& images) {
    const PolyRing& src = *f.ring();
    if (images.size() != src.size()) {
        throw std::invalid_argument("substitute: wrong number of images");
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!(*images[i].ring() == *target)) {
            throw std::invalid_argument("substitute: image ring mismatch");
        }
        if (images[i].is_zero()) continue;
        if (!images[i].is_homogeneous() ||
            images[i].degree() != src.gens[i].degree) {
            throw std::invalid_argument("substitute: image of " + src.gens[i].name +
                                        " is not homogeneous of degree " +
                                        std::to_string(src.gens[i].degree));
        }
    }
    // incremental power cache per generator
    std::vector<std::vector<Poly>> powers(src.size(),
                                          {Poly::constant(target, Rat(1))});
    auto power = [&](std::size_t i, int e) -> const Poly& {
        auto& cache = powers[i];
        while (static_cast<int>(cache.size()) <= e) {
            cache.push_back(cache.back() * images[i]);
        }
        return cache[e];
    };
    Poly out(target);
    for (const auto& [e, c] : f.terms()) {
        Poly term = Poly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) term *= power(i, e[i]);
        }
        out += term;
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mon;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += ring_->gens[i].name;
            if (e[i] > 1) mon += "^" + std::to_string(e[i]);
        }
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

}  // namespace exalg
