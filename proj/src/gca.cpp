#include "exalg/gca.hpp"

#include <algorithm>
#include <sstream>

namespace exalg {

int GcaSignature::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

SigPtr make_signature(std::vector<GcaGenerator> gens) {
    for (const auto& g : gens) {
        if (g.degree <= 0) {
            throw std::invalid_argument("generator " + g.name +
                                        " must have positive degree");
        }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (gens[i].name == gens[j].name) {
                throw std::invalid_argument("duplicate generator " + gens[i].name);
            }
        }
    }
    return std::make_shared<GcaSignature>(GcaSignature{std::move(gens)});
}

int gca_degree(const GcaSignature& sig, const GcaExp& e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * sig.gens[i].degree;
    return d;
}

bool gca_greater(const GcaSignature& sig, const GcaExp& a, const GcaExp& b) {
    int da = gca_degree(sig, a), db = gca_degree(sig, b);
    if (da != db) return da > db;
    return a > b;
}

namespace {
void enumerate(const GcaSignature& sig, std::size_t i, int remaining,
               GcaExp& cur, std::vector<GcaExp>& out) {
    if (i == sig.gens.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const auto& g = sig.gens[i];
    int cap = g.odd() ? 1 : remaining / g.degree;
    cap = std::min(cap, remaining / g.degree);
    for (int e = cap; e >= 0; --e) {
        cur[i] = e;
        enumerate(sig, i + 1, remaining - e * g.degree, cur, out);
    }
    cur[i] = 0;
}
}  // namespace

std::vector<GcaExp> monomial_basis(const GcaSignature& sig, int degree) {
    std::vector<GcaExp> out;
    if (degree < 0) return out;
    GcaExp cur(sig.size(), 0);
    enumerate(sig, 0, degree, cur, out);
    std::sort(out.begin(), out.end(), [&](const GcaExp& a, const GcaExp& b) {
        return gca_greater(sig, a, b);
    });
    return out;
}

GcaElement::GcaElement(SigPtr sig)
    : sig_(std::move(sig)), terms_(Cmp{sig_.get()}) {
    if (!sig_) throw std::invalid_argument("null signature");
}

GcaElement GcaElement::constant(SigPtr sig, const Rat& c) {
    GcaElement e(std::move(sig));
    e.add_term(GcaExp(e.sig_->size(), 0), c);
    return e;
}

GcaElement GcaElement::generator(SigPtr sig, const std::string& name) {
    GcaElement e(std::move(sig));
    int i = e.sig_->index_of(name);
    if (i < 0) throw std::invalid_argument("unknown generator " + name);
    GcaExp x(e.sig_->size(), 0);
    x[i] = 1;
    e.add_term(x, Rat(1));
    return e;
}

GcaElement GcaElement::monomial(SigPtr sig, const GcaExp& e, const Rat& c) {
    GcaElement out(std::move(sig));
    if (e.size() != out.sig_->size()) {
        throw std::invalid_argument("exponent vector length mismatch");
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0) throw std::invalid_argument("negative exponent");
        if (e[i] > 1 && out.sig_->gens[i].odd()) {
            throw std::invalid_argument("odd generator " +
                                        out.sig_->gens[i].name + " squared");
        }
    }
    out.add_term(e, c);
    return out;
}

void GcaElement::add_term(const GcaExp& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool GcaElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = gca_degree(*sig_, terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
        if (gca_degree(*sig_, e) != d) return false;
    }
    return true;
}

int GcaElement::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero element");
    if (!is_homogeneous()) throw std::domain_error("degree of inhomogeneous element");
    return gca_degree(*sig_, terms_.begin()->first);
}

GcaElement GcaElement::operator-() const {
    GcaElement out(sig_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

GcaElement& GcaElement::operator+=(const GcaElement& o) {
    if (!(*sig_ == *o.sig_)) throw std::invalid_argument("signature mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GcaElement& GcaElement::operator-=(const GcaElement& o) {
    if (!(*sig_ == *o.sig_)) throw std::invalid_argument("signature mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GcaElement& GcaElement::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [e, coeff] : terms_) coeff *= c;
    }
    return *this;
}

GcaElement gca_product(const GcaElement& a, const GcaElement& b) {
    if (!(*a.signature() == *b.signature())) {
        throw std::invalid_argument("signature mismatch");
    }
    const GcaSignature& sig = *a.signature();
    GcaElement out(a.signature());
    std::size_t n = sig.size();
    GcaExp e(n);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            bool dead = false;
            int crossings = 0;
            int odd_tail = 0;  // odd generators of a with index > current j
            // walk j downward so odd_tail accumulates a's odd exponents above j
            for (std::size_t jj = n; jj-- > 0;) {
                if (sig.gens[jj].odd()) {
                    if (eb[jj]) {
                        if (ea[jj]) { dead = true; break; }
                        crossings += odd_tail;
                    }
                    odd_tail += ea[jj];
                }
            }
            if (dead) continue;
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            Rat c = ca * cb;
            if (crossings % 2 != 0) c = -c;
            out.add_term(e, c);
        }
    }
    return out;
}

std::string GcaElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mon;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += sig_->gens[i].name;
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
