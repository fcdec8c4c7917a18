#include "exalg/koszul.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace exalg {

int ext_degree(const ExtExp& e) {
    return -(e[0] + e[1] + e[2]) - 2 * e[3];
}

int int_degree(const KoszulData& k, const ExtExp& e) {
    return 2 * e[0] + 4 * e[1] + 4 * e[2] + k.delta_internal * e[3];
}

namespace {

void add_term(KoszulElement& u, const ExtExp& e, const Poly& p) {
    if (p.is_zero()) return;
    auto it = u.terms.find(e);
    if (it == u.terms.end()) {
        u.terms.emplace(e, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) u.terms.erase(it);
    }
}

// normal-form monomial basis of S = Q[z,x,y]/<r> in one internal degree
std::vector<ExpVec> s_basis(const KoszulData& k, int m) {
    std::vector<ExpVec> out;
    if (m < 0) return out;
    const ExpVec lt = k.relation.leading_term().first;
    for (const auto& mon : monomials_of_degree(*k.ring, m)) {
        if (!monomial_divides(lt, mon)) out.push_back(mon);
    }
    return out;
}

// all external monomials with internal degree <= q, sorted
std::vector<ExtExp> ext_monomials(const KoszulData& k, int q) {
    std::vector<ExtExp> out;
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
            for (int c = 0; c <= 1; ++c) {
                for (int e = 0; 2 * a + 4 * b + 4 * c + k.delta_internal * e <= q;
                     ++e) {
                    out.push_back({a, b, c, e});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string koszul_str(const KoszulElement& u) {
    if (u.is_zero()) return "0";
    static const char* names[4] = {"alpha", "beta", "gamma", "delta"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, p] : u.terms) {
        if (!first) os << " + ";
        first = false;
        std::string ext;
        for (int i = 0; i < 4; ++i) {
            if (e[static_cast<std::size_t>(i)] == 0) continue;
            if (!ext.empty()) ext += "*";
            ext += names[i];
            if (e[static_cast<std::size_t>(i)] > 1) {
                ext += "^" + std::to_string(e[static_cast<std::size_t>(i)]);
            }
        }
        if (ext.empty()) {
            os << p.str();
        } else if (p == Poly::constant(p.ring(), Rat(1))) {
            os << ext;
        } else {
            os << ext << "*(" << p.str() << ")";
        }
    }
    return os.str();
}

KoszulData build_koszul(int ell, FieldSpec field,
                        const std::vector<std::string>& base_order) {
    if (ell < 1) throw std::invalid_argument("koszul: ell must be positive");
    {
        std::vector<std::string> sorted = base_order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::vector<std::string>{"x", "y", "z"}) {
            throw std::invalid_argument(
                "koszul: base order must be a permutation of z,x,y");
        }
    }
    std::vector<GeneratorDecl> gens;
    for (const auto& name : base_order) gens.push_back({name, 2});
    KoszulData k(make_ring(std::move(gens)));
    k.ell = ell;
    k.field = field;

    Poly z = Poly::generator(k.ring, "z");
    Poly x = Poly::generator(k.ring, "x");
    Poly y = Poly::generator(k.ring, "y");

    auto quadric = [&](int i) {
        Poly u = z - Rat(i * i) * x;
        return u * u - Rat(i * i) * (y * y);
    };

    Poly rel = z * (z - Rat(ell * ell) * x + Rat(ell) * y);
    for (int i = 1; i < ell; ++i) rel = rel * quadric(i);
    k.relation = rel;

    k.d_alpha = z;
    k.d_beta = x * x;
    k.d_gamma = y * y + Rat(2) * x * z;
    Poly factor = Poly::constant(k.ring, Rat(1));
    for (int i = 1; i <= ell; ++i) factor = factor * quadric(i);
    k.delta_factor = factor;
    k.delta_internal = 4 * ell + 2;
    k.truncation = 8 * ell - 1;

    // d^2(delta) = z * delta_factor must die in S; divide_exact doubles as
    // the certificate (the quotient is the linear form z - l^2 x - l y)
    if (!divide_exact(z * k.delta_factor, k.relation).has_value()) {
        throw std::logic_error("koszul: d^2(delta) does not vanish in S");
    }
    return k;
}

KoszulElement koszul_d(const KoszulData& k, const KoszulElement& u) {
    KoszulElement out;
    for (const auto& [e, coeff] : u.terms) {
        if (e[0]) {
            add_term(out, {0, e[1], e[2], e[3]}, k.d_alpha * coeff);
        }
        if (e[1]) {
            Poly t = k.d_beta * coeff;
            if (e[0]) t = -t;
            add_term(out, {e[0], 0, e[2], e[3]}, t);
        }
        if (e[2]) {
            Poly t = k.d_gamma * coeff;
            if ((e[0] + e[1]) % 2 != 0) t = -t;
            add_term(out, {e[0], e[1], 0, e[3]}, t);
        }
        if (e[3] >= 1 && e[0] == 0) {
            // the alpha of d(delta) crosses beta^b gamma^c twice over, so the
            // leibniz sign and the reordering sign cancel
            add_term(out, {1, e[1], e[2], e[3] - 1},
                     Rat(e[3]) * (k.delta_factor * coeff));
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        it->second = normal_form(it->second, k.relation);
        if (it->second.is_zero()) {
            it = out.terms.erase(it);
        } else {
            ++it;
        }
    }
    return out;
}

KoszulColumn koszul_column(const KoszulData& k, int q) {
    if (q < 0) throw std::invalid_argument("koszul: negative internal degree");
    KoszulColumn col;
    col.q = q;

    auto exts = ext_monomials(k, q);
    for (const auto& e : exts) {
        int p = ext_degree(e);
        auto mons = s_basis(k, q - int_degree(k, e));
        for (const auto& m : mons) col.basis[p].emplace_back(e, m);
    }

    // index of each (ext, monomial) pair inside its external degree
    std::map<int, std::map<std::pair<ExtExp, ExpVec>, std::size_t>> index;
    for (const auto& [p, basis] : col.basis) {
        for (std::size_t i = 0; i < basis.size(); ++i) index[p][basis[i]] = i;
    }

    for (const auto& [p, basis] : col.basis) {
        std::size_t rows = 0;
        auto up = col.basis.find(p + 1);
        if (up != col.basis.end()) rows = up->second.size();
        Matrix m(rows, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            KoszulElement u;
            u.terms.emplace(basis[j].first,
                            Poly::monomial(k.ring, basis[j].second, Rat(1)));
            KoszulElement du = koszul_d(k, u);
            if (!koszul_d(k, du).is_zero()) {
                throw std::logic_error("koszul: d^2 is non-zero on a basis element");
            }
            for (const auto& [e, poly] : du.terms) {
                for (const auto& [mon, c] : poly.terms()) {
                    auto it = index[p + 1].find({e, mon});
                    if (it == index[p + 1].end()) {
                        throw std::logic_error("koszul: image outside column basis");
                    }
                    m.at(it->second, j) = c;
                }
            }
        }
        col.d.emplace(p, std::move(m));
    }
    return col;
}

namespace {

std::size_t tor_rank_in_column(const KoszulData& k, const KoszulColumn& col,
                               int p) {
    auto here = col.basis.find(p);
    if (here == col.basis.end() || here->second.empty()) return 0;
    std::size_t kernel = here->second.size() - rank(col.d.at(p), k.field);
    auto below = col.d.find(p - 1);
    std::size_t image = below == col.d.end() ? 0 : rank(below->second, k.field);
    return kernel - image;
}

}  // namespace

std::map<int, std::size_t> tor_ranks(const KoszulData& k, int total_degree) {
    if (total_degree < 0) {
        throw std::invalid_argument("koszul: negative total degree");
    }
    if (total_degree > k.truncation) {
        throw std::domain_error(
            "koszul: total degree " + std::to_string(total_degree) +
            " is outside the validity bound < " + std::to_string(8 * k.ell));
    }
    std::map<int, std::size_t> out;
    for (int p = -5; p <= 0; ++p) {
        int q = total_degree - p;
        KoszulColumn col = koszul_column(k, q);
        auto here = col.basis.find(p);
        if (here == col.basis.end() || here->second.empty()) continue;
        out[p] = tor_rank_in_column(k, col, p);
    }
    return out;
}

std::size_t tor_total_rank(const KoszulData& k, int total_degree) {
    std::size_t total = 0;
    for (const auto& [p, r] : tor_ranks(k, total_degree)) total += r;
    return total;
}

std::vector<KoszulElement> tor_representative(const KoszulData& k,
                                              int total_degree,
                                              int external_degree) {
    if (total_degree > k.truncation) {
        throw std::domain_error("koszul: total degree outside validity bound");
    }
    int q = total_degree - external_degree;
    if (q < 0) return {};
    KoszulColumn col = koszul_column(k, q);
    auto here = col.basis.find(external_degree);
    if (here == col.basis.end() || here->second.empty()) return {};
    const auto& basis = here->second;

    auto cocycles = nullspace_basis(col.d.at(external_degree), k.field);
    RowSpace span(basis.size(), k.field);
    auto below = col.d.find(external_degree - 1);
    if (below != col.d.end()) {
        const Matrix& din = below->second;
        for (std::size_t j = 0; j < din.cols(); ++j) {
            std::vector<Rat> v(din.rows());
            for (std::size_t i = 0; i < din.rows(); ++i) v[i] = din.at(i, j);
            span.insert(std::move(v));
        }
    }

    std::vector<KoszulElement> reps;
    for (const auto& zvec : cocycles) {
        auto residue = span.reduce(zvec);
        if (residue.empty()) continue;
        if (!span.insert(zvec)) continue;
        std::size_t lead = 0;
        while (residue[lead] == 0) ++lead;
        Rat s = Rat(1) / residue[lead];
        KoszulElement rep;
        for (std::size_t i = 0; i < residue.size(); ++i) {
            Rat c = residue[i] * s;
            if (!k.field.is_rationals()) {
                c = Rat(static_cast<long>(fp::reduce(c, k.field.p)));
            }
            if (c != 0) {
                add_term(rep, basis[i].first,
                         Poly::monomial(k.ring, basis[i].second, c));
            }
        }
        reps.push_back(std::move(rep));
    }
    return reps;
}

EulerCheck euler_column_check(const KoszulData& k, int internal_degree) {
    KoszulColumn col = koszul_column(k, internal_degree);
    EulerCheck res;
    for (const auto& [p, basis] : col.basis) {
        long sign = p % 2 == 0 ? 1 : -1;
        res.cochain_sum += sign * static_cast<long>(basis.size());
        res.tor_sum += sign * static_cast<long>(tor_rank_in_column(k, col, p));
    }
    return res;
}

}  // namespace exalg
