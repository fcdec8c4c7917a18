#include "exalg/cdga.hpp"

#include <algorithm>

namespace exalg {

CdgaSpec::CdgaSpec(SigPtr sig, std::vector<GcaElement> differential,
                   FieldSpec field, std::map<std::string, Rat> parameters)
    : sig_(std::move(sig)),
      differential_(std::move(differential)),
      field_(field),
      params_(std::move(parameters)) {
    if (differential_.size() != sig_->size()) {
        throw std::invalid_argument("one differential image per generator required");
    }
    for (std::size_t i = 0; i < differential_.size(); ++i) {
        const auto& img = differential_[i];
        if (!(*img.signature() == *sig_)) {
            throw std::invalid_argument("differential image in wrong algebra");
        }
        if (img.is_zero()) continue;
        if (!img.is_homogeneous() ||
            img.degree() != sig_->gens[i].degree + 1) {
            throw std::invalid_argument(
                "d(" + sig_->gens[i].name + ") must be homogeneous of degree " +
                std::to_string(sig_->gens[i].degree + 1));
        }
    }
    for (std::size_t i = 0; i < differential_.size(); ++i) {
        if (!extend_differential(*this, differential_[i]).is_zero()) {
            throw std::invalid_argument("d^2(" + sig_->gens[i].name +
                                        ") is non-zero");
        }
    }
}

GcaElement extend_differential(const CdgaSpec& spec, const GcaElement& u) {
    const GcaSignature& sig = *spec.signature();
    GcaElement out(spec.signature());
    for (const auto& [exp, coeff] : u.terms()) {
        // spell the monomial out as a word of generators
        std::vector<std::size_t> letters;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            for (int k = 0; k < exp[i]; ++k) letters.push_back(i);
        }
        int prefix_deg = 0;
        for (std::size_t p = 0; p < letters.size(); ++p) {
            std::size_t g = letters[p];
            const GcaElement& dg = spec.d_of(g);
            if (!dg.is_zero()) {
                GcaExp left(exp.size(), 0), right(exp.size(), 0);
                for (std::size_t t = 0; t < p; ++t) ++left[letters[t]];
                for (std::size_t t = p + 1; t < letters.size(); ++t) {
                    ++right[letters[t]];
                }
                Rat c = coeff;
                if (prefix_deg % 2 != 0) c = -c;
                GcaElement term = gca_product(
                    GcaElement::monomial(spec.signature(), left, c),
                    gca_product(dg, GcaElement::monomial(spec.signature(),
                                                         right, Rat(1))));
                out += term;
            }
            prefix_deg += sig.gens[g].degree;
        }
    }
    return out;
}

namespace {

std::vector<Rat> coords_of(const GcaElement& u, const std::vector<GcaExp>& basis) {
    std::vector<Rat> v(basis.size(), Rat(0));
    for (const auto& [e, c] : u.terms()) {
        auto it = std::find(basis.begin(), basis.end(), e);
        if (it == basis.end()) throw std::logic_error("monomial outside basis");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

GcaElement element_of(const SigPtr& sig, const std::vector<GcaExp>& basis,
                      const std::vector<Rat>& coords) {
    GcaElement u(sig);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) u.add_term(basis[i], coords[i]);
    }
    return u;
}

bool vanishes(const GcaElement& u, const FieldSpec& f) {
    if (f.is_rationals()) return u.is_zero();
    for (const auto& [e, c] : u.terms()) {
        if (fp::reduce(c, f.p) != 0) return false;
    }
    return true;
}

}  // namespace

const DegreeSlot& CohomologyTable::slot(int n) const {
    if (n < 0 || n > max_degree_) throw std::out_of_range("degree out of table range");
    return slots_[static_cast<std::size_t>(n)];
}

const Matrix& CohomologyTable::differential_matrix(int n) const {
    if (n < 0 || n > max_degree_) throw std::out_of_range("degree out of table range");
    return d_[static_cast<std::size_t>(n)];
}

std::vector<std::size_t> CohomologyTable::betti_numbers() const {
    std::vector<std::size_t> b;
    for (const auto& s : slots_) b.push_back(s.betti);
    return b;
}

CohomologyTable cohomology(const CdgaSpec& spec, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("negative truncation degree");
    const SigPtr& sig = spec.signature();
    const FieldSpec& f = spec.field();

    CohomologyTable table;
    table.max_degree_ = max_degree;

    std::vector<std::vector<GcaExp>> bases(max_degree + 2);
    for (int n = 0; n <= max_degree + 1; ++n) {
        bases[n] = monomial_basis(*sig, n);
    }

    // d_[n] has one column per basis monomial of C^n
    table.d_.reserve(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) {
        Matrix m(bases[n + 1].size(), bases[n].size());
        for (std::size_t j = 0; j < bases[n].size(); ++j) {
            GcaElement img = extend_differential(
                spec, GcaElement::monomial(sig, bases[n][j], Rat(1)));
            for (const auto& [e, c] : img.terms()) {
                auto it = std::find(bases[n + 1].begin(), bases[n + 1].end(), e);
                if (it == bases[n + 1].end()) {
                    throw std::logic_error("differential image outside basis");
                }
                m.at(static_cast<std::size_t>(it - bases[n + 1].begin()), j) = c;
            }
        }
        table.d_.push_back(std::move(m));
    }

    table.slots_.resize(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) {
        DegreeSlot& slot = table.slots_[n];
        slot.basis = bases[n];
        slot.dim_cochains = bases[n].size();

        auto cocycles = nullspace_basis(table.d_[n], f);
        slot.dim_cocycles = cocycles.size();
        slot.dim_coboundaries = n == 0 ? 0 : rank(table.d_[n - 1], f);
        slot.betti = slot.dim_cocycles - slot.dim_coboundaries;

        RowSpace span(slot.dim_cochains, f);
        if (n > 0) {
            const Matrix& din = table.d_[n - 1];
            for (std::size_t j = 0; j < din.cols(); ++j) {
                std::vector<Rat> col(din.rows());
                for (std::size_t i = 0; i < din.rows(); ++i) col[i] = din.at(i, j);
                span.insert(std::move(col));
            }
        }
        for (const auto& z : cocycles) {
            auto residue = span.reduce(z);
            if (residue.empty()) continue;
            if (!span.insert(z)) continue;
            // normalize leading coefficient to 1 for a canonical representative
            std::size_t lead = 0;
            while (residue[lead] == 0) ++lead;
            Rat s = Rat(1) / residue[lead];
            for (auto& x : residue) {
                x *= s;
                if (!f.is_rationals()) {
                    x = Rat(static_cast<long>(fp::reduce(x, f.p)));
                }
            }
            slot.representatives.push_back(element_of(sig, slot.basis, residue));
        }
        if (slot.representatives.size() != slot.betti) {
            throw std::logic_error("representative count disagrees with betti number");
        }
    }
    return table;
}

ClassMembership class_membership(const CdgaSpec& spec,
                                 const CohomologyTable& table,
                                 const GcaElement& u) {
    if (u.is_zero() || !u.is_homogeneous()) {
        throw std::invalid_argument("class membership needs a non-zero homogeneous element");
    }
    int n = u.degree();
    if (n > table.max_degree()) {
        throw std::out_of_range("degree beyond table truncation");
    }
    const FieldSpec& f = spec.field();
    const DegreeSlot& slot = table.slot(n);

    if (!vanishes(extend_differential(spec, u), f)) {
        return {ClassMembership::Status::not_cocycle, std::nullopt, {}};
    }

    std::vector<Rat> target = coords_of(u, slot.basis);
    if (n > 0) {
        auto pre = solve(table.differential_matrix(n - 1), target, f);
        if (pre.has_value()) {
            return {ClassMembership::Status::exact,
                    element_of(spec.signature(), table.slot(n - 1).basis, *pre),
                    {}};
        }
    }

    // coordinates in the representative basis, modulo coboundaries; the
    // representative block of any solution is unique
    std::size_t reps = slot.representatives.size();
    const Matrix* din = n > 0 ? &table.differential_matrix(n - 1) : nullptr;
    std::size_t cols = reps + (din ? din->cols() : 0);
    Matrix a(slot.dim_cochains, cols);
    for (std::size_t j = 0; j < reps; ++j) {
        auto rv = coords_of(slot.representatives[j], slot.basis);
        for (std::size_t i = 0; i < rv.size(); ++i) a.at(i, j) = rv[i];
    }
    if (din) {
        for (std::size_t j = 0; j < din->cols(); ++j) {
            for (std::size_t i = 0; i < din->rows(); ++i) {
                a.at(i, reps + j) = din->at(i, j);
            }
        }
    }
    auto sol = solve(a, target, f);
    if (!sol.has_value()) {
        throw std::logic_error("cocycle not expressible in representatives");
    }
    std::vector<Rat> coords(sol->begin(), sol->begin() + reps);
    return {ClassMembership::Status::nontrivial, std::nullopt,
            std::move(coords)};
}

BasisCheck verify_claimed_basis(const CdgaSpec& spec,
                                const CohomologyTable& table,
                                const std::vector<BasisRecipe>& family) {
    const FieldSpec& f = spec.field();
    int n_max = table.max_degree();
    BasisCheck out;

    // bucket family members by degree, rejecting non-cocycles up front
    std::map<int, std::vector<const BasisRecipe*>> by_degree;
    for (const auto& r : family) {
        if (r.element.is_zero() || !r.element.is_homogeneous()) {
            out.ok = false;
            out.failures.push_back(r.label + ": not homogeneous non-zero");
            continue;
        }
        int n = r.element.degree();
        if (n > n_max) continue;  // beyond the verified window
        if (!vanishes(extend_differential(spec, r.element), f)) {
            out.ok = false;
            out.failures.push_back(r.label + ": not a cocycle");
            continue;
        }
        by_degree[n].push_back(&r);
    }

    for (int n = 0; n <= n_max; ++n) {
        const DegreeSlot& slot = table.slot(n);
        RowSpace span(slot.dim_cochains, f);
        // seed with coboundaries so ranks are computed in cohomology
        if (n > 0) {
            const Matrix& din = table.differential_matrix(n - 1);
            for (std::size_t j = 0; j < din.cols(); ++j) {
                std::vector<Rat> col(din.rows());
                for (std::size_t i = 0; i < din.rows(); ++i) col[i] = din.at(i, j);
                span.insert(std::move(col));
            }
        }
        std::size_t count = 0, added = 0;
        auto it = by_degree.find(n);
        if (it != by_degree.end()) {
            count = it->second.size();
            for (const auto* r : it->second) {
                if (span.insert(coords_of(r->element, slot.basis))) ++added;
            }
        }
        DegreeReport rep{n, slot.betti, count, added};
        if (!rep.ok()) {
            out.ok = false;
            out.failures.push_back(
                "degree " + std::to_string(n) + ": betti " +
                std::to_string(slot.betti) + ", family " + std::to_string(count) +
                ", independent " + std::to_string(added));
        }
        out.by_degree.push_back(rep);
    }
    return out;
}

}  // namespace exalg
