#include "exalg/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "exalg/charindex.hpp"

namespace exalg {

namespace {

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> e = {
        {EntryKind::basis_family, "cor-7.1-family", "Corollary 7.1"},
        {EntryKind::basis_family, "cor-7.2-family", "Corollary 7.2"},
        {EntryKind::series, "cor-7.4-zp-series", "Corollary 7.4"},
        {EntryKind::series, "cor-7.5-tensor-quotient", "Corollary 7.5"},
        {EntryKind::presentation, "cor-b.2-sphere-quotient", "Corollary B.2"},
        {EntryKind::ring_map, "cor-b.7-torus-maps", "Corollary B.7"},
        {EntryKind::weight_table, "prop-b.1-weights-even", "Proposition B.1"},
        {EntryKind::weight_table, "prop-b.1-weights-odd", "Proposition B.1"},
        {EntryKind::ring_map, "remark-5.5-blowdown", "Remark 5.5"},
        {EntryKind::cdga, "sec-4-symp-blowup-model", "Section 4"},
        {EntryKind::cdga, "sec-4-symp-model", "Section 4"},
        {EntryKind::presentation, "split-base", "Lemma 5.4 proof"},
        {EntryKind::presentation, "split-blowup", "Theorem B.8"},
        {EntryKind::series, "thm-3.1-fiber-series", "Theorem 3.1"},
        {EntryKind::cdga, "thm-5.1-model", "Theorem 5.1"},
        {EntryKind::cdga, "thm-6.3-model", "Theorem 6.3"},
        {EntryKind::ring_map, "thm-b.11-map", "Theorem B.11"},
        {EntryKind::ring_map, "thm-b.8-blowdown", "Theorem B.8 proof"},
        {EntryKind::ring_map, "thm-b.9-map", "Theorem B.9"},
        {EntryKind::presentation, "twisted-base", "Remark 5.5"},
        {EntryKind::presentation, "twisted-blowup", "Remark 5.5"},
    };
    std::sort(e.begin(), e.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                  return a.name < b.name;
              });
    return e;
}

void require_model_params(const std::string& name, int ell, int i,
                          const Rat& q, bool uses_q) {
    if (ell < 1) {
        throw std::invalid_argument("catalog cdga " + name +
                                    " needs ell >= 1");
    }
    if (i != 0 && i != 1) {
        throw std::invalid_argument("catalog cdga " + name +
                                    " needs i in {0, 1}");
    }
    if (uses_q && q == 0) {
        throw std::invalid_argument("catalog cdga " + name +
                                    " needs a nonzero q");
    }
}

GcaElement family_monomial(const SigPtr& sig, const GcaExp& e) {
    return GcaElement::monomial(sig, e, Rat(1));
}

std::string power_label(const std::string& base, int n) {
    if (n == 1) {
        return base;
    }
    return base + "^" + std::to_string(n);
}

}  // namespace

const std::vector<CatalogEntry>& paper_catalog() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    const auto& entries = paper_catalog();
    auto it = std::lower_bound(entries.begin(), entries.end(), name,
                               [](const CatalogEntry& e, const std::string& n) {
                                   return e.name < n;
                               });
    if (it == entries.end() || it->name != name) {
        throw std::out_of_range("unknown catalog entry: " + name);
    }
    return *it;
}

PresentationKey catalog_presentation_key(const std::string& name) {
    if (name == "split-blowup") {
        return PresentationKey::split_blowup;
    }
    if (name == "split-base") {
        return PresentationKey::split_base;
    }
    if (name == "twisted-blowup") {
        return PresentationKey::twisted_blowup;
    }
    if (name == "twisted-base") {
        return PresentationKey::twisted_base;
    }
    throw std::out_of_range("not a quotient presentation entry: " + name);
}

RingPresentation catalog_sphere_quotient(int n) {
    Poly e = euler_closed_form(n);
    return RingPresentation(e.ring(), e,
                            "sphere bundle quotient (n=" + std::to_string(n) +
                                ")");
}

CdgaSpec catalog_cdga(const std::string& name, int ell, int i, const Rat& q,
                      FieldSpec field) {
    if (name == "sec-4-symp-model" || name == "sec-4-symp-blowup-model") {
        require_model_params(name, ell, i, q, false);
        bool blowup = name == "sec-4-symp-blowup-model";
        int dx = blowup ? 1 : 3;
        int dw = blowup ? 4 * ell + 2 * i - 2 : 4 * ell + 2 * i;
        auto sig = make_signature(
            {{"t", 1}, {"x", dx}, {"y", dx}, {"w", dw}});
        std::vector<GcaElement> d(4, GcaElement(sig));
        return CdgaSpec(sig, std::move(d), field);
    }
    if (name == "thm-5.1-model") {
        require_model_params(name, ell, i, q, true);
        int dg = 4 * ell + 2 * i - 1;
        auto sig = make_signature(
            {{"a", 2}, {"b", 2}, {"e", 3}, {"f", 3}, {"g", dg}, {"h", dg + 1}});
        auto zero = GcaElement(sig);
        auto a = GcaElement::generator(sig, "a");
        auto b = GcaElement::generator(sig, "b");
        auto g = GcaElement::generator(sig, "g");
        std::vector<GcaElement> d = {zero,
                                     zero,
                                     gca_product(a, a),
                                     gca_product(b, b),
                                     zero,
                                     q * gca_product(b, g)};
        return CdgaSpec(sig, std::move(d), field, {{"q", q}});
    }
    if (name == "thm-6.3-model") {
        require_model_params(name, ell, i, q, true);
        int dg = 4 * ell + 2 * i - 1;
        auto sig = make_signature(
            {{"d", 2}, {"e", 3}, {"f", 3}, {"v", 3}, {"g", dg}, {"h", dg + 1}});
        auto zero = GcaElement(sig);
        auto dd = GcaElement::generator(sig, "d");
        auto g = GcaElement::generator(sig, "g");
        std::vector<GcaElement> d = {zero,
                                     gca_product(dd, dd),
                                     zero,
                                     zero,
                                     zero,
                                     (-q) * gca_product(dd, g)};
        return CdgaSpec(sig, std::move(d), field, {{"q", q}});
    }
    throw std::out_of_range("unknown catalog cdga: " + name);
}

std::vector<BasisRecipe> catalog_basis_family(const std::string& name,
                                              const CdgaSpec& spec,
                                              int max_degree) {
    if (name != "cor-7.1-family" && name != "cor-7.2-family") {
        throw std::out_of_range("unknown catalog basis family: " + name);
    }
    const auto& sig = spec.signature();
    Rat q = spec.parameters().at("q");
    int dh = sig->gens[5].degree;
    std::vector<BasisRecipe> family;
    auto push = [&](const std::string& label, const GcaElement& u) {
        if (!u.is_zero() && u.degree() <= max_degree) {
            family.push_back({label, u});
        }
    };

    if (name == "cor-7.1-family") {
        // a, b, e, f, g, h at indices 0..5
        push("1", family_monomial(sig, {0, 0, 0, 0, 0, 0}));
        push("a", family_monomial(sig, {1, 0, 0, 0, 0, 0}));
        push("b", family_monomial(sig, {0, 1, 0, 0, 0, 0}));
        push("a*b", family_monomial(sig, {1, 1, 0, 0, 0, 0}));
        push("g", family_monomial(sig, {0, 0, 0, 0, 1, 0}));
        push("a*g", family_monomial(sig, {1, 0, 0, 0, 1, 0}));
        // 2 + n*dh is the least degree at level n, reached by s_n
        for (int n = 1; 2 + n * dh <= max_degree; ++n) {
            for (int alpha = 0; alpha <= 1; ++alpha) {
                std::string prefix = alpha ? "a*" : "";
                push(prefix + power_label("g*h", n),
                     family_monomial(sig, {alpha, 0, 0, 0, 1, n}));
                // s_n = b*h^n - n*q*f*g*h^(n-1), the closed correction of b*h^n
                GcaElement s = family_monomial(sig, {alpha, 1, 0, 0, 0, n});
                s -= (Rat(n) * q) *
                     family_monomial(sig, {alpha, 0, 0, 1, 1, n - 1});
                push(prefix + "s_" + std::to_string(n), s);
            }
        }
        return family;
    }

    if (name == "cor-7.2-family") {
        // d, e, f, v, g, h at indices 0..5; base monomials avoid d*g, whose
        // class is a multiple of d(h)
        for (int a = 0; a <= 1; ++a) {
            for (int f = 0; f <= 1; ++f) {
                for (int v = 0; v <= 1; ++v) {
                    for (int g = 0; g <= 1; ++g) {
                        if (a && g) {
                            continue;
                        }
                        GcaElement m =
                            family_monomial(sig, {a, 0, f, v, g, 0});
                        push(m.str(), m);
                    }
                }
            }
        }
        auto fgen = GcaElement::generator(sig, "f");
        auto vgen = GcaElement::generator(sig, "v");
        for (int n = 1; 2 + n * dh <= max_degree; ++n) {
            // s_n = d*h^n + n*q*e*g*h^(n-1); products with the odd
            // generators f, v go through gca_product for the signs
            GcaElement s = family_monomial(sig, {1, 0, 0, 0, 0, n});
            s += (Rat(n) * q) * family_monomial(sig, {0, 1, 0, 0, 1, n - 1});
            GcaElement ghn = family_monomial(sig, {0, 0, 0, 0, 1, n});
            for (int f = 0; f <= 1; ++f) {
                for (int v = 0; v <= 1; ++v) {
                    std::string prefix;
                    GcaElement su = s;
                    GcaElement gu = ghn;
                    if (v) {
                        prefix = "v*";
                        su = gca_product(vgen, su);
                        gu = gca_product(vgen, gu);
                    }
                    if (f) {
                        prefix = "f*" + prefix;
                        su = gca_product(fgen, su);
                        gu = gca_product(fgen, gu);
                    }
                    push(prefix + power_label("g*h", n), gu);
                    push(prefix + "s_" + std::to_string(n), su);
                }
            }
        }
        return family;
    }

    throw std::out_of_range("unknown catalog basis family: " + name);
}

RationalGF catalog_series(const std::string& name, int ell, int i) {
    if (name == "cor-7.4-zp-series") {
        if (ell != 1 || i != 0) {
            throw std::invalid_argument(
                "cor-7.4-zp-series is stated for ell = 1, i = 0 only");
        }
        // basis 1, a, b, g, ab, ag plus the families b*h_n, g*h_n, a*b*h_n,
        // a*g*h_n with n >= 1; the divided powers h_n sit in degree 4n
        RationalGF base = make_gf({1, 0, 2, 1, 1, 1}, {1});
        RationalGF tail =
            gf_mul(make_gf({0, 0, 1, 1, 1, 1}, {1}),
                   make_gf({0, 0, 0, 0, 1}, {1, 0, 0, 0, -1}));
        return gf_add(base, tail);
    }
    if (name == "cor-7.5-tensor-quotient") {
        return series_tensor_quotient({2, 3, 4}, {2});
    }
    if (name == "thm-3.1-fiber-series") {
        if (ell < 1 || (i != 0 && i != 1)) {
            throw std::invalid_argument(
                "thm-3.1-fiber-series needs ell >= 1 and i in {0, 1}");
        }
        RationalGF base = gf_mul(series_sphere(2), series_sphere(2));
        RationalGF fiber = gf_mul(series_sphere(4 * ell + 2 * i - 1),
                                  series_loop_odd_sphere(4 * ell + 2 * i + 1));
        return gf_mul(base, fiber);
    }
    throw std::out_of_range("unknown catalog series: " + name);
}

}  // namespace exalg
