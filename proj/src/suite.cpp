#include "exalg/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "exalg/catalog.hpp"
#include "exalg/cdga.hpp"
#include "exalg/charindex.hpp"
#include "exalg/koszul.hpp"
#include "exalg/matrix.hpp"
#include "exalg/ringmaps.hpp"
#include "exalg/series.hpp"

namespace exalg {

namespace {

using json = nlohmann::json;

const char* kEll = "ℓ";

struct Outcome {
    CheckStatus status = CheckStatus::pass;
    std::string text;
    json witness = json::object();
};

Outcome failed(std::string text, json witness) {
    Outcome o;
    o.status = CheckStatus::fail;
    o.text = std::move(text);
    o.witness = std::move(witness);
    return o;
}

struct CheckDef {
    std::string id;
    std::string paper_ref;
    std::vector<std::string> entries;  // catalog names this check exercises
    std::function<Outcome()> run;
};

std::string field_tag(const FieldSpec& f) {
    return f.is_rationals() ? "q" : "f" + std::to_string(f.p);
}

json size_array(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

// 1 / prod (1 - t^deg) over the polynomial generators
RationalGF ring_series(const PolyRing& ring) {
    RationalGF s = make_gf({1}, {1});
    for (const auto& g : ring.gens) {
        ZPoly den(g.degree + 1, ZInt(0));
        den[0] = 1;
        den[g.degree] = -1;
        s = gf_mul(s, make_gf({1}, den));
    }
    return s;
}

// first degree where the series and the dimension vector disagree, -1 if none
int mismatch_at(const TruncatedSeries& s, const std::vector<std::size_t>& dims) {
    int n = std::min<int>(s.order(), static_cast<int>(dims.size()) - 1);
    for (int d = 0; d <= n; ++d) {
        if (s.coeff[d] != ZInt(static_cast<unsigned long>(dims[d]))) return d;
    }
    return -1;
}

// graded dimensions of ring/(relation) by reducing every monomial to normal
// form and ranking the coefficient rows; independent of the series algebra
std::vector<std::size_t> quotient_dims(const RingPresentation& pres, int N) {
    std::vector<std::size_t> dims(N + 1, 0);
    for (int d = 0; d <= N; ++d) {
        auto monos = monomials_of_degree(*pres.ring, d);
        if (monos.empty()) continue;
        std::vector<std::vector<Rat>> rows;
        for (const auto& e : monos) {
            Poly nf = normal_form(Poly::monomial(pres.ring, e, rat(1)),
                                  pres.relation);
            std::vector<Rat> row(monos.size(), rat(0));
            for (std::size_t j = 0; j < monos.size(); ++j) {
                auto it = nf.terms().find(monos[j]);
                if (it != nf.terms().end()) row[j] = it->second;
            }
            rows.push_back(std::move(row));
        }
        dims[d] = rank(Matrix::from_rows(rows), FieldSpec::rationals());
    }
    return dims;
}

// ---- check bodies ----

Outcome tor_check(int ell, const FieldSpec& field) {
    if (!field.is_rationals() && field.p == 2) {
        Outcome o;
        o.status = CheckStatus::skip;
        o.text = "stated for p != 2";
        o.witness = json{{"reason", "stated for p != 2"}};
        return o;
    }
    auto k = build_koszul(ell, field);
    int total = 4 * ell;
    auto ranks = tor_ranks(k, total);
    std::size_t rank_sum = 0;
    json jr = json::object();
    for (const auto& [p, r] : ranks) {
        rank_sum += r;
        if (r > 0) jr[std::to_string(p)] = r;
    }
    std::size_t expected = ell == 1 ? 1 : 0;
    Outcome o;
    o.witness = json{{"total_degree", total},
                     {"ranks", jr},
                     {"expected_rank", expected}};
    std::string lbl =
        std::string(kEll) + "=" + std::to_string(ell) + " deg=" + std::to_string(total);
    if (rank_sum != expected) {
        return failed(lbl + " rank=" + std::to_string(rank_sum) + " expected " +
                          std::to_string(expected),
                      o.witness);
    }
    if (ell == 1) {
        auto reps = tor_representative(k, total, 0);
        if (reps.size() != 1) {
            return failed(lbl + " expected one representative, got " +
                              std::to_string(reps.size()),
                          o.witness);
        }
        std::string cls = koszul_str(reps[0]);
        o.witness["class"] = cls;
        if (cls != "x*y") {
            return failed(lbl + " unexpected class " + cls, o.witness);
        }
        std::string pretty = cls;
        std::erase(pretty, '*');
        o.text = lbl + " rank=1 (class " + pretty + ")";
    } else {
        o.text = lbl + " rank=0";
    }
    return o;
}

std::string li_label(int ell, int i) {
    return std::string(kEll) + "=" + std::to_string(ell) +
           " i=" + std::to_string(i);
}

Outcome free_model_check(const std::string& name, int ell, int i, int N) {
    CdgaSpec spec = catalog_cdga(name, ell, i, rat(1));
    auto betti = cohomology(spec, N).betti_numbers();
    auto want = expand(series_free_gca(*spec.signature()), N);
    int bad = mismatch_at(want, betti);
    if (bad >= 0) {
        return failed(li_label(ell, i) + " mismatch at degree " +
                          std::to_string(bad),
                      json{{"degree", bad},
                           {"betti", betti[bad]},
                           {"series", want.coeff[bad].get_str()}});
    }
    Outcome o;
    o.witness = json{{"max_degree", N}, {"betti", size_array(betti)}};
    o.text = li_label(ell, i) + " betti matches the free series to " +
             std::to_string(N);
    return o;
}

Outcome model_basis_check(const std::string& model, const std::string& family,
                          int ell, int i, int N) {
    std::vector<std::size_t> betti;
    std::size_t fam_size = 0;
    for (long qv : {1L, 3L}) {
        CdgaSpec spec = catalog_cdga(model, ell, i, rat(qv));
        auto table = cohomology(spec, N);
        auto fam = catalog_basis_family(family, spec, N);
        fam_size = fam.size();
        auto bc = verify_claimed_basis(spec, table, fam);
        if (!bc.ok) {
            json fails = json::array();
            for (const auto& f : bc.failures) fails.push_back(f);
            return failed("q=" + std::to_string(qv) + ": " + bc.failures.front(),
                          json{{"q", qv}, {"failures", fails}});
        }
        betti = table.betti_numbers();
    }
    Outcome o;
    o.witness = json{{"max_degree", N},
                     {"family_size", fam_size},
                     {"betti", size_array(betti)}};
    o.text = li_label(ell, i) + " family of " + std::to_string(fam_size) +
             " is a basis to degree " + std::to_string(N) + " (q=1,3)";
    return o;
}

// one cohomology relation: u is exact and the claimed primitive hits it
Outcome relation_items_check(
    const CdgaSpec& spec, const CohomologyTable& table,
    const std::vector<std::pair<std::string, std::pair<GcaElement, GcaElement>>>&
        items,
    long qv) {
    for (const auto& [label, pair] : items) {
        const auto& [u, primitive] = pair;
        if (!(extend_differential(spec, primitive) == u)) {
            return failed("q=" + std::to_string(qv) + ": primitive for " +
                              label + " does not differentiate to it",
                          json{{"q", qv}, {"relation", label}});
        }
        auto cm = class_membership(spec, table, u);
        if (cm.status != ClassMembership::Status::exact) {
            return failed("q=" + std::to_string(qv) + ": " + label +
                              " is not exact",
                          json{{"q", qv}, {"relation", label}});
        }
    }
    return Outcome{};
}

Outcome relations_51(int ell, int i) {
    int N = 4 * ell + 2 * i + 2;
    for (long qv : {1L, 3L}) {
        CdgaSpec spec = catalog_cdga("thm-5.1-model", ell, i, rat(qv));
        auto table = cohomology(spec, N);
        GcaElement a = spec.element("a"), b = spec.element("b");
        GcaElement e = spec.element("e"), f = spec.element("f");
        GcaElement g = spec.element("g"), h = spec.element("h");
        std::vector<std::pair<std::string, std::pair<GcaElement, GcaElement>>>
            items;
        items.emplace_back("a^2", std::pair(gca_product(a, a), e));
        items.emplace_back("b^2", std::pair(gca_product(b, b), f));
        items.emplace_back("b*g",
                           std::pair(gca_product(b, g), rat(1, qv) * h));
        Outcome bad = relation_items_check(spec, table, items, qv);
        if (bad.status != CheckStatus::pass) return bad;
    }
    Outcome o;
    o.witness = json{{"relations", json::array({"a^2", "b^2", "b*g"})},
                     {"primitives", json::array({"e", "f", "(1/q)*h"})}};
    o.text = li_label(ell, i) + " a^2 = d(e), b^2 = d(f), b*g = d(h/q) (q=1,3)";
    return o;
}

Outcome relations_63(int ell, int i) {
    int N = 4 * ell + 2 * i + 2;
    for (long qv : {1L, 3L}) {
        CdgaSpec spec = catalog_cdga("thm-6.3-model", ell, i, rat(qv));
        auto table = cohomology(spec, N);
        GcaElement d = spec.element("d"), e = spec.element("e");
        GcaElement g = spec.element("g"), h = spec.element("h");
        std::vector<std::pair<std::string, std::pair<GcaElement, GcaElement>>>
            items;
        items.emplace_back("d^2", std::pair(gca_product(d, d), e));
        items.emplace_back("d*g",
                           std::pair(gca_product(d, g), rat(-1, qv) * h));
        Outcome bad = relation_items_check(spec, table, items, qv);
        if (bad.status != CheckStatus::pass) return bad;
    }
    Outcome o;
    o.witness = json{{"relations", json::array({"d^2", "d*g"})},
                     {"primitives", json::array({"e", "-(1/q)*h"})}};
    o.text = li_label(ell, i) + " d^2 = d(e), d*g = d(-h/q) (q=1,3)";
    return o;
}

Outcome q_invariance_check(const std::string& model, int ell, int i, int N) {
    CdgaSpec s1 = catalog_cdga(model, ell, i, rat(1));
    CdgaSpec s3 = catalog_cdga(model, ell, i, rat(3));
    auto b1 = cohomology(s1, N).betti_numbers();
    auto b3 = cohomology(s3, N).betti_numbers();
    if (b1 != b3) {
        int d = 0;
        while (b1[d] == b3[d]) ++d;
        return failed(li_label(ell, i) + " betti differ at degree " +
                          std::to_string(d),
                      json{{"degree", d}, {"q1", b1[d]}, {"q3", b3[d]}});
    }
    Outcome o;
    o.witness = json{{"max_degree", N}, {"betti", size_array(b1)}};
    o.text = li_label(ell, i) + " betti(q=1) == betti(q=3) to degree " +
             std::to_string(N);
    return o;
}

Outcome decomposition_run(PresentationKey key, int ell, Regime regime, int m,
                          int N) {
    auto pres = catalog_presentation(key, ell, regime);
    int reldeg = pres.relation.degree();
    json base = json{{"m", m}, {"relation_degree", reldeg}, {"to_degree", N}};
    if (reldeg != 2 * (m + 1)) {
        return failed("relation degree " + std::to_string(reldeg) +
                          " does not match m = " + std::to_string(m),
                      base);
    }
    auto lhs = series_quotient_principal(ring_series(*pres.ring), reldeg);
    RationalGF plane =
        gf_mul(make_gf({1}, {1, 0, -1}), make_gf({1}, {1, 0, -1}));
    std::vector<std::pair<int, RationalGF>> summands;
    for (int j = 0; j <= m; ++j) summands.emplace_back(2 * j, plane);
    auto dr = decomposition_check(lhs, summands, N);
    if (!dr.ok) {
        base["degree"] = dr.first_mismatch;
        base["lhs"] = dr.lhs_value.get_str();
        base["rhs"] = dr.rhs_value.get_str();
        return failed("mismatch at degree " + std::to_string(dr.first_mismatch),
                      base);
    }
    Outcome o;
    o.witness = base;
    o.text = "m=" + std::to_string(m) + ", sum of " + std::to_string(m + 1) +
             " shifted planes to degree " + std::to_string(N);
    return o;
}

Outcome ranks_run(const RingPresentation& pres, int N) {
    auto series =
        series_quotient_principal(ring_series(*pres.ring), pres.relation.degree());
    auto dims = quotient_dims(pres, N);
    auto want = expand(series, N);
    int bad = mismatch_at(want, dims);
    if (bad >= 0) {
        return failed("rank mismatch at degree " + std::to_string(bad),
                      json{{"degree", bad},
                           {"rank", dims[bad]},
                           {"series", want.coeff[bad].get_str()}});
    }
    Outcome o;
    o.witness = json{{"to_degree", N}, {"dims", size_array(dims)}};
    o.text = "normal-form ranks match the series to degree " + std::to_string(N);
    return o;
}

Outcome split_blowdown_check(int ell, bool perturb) {
    auto src = catalog_presentation(PresentationKey::split_blowup, ell,
                                    Regime::below_critical);
    if (perturb) {
        ExpVec e(src.ring->size(), 0);
        e[src.ring->index_of("x")] = 2 * ell + 1;
        src.relation += Poly::monomial(src.ring, e, rat(1));
    }
    auto tgt = catalog_presentation(PresentationKey::split_blowup, ell,
                                    Regime::at_or_above_critical);
    std::vector<Poly> images;
    for (const auto& g : src.ring->gens) {
        images.push_back(Poly::generator(tgt.ring, g.name));
    }
    GradedRingMap map(src, tgt, images);
    Poly cert = well_defined_check(map);  // throws when perturbed
    Poly expected = Poly::generator(tgt.ring, "z") -
                    rat(ell) * rat(ell) * Poly::generator(tgt.ring, "x") -
                    rat(ell) * Poly::generator(tgt.ring, "y");
    if (!(cert == expected)) {
        return failed("certificate " + cert.str() + " does not match " +
                          expected.str(),
                      json{{"certificate", cert.str()},
                           {"expected", expected.str()}});
    }
    Outcome o;
    o.witness = json{{"certificate", cert.str()}};
    o.text = "certificate " + cert.str();
    return o;
}

Outcome twisted_blowdown_run(int ell) {
    auto tb = twisted_blowdown_check(ell);
    Rat want_scalar = rat(1);
    for (int j = 0; j <= ell; ++j) want_scalar *= rat(-1, 2);
    int k = ell + 1;
    const RingPtr& ring = tb.factor.ring();
    Poly want_factor = Poly::generator(ring, "z") -
                       rat(k) * rat(k) * Poly::generator(ring, "x") +
                       rat(k) * Poly::generator(ring, "y");
    json w = json{{"scalar", rat_str(tb.scalar)}, {"factor", tb.factor.str()}};
    if (tb.scalar != want_scalar || !(tb.factor == want_factor)) {
        w["expected_scalar"] = rat_str(want_scalar);
        w["expected_factor"] = want_factor.str();
        return failed("blow-down identity off: scalar " + rat_str(tb.scalar) +
                          ", factor " + tb.factor.str(),
                      w);
    }
    Outcome o;
    o.witness = w;
    o.text = "scalar " + rat_str(tb.scalar) + ", factor " + tb.factor.str();
    return o;
}

Outcome square_report_run(const SquareReport& rep, std::size_t want_items,
                          const std::string& what) {
    json fails = json::array();
    for (const auto& item : rep.items) {
        if (!item.ok) fails.push_back(item.label);
    }
    json w = json{{"items", rep.items.size()}, {"failures", fails}};
    if (!rep.all_ok() || rep.items.size() != want_items) {
        return failed(std::to_string(rep.failures()) + " of " +
                          std::to_string(rep.items.size()) + " " + what +
                          " fail",
                      w);
    }
    Outcome o;
    o.witness = w;
    o.text = std::to_string(rep.items.size()) + " " + what + " hold (k <= 4)";
    return o;
}

Outcome kernels_check(const std::vector<FieldSpec>& fields) {
    json jk = json::array();
    RingPtr source;
    for (int n = 0; n <= 8; ++n) {
        GradedRingMap psi = torus_map(n);
        source = psi.source.ring;
        auto ker = kernel_degree2(psi);
        if (ker.size() != 1) {
            return failed("n=" + std::to_string(n) + ": kernel dimension " +
                              std::to_string(ker.size()),
                          json{{"n", n}});
        }
        int k = (n + 1) / 2;
        Poly want = Poly::generator(source, "z") -
                    rat(k) * rat(k) * Poly::generator(source, "x") +
                    rat(n % 2 == 1 ? k : -k) * Poly::generator(source, "y");
        if (!(ker[0] == want)) {
            return failed("n=" + std::to_string(n) + ": kernel " +
                              ker[0].str() + " does not match " + want.str(),
                          json{{"n", n}, {"kernel", ker[0].str()}});
        }
        jk.push_back(ker[0].str());
    }
    // the kernels of the first three even restrictions pin down degree 2
    auto basis = monomials_of_degree(*source, 2);
    std::vector<std::vector<Rat>> rows;
    for (int n : {2, 4, 6}) {
        auto ker = kernel_degree2(torus_map(n));
        std::vector<Rat> row(basis.size(), rat(0));
        for (const auto& [e, c] : ker[0].terms()) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (basis[j] == e) row[j] = c;
            }
        }
        rows.push_back(std::move(row));
    }
    Matrix m = Matrix::from_rows(rows);
    json checked = json::array();
    std::vector<FieldSpec> stack_fields = {FieldSpec::rationals()};
    for (const auto& f : fields) {
        if (!f.is_rationals() && f.p != 2) stack_fields.push_back(f);
    }
    for (const auto& f : stack_fields) {
        checked.push_back(f.name());
        if (rank(m, f) != 3) {
            return failed("stacked kernels drop rank over " + f.name(),
                          json{{"field", f.name()}, {"rank", rank(m, f)}});
        }
    }
    Outcome o;
    o.witness =
        json{{"kernels", jk}, {"stacked_rank", 3}, {"stacked_fields", checked}};
    o.text = "kernels match for n <= 8, stacked rank 3";
    return o;
}

Outcome localization_check(int n) {
    auto t = weight_table(n);
    auto idx = atiyah_bott_index(t);  // throws if a denominator survives
    auto ch = character_negative_part(idx, n);  // throws unless n terms
    json w = json{{"n", n},
                  {"character", ch.str()},
                  {"terms", ch.term_count()}};
    if (!(ch == character_closed_form(n))) {
        w["closed_form"] = character_closed_form(n).str();
        return failed("character differs from the closed form", w);
    }
    Poly e = euler_class_from_character(ch, euler_form_basis(n));
    Poly want = euler_closed_form(n);
    w["euler"] = e.str();
    if (!(e == want || e == -want)) {
        w["closed_form"] = want.str();
        return failed("euler class differs from the stated product", w);
    }
    Outcome o;
    o.witness = w;
    o.text = "character " + ch.str() + ", euler " + e.str();
    return o;
}

Outcome series_vs_model_check(const std::string& series_name, int N) {
    CdgaSpec spec = catalog_cdga("thm-5.1-model", 1, 0, rat(1));
    auto betti = cohomology(spec, N).betti_numbers();
    auto want = expand(catalog_series(series_name, 1, 0), N);
    int bad = mismatch_at(want, betti);
    if (bad >= 0) {
        return failed("first mismatch at degree " + std::to_string(bad) +
                          ": model " + std::to_string(betti[bad]) +
                          ", series " + want.coeff[bad].get_str(),
                      json{{"degree", bad},
                           {"model", betti[bad]},
                           {"series", want.coeff[bad].get_str()}});
    }
    Outcome o;
    o.witness = json{{"to_degree", N}, {"betti", size_array(betti)}};
    o.text = "series matches the model betti to degree " + std::to_string(N);
    return o;
}

Outcome word_counts_check(int N) {
    auto want = expand(catalog_series("cor-7.5-tensor-quotient", 1, 0), N);
    std::vector<ZInt> all(N + 1, ZInt(0)), good(N + 1, ZInt(0));
    all[0] = 1;
    good[0] = 1;
    for (int d = 1; d <= N; ++d) {
        for (int wgt : {2, 3, 4}) {
            if (d < wgt) continue;
            all[d] += all[d - wgt];
            if (wgt != 2) good[d] += all[d - wgt];
        }
    }
    json counts = json::array();
    for (int d = 0; d <= N; ++d) {
        counts.push_back(good[d].get_str());
        if (good[d] != want.coeff[d]) {
            return failed("word count differs at degree " + std::to_string(d),
                          json{{"degree", d},
                               {"words", good[d].get_str()},
                               {"series", want.coeff[d].get_str()}});
        }
    }
    Outcome o;
    o.witness = json{{"to_degree", N}, {"counts", counts}};
    o.text = "words in letters 2,3,4 not ending in 2 match to degree " +
             std::to_string(N);
    return o;
}

Outcome z2_dominance_check(int N) {
    RationalGF tq = catalog_series("cor-7.5-tensor-quotient", 1, 0);
    RationalGF sq = make_gf({1, 0, 1}, {1});
    auto z2 = expand(gf_mul(gf_mul(sq, sq), tq), N);
    CdgaSpec spec = catalog_cdga("thm-5.1-model", 1, 0, rat(1));
    auto betti = cohomology(spec, N).betti_numbers();
    json jz = json::array();
    for (int d = 0; d <= N; ++d) {
        jz.push_back(z2.coeff[d].get_str());
        if (z2.coeff[d] < ZInt(static_cast<unsigned long>(betti[d]))) {
            return failed("prime-two dimension drops below betti at degree " +
                              std::to_string(d),
                          json{{"degree", d},
                               {"z2", z2.coeff[d].get_str()},
                               {"betti", betti[d]}});
        }
    }
    Outcome o;
    o.witness = json{{"to_degree", N},
                     {"z2_dims", jz},
                     {"betti", size_array(betti)}};
    o.text = "prime-two dimensions dominate the betti numbers to degree " +
             std::to_string(N);
    return o;
}

// ---- suite assembly ----

void validate(const SuiteConfig& cfg) {
    if (cfg.ell_min < 1 || cfg.ell_max < cfg.ell_min) {
        throw std::invalid_argument("suite: ell range must satisfy 1 <= min <= max");
    }
    if (cfg.max_degree < 2 * (4 * cfg.ell_max + 2)) {
        throw std::invalid_argument(
            "suite: max_degree must be at least 2*(4*ell_max + 2) = " +
            std::to_string(2 * (4 * cfg.ell_max + 2)));
    }
    if (cfg.fields.empty()) {
        throw std::invalid_argument("suite: field list is empty");
    }
}

std::vector<CheckDef> build_checks(const SuiteConfig& cfg) {
    std::vector<CheckDef> defs;
    bool want_split = cfg.surface_case != CaseSel::twisted;
    bool want_twisted = cfg.surface_case != CaseSel::split;
    bool want_crit = cfg.regime != RegimeSel::below_critical;
    bool want_subcrit = cfg.regime != RegimeSel::at_or_above_critical;
    std::vector<int> is;
    if (want_split) is.push_back(0);
    if (want_twisted) is.push_back(1);
    int n24 = std::min(24, cfg.max_degree);

    for (int ell = cfg.ell_min; ell <= cfg.ell_max; ++ell) {
        std::string l = "l" + std::to_string(ell);

        if (want_split) {
            for (const auto& f : cfg.fields) {
                defs.push_back({"lemma-5.4-tor-" + l + "-" + field_tag(f),
                                "Lemma 5.4",
                                {},
                                [ell, f] { return tor_check(ell, f); }});
            }
            defs.push_back({"lemma-5.4-base-ranks-" + l,
                            "Lemma 5.4 proof",
                            {"split-base"},
                            [ell, n24] {
                                return ranks_run(
                                    catalog_presentation(
                                        PresentationKey::split_base, ell),
                                    n24);
                            }});
            struct RegimeRow {
                bool on;
                Regime regime;
                const char* tag;
                int m;
            };
            RegimeRow rows[] = {
                {want_crit, Regime::at_or_above_critical, "crit", 2 * ell - 1},
                {want_subcrit, Regime::below_critical, "subcrit", 2 * ell},
            };
            for (const auto& row : rows) {
                if (!row.on) continue;
                defs.push_back(
                    {"thm-b.4-decomposition-split-" + l + "-" + row.tag,
                     "Theorem B.4",
                     {"split-blowup"},
                     [ell, row, N = cfg.max_degree] {
                         return decomposition_run(PresentationKey::split_blowup,
                                                  ell, row.regime, row.m, N);
                     }});
                defs.push_back(
                    {"thm-b.8-ranks-split-" + l + "-" + row.tag,
                     "Theorem B.8",
                     {"split-blowup"},
                     [ell, row, n24] {
                         return ranks_run(
                             catalog_presentation(PresentationKey::split_blowup,
                                                  ell, row.regime),
                             n24);
                     }});
            }
            defs.push_back({"thm-b.8-blowdown-" + l,
                            "Theorem B.8 proof",
                            {"thm-b.8-blowdown", "split-blowup"},
                            [ell, perturb = cfg.perturb_blowdown] {
                                return split_blowdown_check(ell, perturb);
                            }});
        }

        if (want_twisted) {
            defs.push_back({"remark-5.5-base-ranks-" + l,
                            "Remark 5.5",
                            {"twisted-base"},
                            [ell, n24] {
                                return ranks_run(
                                    catalog_presentation(
                                        PresentationKey::twisted_base, ell),
                                    n24);
                            }});
            if (want_crit) {
                defs.push_back(
                    {"thm-b.4-decomposition-twisted-" + l,
                     "Theorem B.4",
                     {"twisted-blowup"},
                     [ell, N = cfg.max_degree] {
                         return decomposition_run(
                             PresentationKey::twisted_blowup, ell,
                             Regime::at_or_above_critical, 2 * ell, N);
                     }});
                defs.push_back(
                    {"remark-5.5-ranks-twisted-" + l,
                     "Remark 5.5",
                     {"twisted-blowup"},
                     [ell, n24] {
                         return ranks_run(
                             catalog_presentation(
                                 PresentationKey::twisted_blowup, ell),
                             n24);
                     }});
            }
            defs.push_back({"remark-5.5-blowdown-l" + std::to_string(ell - 1),
                            "Remark 5.5",
                            {"remark-5.5-blowdown", "twisted-base",
                             "twisted-blowup"},
                            [ellp = ell - 1] {
                                return twisted_blowdown_run(ellp);
                            }});
        }

        for (int i : is) {
            std::string li = l + "-i" + std::to_string(i);
            int nfree = std::min(20, cfg.max_degree);
            int nmodel = std::min(4 * (4 * ell + 2 * i), cfg.max_degree);
            defs.push_back({"sec-4-symp-model-" + li,
                            "Section 4",
                            {"sec-4-symp-model"},
                            [ell, i, nfree] {
                                return free_model_check("sec-4-symp-model", ell,
                                                        i, nfree);
                            }});
            defs.push_back({"sec-4-symp-blowup-model-" + li,
                            "Section 4",
                            {"sec-4-symp-blowup-model"},
                            [ell, i, nfree] {
                                return free_model_check(
                                    "sec-4-symp-blowup-model", ell, i, nfree);
                            }});
            defs.push_back({"thm-5.1-basis-" + li,
                            "Theorem 5.1, Corollary 7.1",
                            {"thm-5.1-model", "cor-7.1-family"},
                            [ell, i, nmodel] {
                                return model_basis_check("thm-5.1-model",
                                                         "cor-7.1-family", ell,
                                                         i, nmodel);
                            }});
            defs.push_back({"cor-7.1-relations-" + li,
                            "Corollary 7.1",
                            {"thm-5.1-model"},
                            [ell, i] { return relations_51(ell, i); }});
            defs.push_back({"thm-5.1-q-invariance-" + li,
                            "Theorem 5.1",
                            {"thm-5.1-model"},
                            [ell, i, nmodel] {
                                return q_invariance_check("thm-5.1-model", ell,
                                                          i, nmodel);
                            }});
            defs.push_back({"thm-6.3-basis-" + li,
                            "Theorem 6.3, Corollary 7.2",
                            {"thm-6.3-model", "cor-7.2-family"},
                            [ell, i, nmodel] {
                                return model_basis_check("thm-6.3-model",
                                                         "cor-7.2-family", ell,
                                                         i, nmodel);
                            }});
            defs.push_back({"cor-7.2-relations-" + li,
                            "Corollary 7.2",
                            {"thm-6.3-model"},
                            [ell, i] { return relations_63(ell, i); }});
            defs.push_back({"thm-6.3-q-invariance-" + li,
                            "Theorem 6.3",
                            {"thm-6.3-model"},
                            [ell, i, nmodel] {
                                return q_invariance_check("thm-6.3-model", ell,
                                                          i, nmodel);
                            }});
        }
    }

    for (int n = 1; n <= 2 * cfg.ell_max; ++n) {
        defs.push_back({"cor-b.2-sphere-quotient-n" + std::to_string(n),
                        "Corollary B.2",
                        {"cor-b.2-sphere-quotient"},
                        [n, n24] {
                            return ranks_run(catalog_sphere_quotient(n), n24);
                        }});
    }

    defs.push_back({"thm-b.9-square-even",
                    "Theorem B.9",
                    {"thm-b.9-map"},
                    [] {
                        return square_report_run(
                            commuting_square_check(SquareParity::even, 4), 12,
                            "even blow-down squares");
                    }});
    defs.push_back({"thm-b.11-square-odd",
                    "Theorem B.11",
                    {"thm-b.11-map"},
                    [] {
                        return square_report_run(
                            commuting_square_check(SquareParity::odd, 4), 12,
                            "odd blow-down squares");
                    }});
    defs.push_back({"lemma-b.5-closed-forms",
                    "Lemma B.5, Proposition B.6",
                    {"cor-b.7-torus-maps"},
                    [] {
                        return square_report_run(torus_relation_suite(4), 87,
                                                 "torus identities");
                    }});
    defs.push_back({"cor-b.7-kernels",
                    "Corollary B.7",
                    {"cor-b.7-torus-maps"},
                    [fields = cfg.fields] { return kernels_check(fields); }});

    for (int n = 1; n <= 6; ++n) {
        const char* entry =
            n % 2 == 0 ? "prop-b.1-weights-even" : "prop-b.1-weights-odd";
        defs.push_back({"prop-b.1-localization-n" + std::to_string(n),
                        "Proposition B.1",
                        {entry},
                        [n] { return localization_check(n); }});
    }

    if (want_split && cfg.ell_min <= 1) {
        int n16 = std::min(16, cfg.max_degree);
        defs.push_back({"cor-7.4-zp-series",
                        "Corollary 7.4",
                        {"cor-7.4-zp-series", "thm-5.1-model"},
                        [n24] {
                            return series_vs_model_check("cor-7.4-zp-series",
                                                         n24);
                        }});
        defs.push_back({"thm-3.1-fiber-series-l1-i0",
                        "Theorem 3.1",
                        {"thm-3.1-fiber-series", "thm-5.1-model"},
                        [n24] {
                            return series_vs_model_check("thm-3.1-fiber-series",
                                                         n24);
                        }});
        defs.push_back({"cor-7.5-tensor-quotient",
                        "Corollary 7.5",
                        {"cor-7.5-tensor-quotient"},
                        [n16] { return word_counts_check(n16); }});
        defs.push_back({"cor-7.5-z2-dominance",
                        "Corollary 7.5",
                        {"cor-7.5-tensor-quotient", "thm-5.1-model"},
                        [n16] { return z2_dominance_check(n16); }});
    }

    std::sort(defs.begin(), defs.end(),
              [](const CheckDef& a, const CheckDef& b) { return a.id < b.id; });
    for (std::size_t j = 1; j < defs.size(); ++j) {
        if (defs[j].id == defs[j - 1].id) {
            throw std::logic_error("suite: duplicate check id " + defs[j].id);
        }
    }
    return defs;
}

void apply_selection(std::vector<CheckDef>& defs,
                     const std::vector<std::string>& selection) {
    auto matches = [](const CheckDef& def, const std::string& tok) {
        return def.id == tok || def.id.starts_with(tok + "-");
    };
    for (const auto& tok : selection) {
        bool hit = false;
        for (const auto& def : defs) {
            if (matches(def, tok)) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            throw std::invalid_argument("suite: unknown check selector '" +
                                        tok + "'");
        }
    }
    std::erase_if(defs, [&](const CheckDef& def) {
        return std::none_of(selection.begin(), selection.end(),
                            [&](const std::string& tok) {
                                return matches(def, tok);
                            });
    });
}

std::string status_word(CheckStatus s, bool upper) {
    switch (s) {
        case CheckStatus::pass:
            return upper ? "PASS" : "pass";
        case CheckStatus::fail:
            return upper ? "FAIL" : "fail";
        case CheckStatus::skip:
            return upper ? "SKIP" : "skip";
    }
    return "";
}

json config_json(const SuiteConfig& cfg) {
    json j;
    switch (cfg.surface_case) {
        case CaseSel::split:
            j["case"] = "split";
            break;
        case CaseSel::twisted:
            j["case"] = "twisted";
            break;
        case CaseSel::both:
            j["case"] = "both";
            break;
    }
    j["ell"] = json::array({cfg.ell_min, cfg.ell_max});
    switch (cfg.regime) {
        case RegimeSel::at_or_above_critical:
            j["regime"] = "crit";
            break;
        case RegimeSel::below_critical:
            j["regime"] = "subcrit";
            break;
        case RegimeSel::both:
            j["regime"] = "both";
            break;
    }
    j["max_degree"] = cfg.max_degree;
    json f = json::array();
    for (const auto& fs : cfg.fields) f.push_back(fs.name());
    j["fields"] = f;
    if (cfg.selection) {
        json sel = json::array();
        for (const auto& tok : *cfg.selection) sel.push_back(tok);
        j["checks"] = sel;
    } else {
        j["checks"] = "all";
    }
    j["format"] = cfg.format == ReportFormat::text ? "text" : "json";
    j["timings"] = cfg.timings;
    j["perturb_blowdown"] = cfg.perturb_blowdown;
    return j;
}

}  // namespace

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
    validate(cfg);
    std::vector<CheckDef> defs = build_checks(cfg);
    if (cfg.selection) apply_selection(defs, *cfg.selection);

    std::vector<CheckReport> reports;
    std::set<std::string> exercised;
    for (const auto& def : defs) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = def.run();
        } catch (const std::exception& ex) {
            o.status = CheckStatus::fail;
            o.text = ex.what();
            o.witness = json{{"error", ex.what()}};
        }
        long ms = 0;
        if (cfg.timings) {
            ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
        }
        for (const auto& e : def.entries) exercised.insert(e);
        reports.push_back({def.id, def.paper_ref, o.status, o.text,
                           o.witness.dump(), ms});
    }

    if (!cfg.selection) {
        const auto& cat = paper_catalog();
        json missing = json::array();
        std::size_t have = 0;
        for (const auto& entry : cat) {
            if (exercised.count(entry.name)) {
                ++have;
            } else {
                missing.push_back(entry.name);
            }
        }
        bool restricted = cfg.surface_case != CaseSel::both ||
                          cfg.regime != RegimeSel::both || cfg.ell_min > 1;
        CheckReport cov;
        cov.id = "catalog-coverage";
        cov.paper_ref = "entire catalog";
        cov.witness_json = json{{"exercised", have},
                                {"total", cat.size()},
                                {"missing", missing}}
                               .dump();
        std::string counts = std::to_string(have) + " of " +
                             std::to_string(cat.size()) +
                             " catalog entries exercised";
        if (missing.empty()) {
            cov.status = CheckStatus::pass;
            cov.witness_text = counts;
        } else if (restricted) {
            cov.status = CheckStatus::skip;
            cov.witness_text = counts + " (restricted config)";
        } else {
            cov.status = CheckStatus::fail;
            cov.witness_text = counts;
        }
        reports.push_back(std::move(cov));
    }

    std::sort(reports.begin(), reports.end(),
              [](const CheckReport& a, const CheckReport& b) {
                  return a.id < b.id;
              });
    return reports;
}

bool all_pass(const std::vector<CheckReport>& reports) {
    return std::none_of(reports.begin(), reports.end(),
                        [](const CheckReport& r) {
                            return r.status == CheckStatus::fail;
                        });
}

void emit_report(const std::vector<CheckReport>& reports,
                 const SuiteConfig& cfg, std::ostream& out) {
    if (cfg.format == ReportFormat::text) {
        for (const auto& r : reports) {
            out << status_word(r.status, true) << "  " << r.id << "  "
                << r.witness_text;
            if (cfg.timings) out << "  [" << r.elapsed_ms << "ms]";
            out << "\n";
        }
        return;
    }
    json doc;
    doc["suite"] = "exalg";
    doc["config"] = config_json(cfg);
    json checks = json::array();
    for (const auto& r : reports) {
        checks.push_back(json{{"id", r.id},
                              {"paper_ref", r.paper_ref},
                              {"status", status_word(r.status, false)},
                              {"witness", json::parse(r.witness_json)},
                              {"elapsed_ms", r.elapsed_ms}});
    }
    doc["checks"] = checks;
    out << doc.dump(2) << "\n";
}

}  // namespace exalg
