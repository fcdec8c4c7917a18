#include <random>

#include "doctest.h"
#include "exalg/gca.hpp"

using namespace exalg;

namespace {

SigPtr model_sig() {
    // degrees (2,2,3,3,3,4); a,b polynomial, e,f,g exterior, h polynomial
    return make_signature({{"a", 2}, {"b", 2}, {"e", 3}, {"f", 3}, {"g", 3}, {"h", 4}});
}

GcaElement mono(const SigPtr& sig, const GcaExp& e, long num = 1, long den = 1) {
    return GcaElement::monomial(sig, e, rat(num, den));
}

// dimension oracle: coefficient of t^d in prod (1+t^{|odd|}) * prod 1/(1-t^{|even|}),
// computed by direct series multiplication
std::vector<long> free_gca_dims(const GcaSignature& sig, int max_deg) {
    std::vector<long> dims(max_deg + 1, 0);
    dims[0] = 1;
    for (const auto& g : sig.gens) {
        std::vector<long> next(max_deg + 1, 0);
        if (g.odd()) {
            for (int d = 0; d <= max_deg; ++d) {
                next[d] = dims[d] + (d >= g.degree ? dims[d - g.degree] : 0);
            }
        } else {
            for (int d = 0; d <= max_deg; ++d) {
                next[d] = dims[d] + (d >= g.degree ? next[d - g.degree] : 0);
            }
        }
        dims = next;
    }
    return dims;
}

}  // namespace

TEST_CASE("signature validation") {
    CHECK_THROWS_AS(make_signature({{"a", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_signature({{"a", -3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_signature({{"a", 2}, {"a", 3}}), std::invalid_argument);
    auto sig = model_sig();
    CHECK(sig->index_of("g") == 4);
    CHECK(sig->index_of("nope") == -1);
    CHECK(sig->gens[2].odd());
    CHECK_FALSE(sig->gens[5].odd());
}

TEST_CASE("odd generators cannot be squared in a monomial") {
    auto sig = model_sig();
    CHECK_THROWS_AS(mono(sig, {0, 0, 2, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(mono(sig, {1, 0, 0, 0, 3, 0}), std::invalid_argument);
    CHECK_NOTHROW(mono(sig, {3, 0, 1, 0, 0, 2}));
}

TEST_CASE("monomial basis in fixed descending order") {
    auto sig = model_sig();

    auto deg3 = monomial_basis(*sig, 3);
    REQUIRE(deg3.size() == 3);
    CHECK(deg3[0] == GcaExp{0, 0, 1, 0, 0, 0});  // e
    CHECK(deg3[1] == GcaExp{0, 0, 0, 1, 0, 0});  // f
    CHECK(deg3[2] == GcaExp{0, 0, 0, 0, 1, 0});  // g

    auto deg4 = monomial_basis(*sig, 4);
    REQUIRE(deg4.size() == 4);
    CHECK(deg4[0] == GcaExp{2, 0, 0, 0, 0, 0});  // a^2
    CHECK(deg4[1] == GcaExp{1, 1, 0, 0, 0, 0});  // a*b
    CHECK(deg4[2] == GcaExp{0, 2, 0, 0, 0, 0});  // b^2
    CHECK(deg4[3] == GcaExp{0, 0, 0, 0, 0, 1});  // h

    CHECK(monomial_basis(*sig, 0).size() == 1);
    CHECK(monomial_basis(*sig, 1).empty());
    CHECK(monomial_basis(*sig, -2).empty());
}

TEST_CASE("basis sizes match the series oracle") {
    auto sig = model_sig();
    auto dims = free_gca_dims(*sig, 16);
    for (int d = 0; d <= 16; ++d) {
        auto basis = monomial_basis(*sig, d);
        CHECK(basis.size() == static_cast<std::size_t>(dims[d]));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(gca_degree(*sig, basis[i]) == d);
            if (i + 1 < basis.size()) {
                CHECK(gca_greater(*sig, basis[i], basis[i + 1]));
            }
        }
    }
    // all-odd signature for the exterior corner case
    auto ext = make_signature({{"x", 1}, {"y", 1}, {"z", 1}});
    CHECK(monomial_basis(*ext, 0).size() == 1);
    CHECK(monomial_basis(*ext, 1).size() == 3);
    CHECK(monomial_basis(*ext, 2).size() == 3);
    CHECK(monomial_basis(*ext, 3).size() == 1);
    CHECK(monomial_basis(*ext, 4).empty());
}

TEST_CASE("koszul sign on exterior generators") {
    auto sig = model_sig();
    auto e = GcaElement::generator(sig, "e");
    auto f = GcaElement::generator(sig, "f");
    auto g = GcaElement::generator(sig, "g");
    auto a = GcaElement::generator(sig, "a");

    // f*e picks up a sign relative to the canonical monomial e*f
    auto ef = mono(sig, {0, 0, 1, 1, 0, 0});
    CHECK(gca_product(e, f) == ef);
    CHECK(gca_product(f, e) == -ef);
    CHECK(gca_product(e, e).is_zero());
    CHECK(gca_product(gca_product(f, e), g).str() == "-e*f*g");

    // even generators commute with everything
    CHECK(gca_product(a, f) == gca_product(f, a));
    CHECK(gca_product(a, f).str() == "a*f");

    // (e+f)(e-f) = ef - fe - ... = -2ef + e^2 - f^2 = -2ef
    auto p = gca_product(e + f, e - f);
    CHECK(p == mono(sig, {0, 0, 1, 1, 0, 0}, -2));
}

TEST_CASE("product on random monomials is graded commutative and associative") {
    auto sig = make_signature({{"a", 2}, {"u", 1}, {"e", 3}, {"w", 4}, {"v", 5}});
    std::mt19937 rng(421);
    std::uniform_int_distribution<int> evendist(0, 3);
    std::uniform_int_distribution<int> odddist(0, 1);
    auto random_mono = [&]() {
        GcaExp e(sig->size());
        for (std::size_t i = 0; i < sig->size(); ++i) {
            e[i] = sig->gens[i].odd() ? odddist(rng) : evendist(rng);
        }
        std::uniform_int_distribution<long> cdist(-4, 4);
        long c = cdist(rng);
        if (c == 0) c = 1;
        return GcaElement::monomial(sig, e, Rat(c));
    };
    for (int trial = 0; trial < 150; ++trial) {
        auto u = random_mono();
        auto v = random_mono();
        auto w = random_mono();
        auto uv = gca_product(u, v);
        auto vu = gca_product(v, u);
        bool flip = (u.degree() % 2 != 0) && (v.degree() % 2 != 0);
        CHECK(uv == (flip ? -vu : vu));
        CHECK(gca_product(uv, w) == gca_product(u, gca_product(v, w)));
        // distributivity over a sum
        CHECK(gca_product(u + v, w) == gca_product(u, w) + gca_product(v, w));
    }
}

TEST_CASE("element arithmetic and printing") {
    auto sig = model_sig();
    auto a = GcaElement::generator(sig, "a");
    auto b = GcaElement::generator(sig, "b");
    auto zero = GcaElement(sig);
    CHECK(zero.is_zero());
    CHECK(zero.str() == "0");
    CHECK((a + b - a - b).is_zero());
    CHECK((a - b).str() == "a - b");
    CHECK((gca_product(a, a) - gca_product(b, b)).str() == "a^2 - b^2");
    CHECK((rat(1, 2) * a).str() == "1/2*a");
    CHECK((a + b).is_homogeneous());
    CHECK((a + b).degree() == 2);
    auto h = GcaElement::generator(sig, "h");
    CHECK_FALSE((a + h).is_homogeneous());
    CHECK_THROWS_AS((a + h).degree(), std::domain_error);
    CHECK_THROWS_AS(zero.degree(), std::domain_error);
}
