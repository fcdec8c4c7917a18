#include "exalg/ringmaps.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "exalg/matrix.hpp"

namespace exalg {

namespace {

RingPtr blowup_ring() {
    return make_ring({{"z", 2}, {"x", 2}, {"y", 2}});
}

RingPtr base_ring() {
    return make_ring({{"T", 2}, {"X", 4}, {"Y", 4}});
}

// z - i^2 x + s i y, the form cutting out the i-th stratum on one side
Poly stratum_form(const RingPtr& r, long i, int s) {
    return Poly::generator(r, "z") - rat(i * i) * Poly::generator(r, "x") +
           rat(s * i) * Poly::generator(r, "y");
}

// Relations enter the catalog as factor lists. Two associate factors would
// silently collapse a power, so reject them.
Poly checked_product(const RingPtr& r, const std::vector<Poly>& factors) {
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i].degree() == factors[j].degree() &&
                divide_exact(factors[i], factors[j]).has_value())
                throw std::logic_error("catalog relation has associate factors");
    Poly prod = Poly::constant(r, rat(1));
    for (const auto& f : factors) prod *= f;
    return prod;
}

std::string ell_tag(int ell) { return "l=" + std::to_string(ell); }

}  // namespace

RingPresentation catalog_presentation(PresentationKey key, int ell,
                                      Regime regime) {
    if (ell < 0)
        throw std::invalid_argument("catalog_presentation: ell is nonnegative");
    bool crit = regime == Regime::at_or_above_critical;
    switch (key) {
        case PresentationKey::split_blowup: {
            if (crit && ell < 1)
                throw std::invalid_argument(
                    "catalog_presentation: the critical split blow-up needs "
                    "ell >= 1");
            auto r = blowup_ring();
            std::vector<Poly> factors = {Poly::generator(r, "z")};
            for (long i = 1; i <= (crit ? ell - 1 : ell); ++i) {
                factors.push_back(stratum_form(r, i, +1));
                factors.push_back(stratum_form(r, i, -1));
            }
            if (crit) factors.push_back(stratum_form(r, ell, +1));
            return {r, checked_product(r, factors),
                    "split blow-up (" + ell_tag(ell) +
                        (crit ? ", critical)" : ", subcritical)")};
        }
        case PresentationKey::split_base: {
            auto r = base_ring();
            Poly T = Poly::generator(r, "T");
            Poly X = Poly::generator(r, "X");
            Poly Y = Poly::generator(r, "Y");
            std::vector<Poly> factors = {T};
            for (long i = 1; i <= ell; ++i)
                factors.push_back(T * T + rat(i * i * i * i) * X -
                                  rat(i * i) * Y);
            return {r, checked_product(r, factors),
                    "split base (" + ell_tag(ell) + ")"};
        }
        case PresentationKey::twisted_blowup: {
            if (!crit)
                throw std::invalid_argument(
                    "catalog_presentation: the twisted blow-up presentation "
                    "only exists at or above the critical capacity");
            auto r = blowup_ring();
            std::vector<Poly> factors = {Poly::generator(r, "z")};
            for (long i = 1; i <= ell; ++i) {
                factors.push_back(stratum_form(r, i, +1));
                factors.push_back(stratum_form(r, i, -1));
            }
            return {r, checked_product(r, factors),
                    "twisted blow-up (" + ell_tag(ell) + ")"};
        }
        case PresentationKey::twisted_base: {
            auto r = base_ring();
            Poly T = Poly::generator(r, "T");
            Poly X = Poly::generator(r, "X");
            Poly Y = Poly::generator(r, "Y");
            std::vector<Poly> factors;
            for (long i = 0; i <= ell; ++i) {
                long q = 2 * i + 1;
                factors.push_back(rat(q * q) *
                                      (rat(i * (i + 1), 2) * (X + Y) - Y) -
                                  rat(i * i * (i + 1) * (i + 1), 2) * (T * T));
            }
            return {r, checked_product(r, factors),
                    "twisted base (" + ell_tag(ell) + ")"};
        }
    }
    throw std::invalid_argument("catalog_presentation: unknown key");
}

GradedRingMap::GradedRingMap(RingPresentation src, RingPresentation tgt,
                             std::vector<Poly> img)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(img)) {
    if (images.size() != source.ring->size())
        throw std::invalid_argument(
            "ring map needs one image per source generator");
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!(*images[i].ring() == *target.ring))
            throw std::invalid_argument("ring map image of " +
                                        source.ring->gens[i].name +
                                        " lives in the wrong ring");
        if (images[i].is_zero()) continue;
        if (!images[i].is_homogeneous() ||
            images[i].degree() != source.ring->gens[i].degree)
            throw std::invalid_argument("ring map image of " +
                                        source.ring->gens[i].name +
                                        " has the wrong degree");
    }
}

Poly map_image(const GradedRingMap& m, const Poly& f) {
    return substitute(f, m.target.ring, m.images);
}

Poly well_defined_check(GradedRingMap& m) {
    if (m.source.relation.is_zero()) {
        m.certificate = Poly(m.target.ring);
        return *m.certificate;
    }
    Poly pushed = map_image(m, m.source.relation);
    if (m.target.relation.is_zero()) {
        if (!pushed.is_zero())
            throw std::logic_error(
                "well_defined_check: " + m.source.label + " -> " +
                m.target.label +
                ": the source relation survives in a free target");
        m.certificate = Poly(m.target.ring);
        return *m.certificate;
    }
    auto q = divide_exact(pushed, m.target.relation);
    if (!q)
        throw std::logic_error(
            "well_defined_check: " + m.source.label + " -> " + m.target.label +
            ": the pushed relation is not a multiple of the target relation");
    m.certificate = *q;
    return *q;
}

TwistedBlowdown twisted_blowdown_check(int ell) {
    auto base = catalog_presentation(PresentationKey::twisted_base, ell);
    auto bu = catalog_presentation(PresentationKey::twisted_blowup, ell);
    Poly z = Poly::generator(bu.ring, "z");
    Poly x = Poly::generator(bu.ring, "x");
    Poly y = Poly::generator(bu.ring, "y");
    GradedRingMap m(base, bu,
                    {rat(4) * z + rat(2) * y - x,
                     y * (y - x) +
                         rat(1, 2) * (z * (rat(7) * y + rat(7) * z - rat(3) * x)),
                     rat(1, 2) * (z * (y - x + z))});
    Poly cert = well_defined_check(m);
    Rat scalar = cert.leading_term().second;
    Poly factor = cert * (rat(1) / scalar);
    Rat expected_scalar = rat(1);
    for (int i = 0; i <= ell; ++i) expected_scalar *= rat(-1, 2);
    long n = ell + 1;
    Poly expected_factor = stratum_form(bu.ring, n, +1);
    if (scalar != expected_scalar || factor != expected_factor)
        throw std::logic_error(
            "twisted_blowdown_check: the certificate is not the expected "
            "multiple of the next kernel form, got " +
            cert.str());
    return {scalar, factor};
}

GradedRingMap torus_map(int n) {
    if (n < 0) throw std::invalid_argument("torus_map: n is nonnegative");
    auto src = blowup_ring();
    std::string sx = "x" + std::to_string(n), sy = "y" + std::to_string(n);
    auto tgt = make_ring({{sx, 2}, {sy, 2}});
    Poly xn = Poly::generator(tgt, sx), yn = Poly::generator(tgt, sy);
    std::vector<Poly> images;  // of z, x, y in that order
    if (n == 0) {
        images = {Poly(tgt), yn, -xn};
    } else if (n % 2 == 0) {
        long k = n / 2;
        images = {rat(k) * xn, yn, xn - rat(k) * yn};
    } else {
        long k = (n + 1) / 2;
        images = {rat(k) * yn, xn - yn, rat(k) * xn - rat(k + 1) * yn};
    }
    return {RingPresentation(src, Poly(src), "Q[z,x,y]"),
            RingPresentation(tgt, Poly(tgt), "Q[" + sx + "," + sy + "]"),
            std::move(images)};
}

std::vector<Poly> kernel_degree2(const GradedRingMap& m) {
    auto src_basis = monomials_of_degree(*m.source.ring, 2);
    auto tgt_basis = monomials_of_degree(*m.target.ring, 2);
    Matrix mat(tgt_basis.size(), src_basis.size());
    for (std::size_t j = 0; j < src_basis.size(); ++j) {
        Poly img =
            map_image(m, Poly::monomial(m.source.ring, src_basis[j], rat(1)));
        if (!m.target.relation.is_zero())
            img = normal_form(img, m.target.relation);
        for (const auto& [e, c] : img.terms()) {
            auto it = std::find(tgt_basis.begin(), tgt_basis.end(), e);
            if (it == tgt_basis.end())
                throw std::logic_error(
                    "kernel_degree2: image term outside the degree 2 basis");
            mat.at(it - tgt_basis.begin(), j) = c;
        }
    }
    std::vector<Poly> kernel;
    for (const auto& v : nullspace_basis(mat, FieldSpec::rationals())) {
        Poly p(m.source.ring);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) p += Poly::monomial(m.source.ring, src_basis[j], v[j]);
        p *= rat(1) / p.leading_term().second;
        kernel.push_back(p);
    }
    return kernel;
}

bool SquareReport::all_ok() const {
    return std::all_of(items.begin(), items.end(),
                       [](const SquareCheck& c) { return c.ok; });
}

std::size_t SquareReport::failures() const {
    return std::count_if(items.begin(), items.end(),
                         [](const SquareCheck& c) { return !c.ok; });
}

namespace {

// value of a degree 2 class on the circle of weights (a, b) in the n-th torus
Poly circle_image(const RingPtr& sring, int n, const Rat& a, const Rat& b,
                  const std::string& cls) {
    GradedRingMap psi = torus_map(n);
    Poly img = map_image(psi, Poly::generator(psi.source.ring, cls));
    Poly s = Poly::generator(sring, "s");
    return substitute(img, sring, {a * s, b * s});
}

void compare_circles(SquareReport& rep, const RingPtr& sring,
                     const std::string& label, int nl, const Rat& al,
                     const Rat& bl, int nr, const Rat& ar, const Rat& br) {
    for (const char* cls : {"z", "x", "y"}) {
        Poly lhs = circle_image(sring, nl, al, bl, cls);
        Poly rhs = circle_image(sring, nr, ar, br, cls);
        rep.items.push_back({label + ", class " + cls, lhs == rhs, lhs.str(),
                             rhs.str()});
    }
}

}  // namespace

SquareReport torus_relation_suite(int k_max) {
    if (k_max < 1)
        throw std::invalid_argument("torus_relation_suite: k_max is positive");
    auto sring = make_ring({{"s", 2}});
    SquareReport rep;
    auto ks = [](long k) { return std::to_string(k); };
    // each identity matches a circle in one torus with a circle in another
    for (long k = 1; k <= k_max; ++k)
        compare_circles(rep, sring, "identity 1 (k=" + ks(k) + ")", 2 * k,
                        rat(0), rat(1), 0, rat(k), rat(1));
    for (long kp = 1; kp <= k_max; ++kp)
        for (long k = 1; k < kp; ++k)
            compare_circles(rep, sring,
                            "identity 2 (k=" + ks(k) + ", k'=" + ks(kp) + ")",
                            2 * k, rat(kp), rat(-1), 2 * kp, rat(k), rat(-1));
    for (long k = 1; k <= k_max; ++k)
        compare_circles(rep, sring, "identity 3 (k=" + ks(k) + ")", 2 * k,
                        rat(k), rat(1), 2 * k - 1, rat(k + 1), rat(k));
    for (long kp = 1; kp <= k_max; ++kp)
        for (long k = 1; k < kp; ++k)
            compare_circles(rep, sring,
                            "identity 4 (k=" + ks(k) + ", k'=" + ks(kp) + ")",
                            2 * kp - 1, rat(k - 1), rat(k), 2 * k - 1,
                            rat(kp - 1), rat(kp));
    compare_circles(rep, sring, "identity 5", 1, rat(1), rat(0), 0, rat(-1),
                    rat(1));
    // the recursion the identities generate has a closed form; check it
    // against the explicit maps at every stratum
    using Triple = std::tuple<std::string, long, long, long>;
    for (const auto& [cls, a0, b0, a2] :
         {Triple{"z", 0, 0, 1}, Triple{"x", 0, 1, 0}, Triple{"y", -1, 0, 1}}) {
        for (long k = 1; k <= k_max; ++k) {
            auto check = [&, cls = cls](int n, const Rat& a, const Rat& b) {
                GradedRingMap psi = torus_map(n);
                Poly actual =
                    map_image(psi, Poly::generator(psi.source.ring, cls));
                Poly expect = a * Poly::generator(psi.target.ring,
                                                  "x" + std::to_string(n)) +
                              b * Poly::generator(psi.target.ring,
                                                  "y" + std::to_string(n));
                rep.items.push_back({"closed form n=" + std::to_string(n) +
                                         ", class " + cls,
                                     actual == expect, actual.str(),
                                     expect.str()});
            };
            check(2 * k - 1, rat(-k * a0 + b0),
                  rat(k * a2 + (2 * k + 1) * a0 - b0));
            check(2 * k, rat(k * a2 + (k - 1) * a0), rat(k * a0 + b0));
        }
    }
    return rep;
}

SquareReport commuting_square_check(SquareParity parity, int k_max) {
    if (k_max < 1)
        throw std::invalid_argument(
            "commuting_square_check: k_max is positive");
    bool even = parity == SquareParity::even;
    SquareReport rep;
    for (long k = 1; k <= k_max; ++k) {
        int n = even ? 2 * k : 2 * k - 1;
        GradedRingMap psi = torus_map(n);
        const RingPtr& r = psi.source.ring;
        Poly z = Poly::generator(r, "z");
        Poly x = Poly::generator(r, "x");
        Poly y = Poly::generator(r, "y");
        // images of T, X, Y under the blow-down, then under the map to the
        // intermediate rank 2 ring Q[A, X] of the stratum
        std::vector<Poly> istar =
            even ? std::vector<Poly>{z, x * x, y * y + rat(2) * (x * z)}
                 : std::vector<Poly>{
                       rat(4) * z + rat(2) * y - x,
                       y * (y - x) + rat(1, 2) * (z * (rat(7) * y + rat(7) * z -
                                                       rat(3) * x)),
                       rat(1, 2) * (z * (y - x + z))};
        auto kr = make_ring({{"A", 2}, {"X", 4}});
        Poly A = Poly::generator(kr, "A"), XX = Poly::generator(kr, "X");
        std::vector<Poly> psi_k =
            even ? std::vector<Poly>{rat(k) * A, XX, A * A + rat(k * k) * XX}
                 : std::vector<Poly>{rat(2 * k - 1) * A,
                                     rat(k * (k - 1)) * (A * A) +
                                         rat(2 + k - k * k, 2) * XX,
                                     rat(k * (k - 1), 2) * XX};
        Poly xn = Poly::generator(psi.target.ring, "x" + std::to_string(n));
        Poly yn = Poly::generator(psi.target.ring, "y" + std::to_string(n));
        std::vector<Poly> restr = even ? std::vector<Poly>{xn, yn * yn}
                                       : std::vector<Poly>{xn + yn, xn * yn};
        const char* names[] = {"T", "X", "Y"};
        for (int c = 0; c < 3; ++c) {
            Poly lhs = map_image(psi, istar[c]);
            Poly rhs = substitute(psi_k[c], psi.target.ring, restr);
            rep.items.push_back({"n=" + std::to_string(n) + ", class " +
                                     names[c],
                                 lhs == rhs, lhs.str(), rhs.str()});
        }
    }
    return rep;
}

}  // namespace exalg
