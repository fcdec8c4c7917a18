#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exalg/poly.hpp"

namespace exalg {

// Graded ring presented as a polynomial ring modulo one homogeneous relation;
// a zero relation means the ring is free.
struct RingPresentation {
    RingPtr ring;
    Poly relation;
    std::string label;

    RingPresentation(RingPtr r, Poly rel, std::string lab)
        : ring(std::move(r)), relation(std::move(rel)), label(std::move(lab)) {}
};

enum class PresentationKey {
    split_blowup,
    split_base,
    twisted_blowup,
    twisted_base,
};

enum class Regime { at_or_above_critical, below_critical };

// The catalog relations, built as explicit products of linear or quadratic
// factors (pairwise non-associate, validated here). Base presentations live
// in T, X, Y of degrees 2, 4, 4 and ignore the regime; blow-up presentations
// live in z, x, y of degree 2. The twisted blow-up presentation exists only
// at or above the critical capacity.
RingPresentation catalog_presentation(
    PresentationKey key, int ell,
    Regime regime = Regime::at_or_above_critical);

struct GradedRingMap {
    RingPresentation source, target;
    std::vector<Poly> images;  // per source generator, in the target ring
    std::optional<Poly> certificate;  // set by well_defined_check

    GradedRingMap(RingPresentation src, RingPresentation tgt,
                  std::vector<Poly> img);
};

// image of f under the map, as a raw polynomial in the target ring
Poly map_image(const GradedRingMap& m, const Poly& f);

// The map descends to the quotients exactly when the image of the source
// relation is a multiple of the target relation; returns that quotient and
// stores it on the map. A free source yields the zero certificate.
Poly well_defined_check(GradedRingMap& m);

// the scalar and linear factor multiplying the blow-up relation when the
// twisted base relation is pushed through the blow-down map
struct TwistedBlowdown {
    Rat scalar;
    Poly factor;
};

TwistedBlowdown twisted_blowdown_check(int ell);

// restriction to the torus of the n-th stratum, a map into Q[x_n, y_n]
GradedRingMap torus_map(int n);

// kernel of the induced linear map on degree 2, leading coefficient 1
std::vector<Poly> kernel_degree2(const GradedRingMap& m);

struct SquareCheck {
    std::string label;
    bool ok = false;
    std::string lhs, rhs;
};

struct SquareReport {
    std::vector<SquareCheck> items;
    bool all_ok() const;
    std::size_t failures() const;
};

// the five torus identities, checked on every class in every admissible
// composition with a circle restriction, plus the closed-form coefficient
// recursion against the explicit maps
SquareReport torus_relation_suite(int k_max);

enum class SquareParity { even, odd };

// the blow-down squares: pushing a base class to the n-th torus directly
// agrees with going through the intermediate rank-2 ring of the stratum
SquareReport commuting_square_check(SquareParity parity, int k_max);

}  // namespace exalg
