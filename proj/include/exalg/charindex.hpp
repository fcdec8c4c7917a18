#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exalg/poly.hpp"

namespace exalg {

// exponent pair (a, b) of the Laurent monomial x^a y^b
using LExp = std::pair<int, int>;

// Exact Laurent polynomial in the two circle weights x and y.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(LExp e, const Rat& c);

    const std::map<LExp, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(LExp e, const Rat& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
        return a -= b;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly&) const = default;

    // descending lex in (a, b), mirroring the polynomial printer
    std::string str() const;

private:
    std::map<LExp, Rat> terms_;
};

// 1 - x^a y^b; w must not be the unit monomial
LaurentPoly one_minus(LExp w);

// exact quotient f / (1 - x^a y^b), empty if the division leaves a remainder
std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& f, LExp w);

// A Laurent polynomial divided by a product of factors 1 - monomial. The
// localization sums only ever need this factored shape.
struct LaurentFraction {
    LaurentPoly numerator;
    std::vector<LExp> denominator;  // the monomial w of each factor 1 - w

    LaurentFraction(LaurentPoly num, std::vector<LExp> den);
    LaurentPoly reduce() const;  // throws if any division leaves a remainder
};

// The isotropy weights (w_1, w_2) of the blown-up toric action at its five
// fixed points, as Laurent monomial exponents.
struct FixedPointTable {
    int n = 0;
    std::vector<std::pair<LExp, LExp>> points;
};

FixedPointTable weight_table(int n);  // n >= 1, table picked by parity

// the index sum over the fixed points of s1 s2 / ((1-w1)(1-w2)); throws if
// the sum fails to clear its denominators
LaurentPoly atiyah_bott_index(const FixedPointTable& t);

// negated sum of the negative terms of the index; throws unless exactly
// expected_count terms survive
LaurentPoly character_negative_part(const LaurentPoly& index,
                                    std::size_t expected_count);

// degree 2 forms of the two weight variables in Q[x, y]
struct WeightBasis {
    Poly u, v;
};

// (x, y) on the even strata; (x + y, x) on the odd ones, where the character
// is written in ratio form
WeightBasis euler_form_basis(int n);

// product over the character monomials x^a y^b of a*u + b*v, multiplicities
// from the coefficients, normalized to a positive leading coefficient
Poly euler_class_from_character(const LaurentPoly& ch,
                                const WeightBasis& basis);

// the displayed closed forms, for comparison with the computed index
LaurentPoly character_closed_form(int n);
Poly euler_closed_form(int n);

}  // namespace exalg
