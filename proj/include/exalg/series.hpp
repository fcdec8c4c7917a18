#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exalg/field.hpp"
#include "exalg/gca.hpp"

namespace exalg {

using ZInt = mpz_class;
// coefficient of t^k at index k, no trailing zeros
using ZPoly = std::vector<ZInt>;

// Rational generating function num/den in canonical form: gcd(num, den) = 1,
// joint integer content 1, den(0) = 1. Zero is num = {}, den = {1}.
struct RationalGF {
    ZPoly num;
    ZPoly den;
    bool is_zero() const { return num.empty(); }
    std::string str() const;
};

RationalGF make_gf(ZPoly num, ZPoly den);
RationalGF gf_add(const RationalGF& a, const RationalGF& b);
RationalGF gf_mul(const RationalGF& a, const RationalGF& b);
RationalGF gf_shift(const RationalGF& a, int k);  // multiply by t^k
bool gf_equal(const RationalGF& a, const RationalGF& b);

struct TruncatedSeries {
    std::vector<ZInt> coeff;  // c_0..c_N
    int order() const { return static_cast<int>(coeff.size()) - 1; }
    bool operator==(const TruncatedSeries&) const = default;
};

// exact long division to order N; den(0) = 1 is guaranteed by make_gf
TruncatedSeries expand(const RationalGF& gf, int N);

// prod (1+t^d) over odd generators, prod 1/(1-t^d) over even ones
RationalGF series_free_gca(const GcaSignature& sig);

// quotient by one homogeneous nonzerodivisor of the given degree
RationalGF series_quotient_principal(const RationalGF& ring_series,
                                     int relation_degree);

RationalGF series_divided_polynomial(int degree);
RationalGF series_tensor_algebra(const std::vector<int>& degrees);
RationalGF series_tensor_quotient(const std::vector<int>& degrees,
                                  const std::vector<int>& sub_degrees);
RationalGF series_loop_odd_sphere(int sphere_dim);  // odd dimension >= 3
RationalGF series_sphere(int dim);

struct DecompositionResult {
    bool ok = true;
    int first_mismatch = -1;
    ZInt lhs_value = 0;
    ZInt rhs_value = 0;
};

// coefficientwise test of lhs = sum t^shift * summand up to degree N
DecompositionResult decomposition_check(
    const RationalGF& lhs, const std::vector<std::pair<int, RationalGF>>& summands,
    int N);

}  // namespace exalg
