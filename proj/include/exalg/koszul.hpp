#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exalg/matrix.hpp"
#include "exalg/poly.hpp"

namespace exalg {

// Koszul-type complex Lambda(alpha,beta,gamma) (x) Q[delta] (x) S over the
// quotient S = Q[z,x,y]/<r_l>, bigraded by external degree (alpha,beta,gamma
// carry -1, delta carries -2) and internal degree (2,4,4 and 4l+2). The
// differential is S-linear, raises external degree by 1, preserves internal
// degree:
//   d(alpha) = z, d(beta) = x^2, d(gamma) = y^2 + 2xz,
//   d(delta) = alpha * prod_{i=1..l} ((z - i^2 x)^2 - i^2 y^2).
// delta is an even polynomial generator without divided powers, so the
// complex is valid only in total degrees < 8l (delta^2 first appears at 8l).
struct KoszulData {
    int ell = 1;
    FieldSpec field = FieldSpec::rationals();
    RingPtr ring;            // generators z,x,y of degree 2, in a chosen order
    Poly relation;           // r_l, leading coefficient 1 under the ring order
    Poly d_alpha, d_beta, d_gamma;
    Poly delta_factor;       // S-coefficient of alpha in d(delta)
    int delta_internal = 0;  // 4l + 2
    int truncation = 0;      // 8l - 1, the last valid total degree

    explicit KoszulData(RingPtr r)
        : ring(std::move(r)),
          relation(ring),
          d_alpha(ring),
          d_beta(ring),
          d_gamma(ring),
          delta_factor(ring) {}
};

// exponents of (alpha, beta, gamma, delta); the first three are 0/1
using ExtExp = std::array<int, 4>;

int ext_degree(const ExtExp& e);
int int_degree(const KoszulData& k, const ExtExp& e);

// element with S-coefficients kept in normal form mod the relation
struct KoszulElement {
    std::map<ExtExp, Poly> terms;
    bool is_zero() const { return terms.empty(); }
};

std::string koszul_str(const KoszulElement& u);

// base_order permutes the variable significance used for normal forms;
// the differential and relation are the same polynomials in any order
KoszulData build_koszul(int ell, FieldSpec field = FieldSpec::rationals(),
                        const std::vector<std::string>& base_order = {"z", "x",
                                                                      "y"});

KoszulElement koszul_d(const KoszulData& k, const KoszulElement& u);

// one internal-degree column of the complex with its differential matrices
struct KoszulColumn {
    int q = 0;
    // external degree -> basis of C^{p,q} as (ext monomial, S monomial)
    std::map<int, std::vector<std::pair<ExtExp, ExpVec>>> basis;
    // external degree -> matrix of d : C^{p,q} -> C^{p+1,q}
    std::map<int, Matrix> d;
};

// assembles the column and verifies d(d(basis element)) = 0 throughout
KoszulColumn koszul_column(const KoszulData& k, int q);

// ranks of Tor^{p,q} for all bidegrees with p + q = total_degree;
// keys are the external degrees p that carry nonzero cochain spaces
std::map<int, std::size_t> tor_ranks(const KoszulData& k, int total_degree);

std::size_t tor_total_rank(const KoszulData& k, int total_degree);

// cycle representatives at one bidegree, reduced modulo coboundaries;
// empty when the rank there is zero
std::vector<KoszulElement> tor_representative(const KoszulData& k,
                                              int total_degree,
                                              int external_degree);

// per-column Euler characteristic: alternating sums of cochain dimensions
// and of Tor ranks over external degree, which must agree
struct EulerCheck {
    long cochain_sum = 0;
    long tor_sum = 0;
    bool ok() const { return cochain_sum == tor_sum; }
};

EulerCheck euler_column_check(const KoszulData& k, int internal_degree);

}  // namespace exalg
