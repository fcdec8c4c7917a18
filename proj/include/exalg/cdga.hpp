#pragma once

#include <optional>

#include "exalg/gca.hpp"
#include "exalg/matrix.hpp"

namespace exalg {

// Free graded-commutative algebra with a degree +1 differential given on
// generators and extended by the graded Leibniz rule
//   d(u v) = du v + (-1)^{|u|} u dv.
// Construction validates homogeneity of the images and d(d(g)) = 0 for every
// generator, which by Leibniz forces d^2 = 0 everywhere.
class CdgaSpec {
public:
    CdgaSpec(SigPtr sig, std::vector<GcaElement> differential,
             FieldSpec field = FieldSpec::rationals(),
             std::map<std::string, Rat> parameters = {});

    const SigPtr& signature() const { return sig_; }
    const GcaElement& d_of(std::size_t gen) const { return differential_[gen]; }
    const FieldSpec& field() const { return field_; }
    const std::map<std::string, Rat>& parameters() const { return params_; }

    GcaElement element(const std::string& name) const {
        return GcaElement::generator(sig_, name);
    }

private:
    SigPtr sig_;
    std::vector<GcaElement> differential_;
    FieldSpec field_;
    std::map<std::string, Rat> params_;
};

// Leibniz extension of the differential to an arbitrary element.
GcaElement extend_differential(const CdgaSpec& spec, const GcaElement& u);

struct DegreeSlot {
    std::vector<GcaExp> basis;         // cochain monomials, descending order
    std::size_t dim_cochains = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t betti = 0;
    std::vector<GcaElement> representatives;  // reduced mod coboundaries
};

class CohomologyTable {
public:
    int max_degree() const { return max_degree_; }
    const DegreeSlot& slot(int n) const;
    std::vector<std::size_t> betti_numbers() const;
    // matrix of d : C^n -> C^{n+1} in the slot bases, for n = 0..max_degree
    const Matrix& differential_matrix(int n) const;

private:
    friend CohomologyTable cohomology(const CdgaSpec& spec, int max_degree);
    int max_degree_ = -1;
    std::vector<DegreeSlot> slots_;
    std::vector<Matrix> d_;
};

// Degreewise cohomology over spec.field() for degrees 0..max_degree.
CohomologyTable cohomology(const CdgaSpec& spec, int max_degree);

struct ClassMembership {
    enum class Status { not_cocycle, exact, nontrivial } status;
    // for exact: v with d v = u, free coordinates pinned to zero
    std::optional<GcaElement> primitive;
    // for nontrivial: coordinates in the representative basis of the degree
    std::vector<Rat> coordinates;
};

ClassMembership class_membership(const CdgaSpec& spec,
                                 const CohomologyTable& table,
                                 const GcaElement& u);

struct BasisRecipe {
    std::string label;
    GcaElement element;
};

struct DegreeReport {
    int degree;
    std::size_t betti;
    std::size_t family_count;
    std::size_t family_rank;  // rank of family classes modulo coboundaries
    bool ok() const { return family_count == family_rank && family_rank == betti; }
};

struct BasisCheck {
    bool ok = true;
    std::vector<std::string> failures;     // human-readable defect list
    std::vector<DegreeReport> by_degree;   // degrees 0..N
};

// Checks that the named cocycles are closed, independent in cohomology, and
// span every degree <= max_degree.
BasisCheck verify_claimed_basis(const CdgaSpec& spec,
                                const CohomologyTable& table,
                                const std::vector<BasisRecipe>& family);

}  // namespace exalg
