#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "exalg/field.hpp"

namespace exalg {

// Free graded-commutative algebra over Q: even-degree generators are
// polynomial, odd-degree generators are exterior (square zero), and
// u v = (-1)^{|u||v|} v u.
struct GcaGenerator {
    std::string name;
    int degree;  // positive; parity decides commutation behaviour
    bool odd() const { return degree % 2 != 0; }
    bool operator==(const GcaGenerator&) const = default;
};

struct GcaSignature {
    std::vector<GcaGenerator> gens;
    std::size_t size() const { return gens.size(); }
    int index_of(const std::string& name) const;
    bool operator==(const GcaSignature&) const = default;
};

using SigPtr = std::shared_ptr<const GcaSignature>;
using GcaExp = std::vector<int>;  // exponents; odd generators only 0/1

SigPtr make_signature(std::vector<GcaGenerator> gens);

int gca_degree(const GcaSignature& sig, const GcaExp& e);
bool gca_greater(const GcaSignature& sig, const GcaExp& a, const GcaExp& b);

// Monomial basis of the free algebra in one cohomological degree, in
// descending term order. This is the fixed coordinate order used by every
// matrix in the cohomology computations.
std::vector<GcaExp> monomial_basis(const GcaSignature& sig, int degree);

class GcaElement {
public:
    struct Cmp {
        const GcaSignature* sig;
        bool operator()(const GcaExp& a, const GcaExp& b) const {
            return gca_greater(*sig, a, b);
        }
    };
    using TermMap = std::map<GcaExp, Rat, Cmp>;

    explicit GcaElement(SigPtr sig);
    static GcaElement constant(SigPtr sig, const Rat& c);
    static GcaElement generator(SigPtr sig, const std::string& name);
    static GcaElement monomial(SigPtr sig, const GcaExp& e, const Rat& c);

    const SigPtr& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    int degree() const;  // non-zero homogeneous input

    GcaElement operator-() const;
    GcaElement& operator+=(const GcaElement& o);
    GcaElement& operator-=(const GcaElement& o);
    friend GcaElement operator+(GcaElement a, const GcaElement& b) { return a += b; }
    friend GcaElement operator-(GcaElement a, const GcaElement& b) { return a -= b; }
    GcaElement& operator*=(const Rat& c);
    friend GcaElement operator*(GcaElement a, const Rat& c) { return a *= c; }
    friend GcaElement operator*(const Rat& c, GcaElement a) { return a *= c; }

    bool operator==(const GcaElement& o) const {
        return *sig_ == *o.sig_ &&
               std::equal(terms_.begin(), terms_.end(), o.terms_.begin(),
                          o.terms_.end());
    }

    std::string str() const;

    void add_term(const GcaExp& e, const Rat& c);

private:
    SigPtr sig_;
    TermMap terms_;
};

// Product with the Koszul sign rule. Sign for monomials a, b is (-1)^k where
// k counts pairs i > j with generator i odd in a and generator j odd in b;
// any repeated odd generator kills the term.
GcaElement gca_product(const GcaElement& a, const GcaElement& b);

}  // namespace exalg
