#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exalg/field.hpp"

namespace exalg {

struct GeneratorDecl {
    std::string name;
    int degree;  // cohomological degree, positive and even
    bool operator==(const GeneratorDecl&) const = default;
};

// Commutative graded polynomial ring over Q with a fixed generator order.
// The term order everywhere is graded lexicographic: total cohomological
// degree first, then lex with earlier-declared generators more significant.
struct PolyRing {
    std::vector<GeneratorDecl> gens;

    std::size_t size() const { return gens.size(); }
    int index_of(const std::string& name) const;  // -1 if absent
    bool operator==(const PolyRing&) const = default;
};

using RingPtr = std::shared_ptr<const PolyRing>;
using ExpVec = std::vector<int>;

RingPtr make_ring(std::vector<GeneratorDecl> gens);

int monomial_degree(const PolyRing& ring, const ExpVec& e);
bool monomial_divides(const ExpVec& a, const ExpVec& b);  // a | b
// true if a is strictly greater than b in the term order
bool monomial_greater(const PolyRing& ring, const ExpVec& a, const ExpVec& b);

// All exponent vectors of the given cohomological degree, descending.
std::vector<ExpVec> monomials_of_degree(const PolyRing& ring, int degree);

class Poly {
public:
    struct Cmp {
        const PolyRing* ring;
        bool operator()(const ExpVec& a, const ExpVec& b) const {
            return monomial_greater(*ring, a, b);
        }
    };
    using TermMap = std::map<ExpVec, Rat, Cmp>;

    explicit Poly(RingPtr ring);
    static Poly constant(RingPtr ring, const Rat& c);
    static Poly generator(RingPtr ring, const std::string& name);
    static Poly monomial(RingPtr ring, const ExpVec& e, const Rat& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Leading term under the ring order; poly must be non-zero.
    std::pair<ExpVec, Rat> leading_term() const;

    bool is_homogeneous() const;
    // Degree of a non-zero homogeneous polynomial.
    int degree() const;
    Poly homogeneous_part(int degree) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    Poly pow(int n) const;

    bool operator==(const Poly& o) const {
        return *ring_ == *o.ring_ &&
               std::equal(terms_.begin(), terms_.end(), o.terms_.begin(),
                          o.terms_.end());
    }

    std::string str() const;

private:
    void add_term(const ExpVec& e, const Rat& c);
    RingPtr ring_;
    TermMap terms_;

    friend Poly normal_form(const Poly& f, const Poly& g);
    friend std::optional<Poly> divide_exact(const Poly& f, const Poly& g);
};

// Remainder of f on division by the single divisor g (leading-term reduction
// until no term of the remainder is divisible by lt(g)). A single polynomial
// is a Groebner basis of the ideal it generates, so the remainder is zero
// exactly when f lies in (g).
Poly normal_form(const Poly& f, const Poly& g);

// Quotient f / g when it exists; the result is verified by re-multiplication.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

// Graded ring map: generator i of f's ring goes to images[i], which must be
// zero or homogeneous of the same degree.
Poly substitute(const Poly& f, const RingPtr& target,
                const std::vector<Poly>& images);

}  // namespace exalg
