#pragma once

#include <string>
#include <vector>

#include "bei/ring.hpp"

namespace bei {

struct Term {
    Monomial mono;
    uint32_t coef = 0;
};

/// Sparse multivariate polynomial over F_p. Terms are kept sorted in strictly
/// descending order under the monomial order active for the computation at
/// hand; terms_[0] is the leading term. Normalized: no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const RingContext& ring, uint32_t c);
    static Polynomial term(const Monomial& m, uint32_t c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& lead() const { return terms_.front(); }

    int degree() const; // max term degree; -1 for the zero polynomial
    bool is_homogeneous() const;

    // Sort descending under ord, merge equal monomials, drop zeros.
    void normalize(const PrimeField& F, const MonomialOrder& ord);
    bool is_sorted(const MonomialOrder& ord) const;

    void make_monic(const PrimeField& F);
    void scale(uint32_t c, const PrimeField& F);

    static Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& F,
                          const MonomialOrder& ord);
    static Polynomial sub(const Polynomial& a, const Polynomial& b, const PrimeField& F,
                          const MonomialOrder& ord);
    static Polynomial negate(const Polynomial& a, const PrimeField& F);
    // (c*m) * p, order-preserving.
    static Polynomial mul_term(const Polynomial& p, const Monomial& m, uint32_t c, const PrimeField& F);
    static Polynomial mul(const Polynomial& a, const Polynomial& b, const PrimeField& F,
                          const MonomialOrder& ord);

    // Split into homogeneous components, descending by degree.
    std::vector<Polynomial> homogeneous_parts(const PrimeField& F, const MonomialOrder& ord) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Debug/interchange format: "c*x1^a*y3" terms joined by " + ", in stored order.
    std::string to_string(const RingContext& ring) const;
    static Polynomial parse(const RingContext& ring, const std::string& text,
                            const MonomialOrder& ord);

private:
    std::vector<Term> terms_;
};

/// Remainder of f on division by basis (full reduction of every term).
/// If basis is a Groebner basis for ord, the result is the unique normal form.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const PrimeField& F, const MonomialOrder& ord);

/// S-polynomial of f and g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PrimeField& F,
                        const MonomialOrder& ord);

/// Buchberger with Gebauer-Moeller pair elimination; returns the reduced
/// Groebner basis (monic, pairwise fully reduced, sorted by ascending lead).
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const PrimeField& F,
                                   const MonomialOrder& ord);

/// Quotient g/f when the division is exact; throws std::domain_error otherwise.
Polynomial exact_divide(const Polynomial& g, const Polynomial& f, const PrimeField& F,
                        const MonomialOrder& ord);

} // namespace bei
