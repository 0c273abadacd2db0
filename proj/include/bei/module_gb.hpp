#pragma once

#include <vector>

#include "bei/poly.hpp"

namespace bei {

/// One term of an element of a graded free module: coefficient * monomial * e_comp.
struct ModTerm {
    int comp = 0;
    Monomial mono;
    uint32_t coef = 0;
};

/// Element of a free module F = sum S(-twist_c); terms sorted strictly
/// descending under the active ModuleOrder.
struct VecPoly {
    std::vector<ModTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const ModTerm& lead() const { return terms.front(); }

    // total degree (monomial degree + twist of the component) of the leading
    // term; for homogeneous elements this is the element degree
    int degree(const std::vector<int>& twists) const {
        return terms.front().mono.degree() + twists[(size_t)terms.front().comp];
    }
    bool is_homogeneous(const std::vector<int>& twists) const;
};

/// Module term order. The base form is degree-compatible: total degree (with
/// twists) first, then the ring order on monomials, then smaller component
/// index wins. When a Schreyer layer is set, terms compare by their images
/// m * LT(g_comp) in the level below, ties broken by smaller component; this
/// is the order under which syzygies of a Groebner basis are again one.
struct ModuleOrder {
    const MonomialOrder* ord = nullptr;
    const std::vector<int>* twists = nullptr; // component degrees

    const std::vector<ModTerm>* schreyer_leads = nullptr;
    const ModuleOrder* below = nullptr;

    int compare(const ModTerm& a, const ModTerm& b) const {
        if (schreyer_leads) {
            const ModTerm& la = (*schreyer_leads)[(size_t)a.comp];
            const ModTerm& lb = (*schreyer_leads)[(size_t)b.comp];
            ModTerm ia{la.comp, a.mono * la.mono, 1};
            ModTerm ib{lb.comp, b.mono * lb.mono, 1};
            int c = below->compare(ia, ib);
            if (c != 0) return c;
            if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
            return 0;
        }
        int da = a.mono.degree() + (*twists)[(size_t)a.comp];
        int db = b.mono.degree() + (*twists)[(size_t)b.comp];
        if (da != db) return da < db ? -1 : 1;
        int c = ord->compare(a.mono, b.mono);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }
};

/// Owns the data behind the Schreyer order induced by a Groebner basis: lead
/// terms, element degrees, and the order object pointing at them.
struct SchreyerLevel {
    std::vector<ModTerm> leads;
    std::vector<int> twists;
    ModuleOrder order;

    SchreyerLevel(const std::vector<VecPoly>& gb, const ModuleOrder& below_order) {
        for (const auto& g : gb) {
            leads.push_back(g.lead());
            twists.push_back(g.degree(*below_order.twists));
        }
        order.ord = below_order.ord;
        order.twists = &twists;
        order.schreyer_leads = &leads;
        order.below = &below_order;
    }
    SchreyerLevel(const SchreyerLevel&) = delete;
    SchreyerLevel& operator=(const SchreyerLevel&) = delete;
};

void vec_normalize(VecPoly& v, const PrimeField& F, const ModuleOrder& mord);
VecPoly vec_sub(const VecPoly& a, const VecPoly& b, const PrimeField& F, const ModuleOrder& mord);
VecPoly vec_mul_term(const VecPoly& v, const Monomial& m, uint32_t c, const PrimeField& F);
void vec_make_monic(VecPoly& v, const PrimeField& F);

/// Remainder of v modulo basis (leading-term reduction of every term).
/// When cofactors is non-null it receives q with v = sum q_k basis_k + r.
VecPoly vec_normal_form(const VecPoly& v, const std::vector<VecPoly>& basis, const PrimeField& F,
                        const ModuleOrder& mord, std::vector<Polynomial>* cofactors = nullptr);

/// Buchberger on a free-module generating set (pairs restricted to equal
/// leading components; chain criterion only). Output is monic with
/// lead-minimal, deterministic ordering.
std::vector<VecPoly> module_groebner(std::vector<VecPoly> gens, const PrimeField& F,
                                     const ModuleOrder& mord);

/// Syzygies of a module Groebner basis: for every pair with equal leading
/// component the S-vector reduces to zero and yields the relation
/// u_i e_i - u_j e_j - sum q_k e_k. The result generates the whole syzygy
/// module, and under the induced Schreyer order (out_order, when given) it is
/// itself a Groebner basis with lead terms u_i e_i.
std::vector<VecPoly> schreyer_syzygies(const std::vector<VecPoly>& gb, const PrimeField& F,
                                       const ModuleOrder& mord,
                                       const ModuleOrder* out_order = nullptr);

} // namespace bei
