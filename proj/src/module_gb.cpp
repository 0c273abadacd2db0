#include "bei/module_gb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bei {

bool VecPoly::is_homogeneous(const std::vector<int>& twists) const {
    if (terms.empty()) return true;
    int d = terms[0].mono.degree() + twists[(size_t)terms[0].comp];
    for (const auto& t : terms)
        if (t.mono.degree() + twists[(size_t)t.comp] != d) return false;
    return true;
}

namespace {

struct ModKey {
    int comp;
    Monomial mono;
};

struct DescModKey {
    const ModuleOrder* mord;
    bool operator()(const ModKey& a, const ModKey& b) const {
        ModTerm ta{a.comp, a.mono, 1}, tb{b.comp, b.mono, 1};
        return mord->compare(ta, tb) > 0;
    }
};

using ModWork = std::map<ModKey, uint32_t, DescModKey>;

void mod_add_term(ModWork& w, int comp, const Monomial& m, uint32_t c, const PrimeField& F) {
    if (c == 0) return;
    auto [it, inserted] = w.try_emplace(ModKey{comp, m}, c);
    if (!inserted) {
        it->second = F.add(it->second, c);
        if (it->second == 0) w.erase(it);
    }
}

VecPoly from_work(const ModWork& w) {
    VecPoly v;
    v.terms.reserve(w.size());
    for (const auto& [k, c] : w) v.terms.push_back({k.comp, k.mono, c});
    return v;
}

} // namespace

void vec_normalize(VecPoly& v, const PrimeField& F, const ModuleOrder& mord) {
    ModWork w(DescModKey{&mord});
    for (const auto& t : v.terms) mod_add_term(w, t.comp, t.mono, t.coef % F.prime(), F);
    v = from_work(w);
}

VecPoly vec_sub(const VecPoly& a, const VecPoly& b, const PrimeField& F, const ModuleOrder& mord) {
    VecPoly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = mord.compare(a.terms[i], b.terms[j]);
        if (c > 0) {
            out.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            ModTerm t = b.terms[j++];
            t.coef = F.neg(t.coef);
            out.terms.push_back(t);
        } else {
            uint32_t s = F.sub(a.terms[i].coef, b.terms[j].coef);
            if (s != 0) out.terms.push_back({a.terms[i].comp, a.terms[i].mono, s});
            ++i; ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) {
        ModTerm t = b.terms[j];
        t.coef = F.neg(t.coef);
        out.terms.push_back(t);
    }
    return out;
}

VecPoly vec_mul_term(const VecPoly& v, const Monomial& m, uint32_t c, const PrimeField& F) {
    VecPoly out;
    if (c == 0) return out;
    out.terms.reserve(v.terms.size());
    for (const auto& t : v.terms) out.terms.push_back({t.comp, t.mono * m, F.mul(t.coef, c)});
    return out;
}

void vec_make_monic(VecPoly& v, const PrimeField& F) {
    if (v.is_zero()) return;
    uint32_t lc = v.terms[0].coef;
    if (lc == 1) return;
    uint32_t inv = F.inv(lc);
    for (auto& t : v.terms) t.coef = F.mul(t.coef, inv);
}

VecPoly vec_normal_form(const VecPoly& v, const std::vector<VecPoly>& basis, const PrimeField& F,
                        const ModuleOrder& mord, std::vector<Polynomial>* cofactors) {
    if (cofactors) cofactors->assign(basis.size(), Polynomial());
    std::vector<std::vector<Term>> cof(cofactors ? basis.size() : 0);

    ModWork w(DescModKey{&mord});
    for (const auto& t : v.terms) mod_add_term(w, t.comp, t.mono, t.coef, F);

    std::vector<ModTerm> rem;
    while (!w.empty()) {
        auto it = w.begin();
        ModKey key = it->first;
        uint32_t c = it->second;
        const VecPoly* g = nullptr;
        size_t gi = 0;
        for (size_t k = 0; k < basis.size(); ++k) {
            const VecPoly& cand = basis[k];
            if (cand.is_zero()) continue;
            if (cand.lead().comp == key.comp && cand.lead().mono.divides(key.mono)) {
                g = &cand;
                gi = k;
                break;
            }
        }
        if (!g) {
            rem.push_back({key.comp, key.mono, c});
            w.erase(it);
            continue;
        }
        Monomial q = key.mono.div(g->lead().mono);
        uint32_t factor = F.div(c, g->lead().coef);
        if (cofactors) cof[gi].push_back({q, factor});
        for (const auto& t : g->terms)
            mod_add_term(w, t.comp, t.mono * q, F.neg(F.mul(factor, t.coef)), F);
    }
    if (cofactors) {
        for (size_t k = 0; k < basis.size(); ++k) {
            Polynomial p(std::move(cof[k]));
            p.normalize(F, *mord.ord);
            (*cofactors)[k] = std::move(p);
        }
    }
    VecPoly out;
    out.terms = std::move(rem);
    return out;
}

namespace {

struct ModPair {
    int deg;
    Monomial lcm;
    int comp;
    int i, j;
};

struct ModPairLess {
    const ModuleOrder* mord;
    bool operator()(const ModPair& a, const ModPair& b) const {
        int da = a.deg, db = b.deg;
        if (da != db) return da < db;
        int c = mord->ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.comp != b.comp) return a.comp < b.comp;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

VecPoly module_spair(const VecPoly& f, const VecPoly& g, const PrimeField& F,
                     const ModuleOrder& mord) {
    const Monomial l = Monomial::lcm(f.lead().mono, g.lead().mono);
    VecPoly a = vec_mul_term(f, l.div(f.lead().mono), F.inv(f.lead().coef), F);
    VecPoly b = vec_mul_term(g, l.div(g.lead().mono), F.inv(g.lead().coef), F);
    return vec_sub(a, b, F, mord);
}

// Gebauer-Moeller update restricted to pairs with equal leading component.
// The coprimality (product) criterion is not valid for modules and is skipped.
void gm_update_module(std::set<ModPair, ModPairLess>& pairs, const std::vector<VecPoly>& basis,
                      int t, const ModuleOrder& mord) {
    const ModTerm& lt = basis[(size_t)t].lead();
    struct Cand { Monomial lcm; int i; bool alive; };
    std::vector<Cand> cands;
    for (int i = 0; i < t; ++i) {
        const ModTerm& li = basis[(size_t)i].lead();
        if (li.comp != lt.comp) continue;
        cands.push_back({Monomial::lcm(li.mono, lt.mono), i, true});
    }
    for (auto& a : cands) {
        if (!a.alive) continue;
        for (const auto& b : cands) {
            if (&a == &b || !b.alive) continue;
            if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) { a.alive = false; break; }
        }
    }
    for (size_t x = 0; x < cands.size(); ++x) {
        if (!cands[x].alive) continue;
        for (size_t y = x + 1; y < cands.size(); ++y)
            if (cands[y].alive && cands[x].lcm == cands[y].lcm) cands[y].alive = false;
    }
    for (auto it = pairs.begin(); it != pairs.end();) {
        const ModPair& p = *it;
        if (p.comp == lt.comp && lt.mono.divides(p.lcm) &&
            Monomial::lcm(basis[(size_t)p.i].lead().mono, lt.mono) != p.lcm &&
            Monomial::lcm(basis[(size_t)p.j].lead().mono, lt.mono) != p.lcm) {
            it = pairs.erase(it);
        } else {
            ++it;
        }
    }
    int tdeg = (*mord.twists)[(size_t)lt.comp];
    for (const auto& c : cands)
        if (c.alive) pairs.insert(ModPair{c.lcm.degree() + tdeg, c.lcm, lt.comp, c.i, t});
}

} // namespace

std::vector<VecPoly> module_groebner(std::vector<VecPoly> gens, const PrimeField& F,
                                     const ModuleOrder& mord) {
    std::vector<VecPoly> basis;
    for (auto& g : gens) {
        vec_normalize(g, F, mord);
        if (!g.is_zero()) {
            vec_make_monic(g, F);
            basis.push_back(std::move(g));
        }
    }

    std::set<ModPair, ModPairLess> pairs(ModPairLess{&mord});
    for (int t = 1; t < (int)basis.size(); ++t) gm_update_module(pairs, basis, t, mord);

    while (!pairs.empty()) {
        ModPair p = *pairs.begin();
        pairs.erase(pairs.begin());
        VecPoly s = module_spair(basis[(size_t)p.i], basis[(size_t)p.j], F, mord);
        VecPoly r = vec_normal_form(s, basis, F, mord);
        if (r.is_zero()) continue;
        vec_make_monic(r, F);
        basis.push_back(std::move(r));
        gm_update_module(pairs, basis, (int)basis.size() - 1, mord);
    }

    // lead-minimal subset, deterministic order
    std::vector<size_t> idx(basis.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return mord.compare(basis[a].lead(), basis[b].lead()) < 0;
    });
    std::vector<VecPoly> kept;
    for (size_t k : idx) {
        bool redundant = false;
        for (const auto& h : kept)
            if (h.lead().comp == basis[k].lead().comp &&
                h.lead().mono.divides(basis[k].lead().mono)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(basis[k]);
    }
    return kept;
}

std::vector<VecPoly> schreyer_syzygies(const std::vector<VecPoly>& gb, const PrimeField& F,
                                       const ModuleOrder& mord, const ModuleOrder* out_order) {
    std::vector<int> twists;
    for (const auto& g : gb) twists.push_back(g.degree(*mord.twists));
    // fallback container order when the caller does not supply the induced one
    ModuleOrder sord{mord.ord, &twists, nullptr, nullptr};
    const ModuleOrder& oord = out_order ? *out_order : sord;

    // Frame first: the syzygy of the pair (i, j), i < j, leads at
    // (lcm / LT(g_i)) e_i under the induced order, and those leads are known
    // before any reduction. A lead-minimal subset of the pair syzygies is
    // still a Groebner basis of the syzygy module, so dominated pairs are
    // dropped without ever reducing them.
    struct FramePair {
        Monomial u;
        size_t i, j;
    };
    std::vector<FramePair> frame;
    for (size_t i = 0; i < gb.size(); ++i) {
        std::vector<FramePair> at_i;
        for (size_t j = i + 1; j < gb.size(); ++j) {
            if (gb[i].lead().comp != gb[j].lead().comp) continue;
            const Monomial l = Monomial::lcm(gb[i].lead().mono, gb[j].lead().mono);
            at_i.push_back({l.div(gb[i].lead().mono), i, j});
        }
        std::sort(at_i.begin(), at_i.end(), [&](const FramePair& a, const FramePair& b) {
            if (a.u.degree() != b.u.degree()) return a.u.degree() < b.u.degree();
            int c = mord.ord->compare(a.u, b.u);
            if (c != 0) return c < 0;
            return a.j < b.j;
        });
        std::vector<FramePair> kept;
        for (const auto& cand : at_i) {
            bool dominated = false;
            for (const auto& k : kept)
                if (k.u.divides(cand.u)) { dominated = true; break; }
            if (!dominated) kept.push_back(cand);
        }
        frame.insert(frame.end(), kept.begin(), kept.end());
    }

    std::vector<VecPoly> out;
    out.reserve(frame.size());
    for (const auto& [ui, i, j] : frame) {
        const Monomial l = ui * gb[i].lead().mono;
        Monomial uj = l.div(gb[j].lead().mono);
        VecPoly s = vec_sub(vec_mul_term(gb[i], ui, F.inv(gb[i].lead().coef), F),
                            vec_mul_term(gb[j], uj, F.inv(gb[j].lead().coef), F), F, mord);
        std::vector<Polynomial> q;
        VecPoly r = vec_normal_form(s, gb, F, mord, &q);
        if (!r.is_zero())
            throw std::logic_error("schreyer_syzygies: S-vector of a Groebner basis must reduce to zero");
        VecPoly syz;
        syz.terms.push_back({(int)i, ui, F.inv(gb[i].lead().coef)});
        syz.terms.push_back({(int)j, uj, F.neg(F.inv(gb[j].lead().coef))});
        for (size_t k = 0; k < gb.size(); ++k)
            for (const auto& t : q[k].terms())
                syz.terms.push_back({(int)k, t.mono, F.neg(t.coef)});
        vec_normalize(syz, F, oord);
        if (syz.is_zero()) continue;
        if (out_order && (syz.lead().comp != (int)i || syz.lead().mono != ui))
            throw std::logic_error("schreyer_syzygies: induced lead term violated");
        out.push_back(std::move(syz));
    }
    return out;
}

} // namespace bei
