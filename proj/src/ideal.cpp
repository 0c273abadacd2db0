#include "bei/ideal.hpp"

#include <algorithm>
#include <bit>

namespace bei {

Ideal::Ideal(RingContext ring, std::vector<Polynomial> gens) : ring_(ring) {
    PrimeField F = ring_.field();
    MonomialOrder ord = ring_.degrevlex();
    for (auto& g : gens) {
        g.normalize(F, ord);
        if (g.is_zero()) continue;
        if (g.lead().mono.nvars() != ring_.nvars())
            throw std::invalid_argument("Ideal: generator from a different ring");
        gens_.push_back(std::move(g));
    }
}

Ideal::Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {
    std::lock_guard<std::mutex> lk(o.mutex_);
    gb_cache_ = o.gb_cache_;
}

Ideal& Ideal::operator=(const Ideal& o) {
    if (this == &o) return *this;
    std::lock_guard<std::mutex> lk(o.mutex_);
    ring_ = o.ring_;
    gens_ = o.gens_;
    gb_cache_ = o.gb_cache_;
    return *this;
}

Ideal::Ideal(Ideal&& o) noexcept : ring_(o.ring_), gens_(std::move(o.gens_)) {
    gb_cache_ = std::move(o.gb_cache_);
}

Ideal& Ideal::operator=(Ideal&& o) noexcept {
    ring_ = o.ring_;
    gens_ = std::move(o.gens_);
    gb_cache_ = std::move(o.gb_cache_);
    return *this;
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& ord) const {
    std::string key = ord.key();
    {
        std::lock_guard<std::mutex> lk(mutex_);
        auto it = gb_cache_.find(key);
        if (it != gb_cache_.end()) return it->second;
    }
    std::vector<Polynomial> gb = buchberger(gens_, ring_.field(), ord);
    std::lock_guard<std::mutex> lk(mutex_);
    return gb_cache_.emplace(key, std::move(gb)).first->second;
}

const std::vector<Polynomial>& groebner_basis(const Ideal& I, const MonomialOrder& ord) {
    return I.groebner(ord);
}

bool ideal_membership(const Polynomial& f, const Ideal& I) {
    MonomialOrder ord = I.ring().degrevlex();
    Polynomial g = f;
    g.normalize(I.ring().field(), ord);
    return normal_form(g, I.groebner(ord), I.ring().field(), ord).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw std::domain_error("ideal_equal: ring mismatch");
    MonomialOrder ord = I.ring().degrevlex();
    const auto& a = I.groebner(ord);
    const auto& b = J.groebner(ord);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw std::domain_error("ideal_contains: ring mismatch");
    for (const auto& g : J.generators())
        if (!ideal_membership(g, I)) return false;
    return true;
}

namespace {

// Re-embed a main-ring polynomial into the ring extended by one aux variable.
Polynomial lift_to_aux(const Polynomial& p, const RingContext& exring) {
    std::vector<Term> ts;
    ts.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        Monomial m(exring.nvars());
        for (int i = 0; i < t.mono.nvars(); ++i)
            if (t.mono.exp(i)) m.set_exp(i, t.mono.exp(i));
        ts.push_back({m, t.coef});
    }
    return Polynomial(std::move(ts));
}

Polynomial project_to_main(const Polynomial& p, const RingContext& main) {
    std::vector<Term> ts;
    ts.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        Monomial m(main.nvars());
        for (int i = 0; i < main.nvars(); ++i)
            if (t.mono.exp(i)) m.set_exp(i, t.mono.exp(i));
        ts.push_back({m, t.coef});
    }
    return Polynomial(std::move(ts));
}

bool all_homogeneous(const Ideal& I) {
    for (const auto& g : I.generators())
        if (!g.is_homogeneous()) return false;
    return true;
}

} // namespace

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw std::domain_error("ideal_intersection: ring mismatch");
    if (I.ring().aux != 0)
        throw std::domain_error("ideal_intersection: expected a main-ring ideal");
    const RingContext& R = I.ring();
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(R, {});

    RingContext ex(R.n, R.characteristic, 1);
    PrimeField F = ex.field();
    MonomialOrder eord = ex.elim_order();
    Monomial t = Monomial::variable(ex.nvars(), 2 * ex.n);

    std::vector<Polynomial> gens;
    for (const auto& f : I.generators())
        gens.push_back(Polynomial::mul_term(lift_to_aux(f, ex), t, 1, F));
    for (const auto& g : J.generators()) {
        Polynomial lg = lift_to_aux(g, ex);
        // (1 - t) * g
        gens.push_back(Polynomial::sub(lg, Polynomial::mul_term(lg, t, 1, F), F, eord));
    }

    std::vector<Polynomial> gb = buchberger(std::move(gens), F, eord);

    bool homog = all_homogeneous(I) && all_homogeneous(J);
    std::vector<Polynomial> out;
    MonomialOrder mord = R.degrevlex();
    for (const auto& g : gb) {
        if (g.lead().mono.exp(2 * ex.n) != 0) continue; // t-free lead implies t-free element
        Polynomial p = project_to_main(g, R);
        p.normalize(R.field(), mord);
        if (homog) {
            for (auto& part : p.homogeneous_parts(R.field(), mord)) out.push_back(std::move(part));
        } else {
            out.push_back(std::move(p));
        }
    }
    // drop duplicates for a tidier generator list
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
        return mord.compare(a.lead().mono, b.lead().mono) < 0;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Ideal(R, std::move(out));
}

Ideal ideal_colon(const Ideal& I, const Polynomial& f) {
    const RingContext& R = I.ring();
    PrimeField F = R.field();
    MonomialOrder ord = R.degrevlex();
    Polynomial fn = f;
    fn.normalize(F, ord);
    if (fn.is_zero()) throw std::domain_error("ideal_colon: zero denominator");
    if (fn.is_constant()) return I;

    Ideal K = ideal_intersection(I, Ideal(R, {fn}));
    std::vector<Polynomial> out;
    out.reserve(K.generators().size());
    for (const auto& g : K.generators())
        out.push_back(exact_divide(g, fn, F, ord));
    return Ideal(R, std::move(out));
}

int krull_dim(const Ideal& I) {
    const RingContext& R = I.ring();
    int nv = R.nvars();
    if (nv > 20) throw CapacityError("krull_dim: too many variables for subset enumeration");
    MonomialOrder ord = R.degrevlex();
    const auto& gb = I.groebner(ord);

    std::vector<uint32_t> supports;
    for (const auto& g : gb) {
        if (g.lead().mono.is_one()) throw std::domain_error("krull_dim: unit ideal");
        uint32_t s = 0;
        for (int i = 0; i < nv; ++i)
            if (g.lead().mono.exp(i)) s |= (1u << i);
        supports.push_back(s);
    }

    int best = 0;
    uint32_t full = nv == 32 ? 0xffffffffu : ((1u << nv) - 1);
    for (uint32_t mask = 0; mask <= full; ++mask) {
        int pc = std::popcount(mask);
        if (pc <= best) continue;
        bool independent = true;
        for (uint32_t s : supports)
            if ((s & ~mask) == 0) { independent = false; break; }
        if (independent) best = pc;
    }
    return best;
}

int height_of(const Ideal& I) {
    return I.ring().nvars() - krull_dim(I);
}

} // namespace bei
