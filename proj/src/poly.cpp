#include "bei/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace bei {

namespace {

// std::map comparator that puts the greatest monomial first.
struct DescMono {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->compare(a, b) > 0; }
};

using WorkMap = std::map<Monomial, uint32_t, DescMono>;

void work_add_term(WorkMap& w, const Monomial& m, uint32_t c, const PrimeField& F) {
    if (c == 0) return;
    auto [it, inserted] = w.try_emplace(m, c);
    if (!inserted) {
        it->second = F.add(it->second, c);
        if (it->second == 0) w.erase(it);
    }
}

Polynomial from_work(const WorkMap& w) {
    std::vector<Term> ts;
    ts.reserve(w.size());
    for (const auto& [m, c] : w) ts.push_back({m, c});
    return Polynomial(std::move(ts));
}

} // namespace

Polynomial Polynomial::constant(const RingContext& ring, uint32_t c) {
    c %= ring.characteristic;
    if (c == 0) return Polynomial();
    return Polynomial({Term{Monomial(ring.nvars()), c}});
}

Polynomial Polynomial::term(const Monomial& m, uint32_t c) {
    if (c == 0) return Polynomial();
    return Polynomial({Term{m, c}});
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

void Polynomial::normalize(const PrimeField& F, const MonomialOrder& ord) {
    if (is_sorted(ord)) {
        bool clean = true;
        for (const auto& t : terms_)
            if (t.coef == 0 || t.coef >= F.prime()) { clean = false; break; }
        if (clean) return;
    }
    WorkMap w(DescMono{&ord});
    for (const auto& t : terms_) work_add_term(w, t.mono, t.coef % F.prime(), F);
    *this = from_work(w);
}

bool Polynomial::is_sorted(const MonomialOrder& ord) const {
    for (size_t i = 1; i < terms_.size(); ++i)
        if (ord.compare(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
    return true;
}

void Polynomial::make_monic(const PrimeField& F) {
    if (is_zero()) return;
    uint32_t lc = terms_[0].coef;
    if (lc == 1) return;
    uint32_t inv = F.inv(lc);
    for (auto& t : terms_) t.coef = F.mul(t.coef, inv);
}

void Polynomial::scale(uint32_t c, const PrimeField& F) {
    if (c == 0) { terms_.clear(); return; }
    if (c == 1) return;
    for (auto& t : terms_) t.coef = F.mul(t.coef, c);
}

Polynomial Polynomial::add(const Polynomial& a, const Polynomial& b, const PrimeField& F,
                           const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            out.push_back(a.terms_[i++]);
        } else if (c < 0) {
            out.push_back(b.terms_[j++]);
        } else {
            uint32_t s = F.add(a.terms_[i].coef, b.terms_[j].coef);
            if (s != 0) out.push_back({a.terms_[i].mono, s});
            ++i; ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::sub(const Polynomial& a, const Polynomial& b, const PrimeField& F,
                           const MonomialOrder& ord) {
    return add(a, negate(b, F), F, ord);
}

Polynomial Polynomial::negate(const Polynomial& a, const PrimeField& F) {
    Polynomial r = a;
    for (auto& t : r.terms_) t.coef = F.neg(t.coef);
    return r;
}

Polynomial Polynomial::mul_term(const Polynomial& p, const Monomial& m, uint32_t c,
                                const PrimeField& F) {
    if (c == 0) return Polynomial();
    Polynomial r;
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_) r.terms_.push_back({t.mono * m, F.mul(t.coef, c)});
    return r;
}

Polynomial Polynomial::mul(const Polynomial& a, const Polynomial& b, const PrimeField& F,
                           const MonomialOrder& ord) {
    WorkMap w(DescMono{&ord});
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            work_add_term(w, ta.mono * tb.mono, F.mul(ta.coef, tb.coef), F);
    return from_work(w);
}

std::vector<Polynomial> Polynomial::homogeneous_parts(const PrimeField& F,
                                                      const MonomialOrder& ord) const {
    std::map<int, std::vector<Term>, std::greater<int>> parts;
    for (const auto& t : terms_) parts[t.mono.degree()].push_back(t);
    std::vector<Polynomial> out;
    for (auto& [d, ts] : parts) {
        Polynomial p(std::move(ts));
        p.normalize(F, ord);
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coef != o.terms_[i].coef || terms_[i].mono != o.terms_[i].mono) return false;
    return true;
}

std::string Polynomial::to_string(const RingContext& ring) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    uint32_t p = ring.characteristic;
    bool first = true;
    for (const auto& t : terms_) {
        // coefficients above p/2 display as subtracted terms
        uint32_t c = t.coef;
        bool negative = p - c < c;
        if (negative) c = p - c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool printed = false;
        if (c != 1 || t.mono.is_one()) {
            os << c;
            printed = true;
        }
        for (int i = 0; i < t.mono.nvars(); ++i) {
            int e = t.mono.exp(i);
            if (e == 0) continue;
            if (printed) os << "*";
            os << ring.var_name(i);
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

Polynomial Polynomial::parse(const RingContext& ring, const std::string& text,
                             const MonomialOrder& ord) {
    PrimeField F = ring.field();
    WorkMap w(DescMono{&ord});

    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; };
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("Polynomial::parse: " + why + " at offset " + std::to_string(pos));
    };

    skip_ws();
    if (pos == text.size()) fail("empty input");
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') { neg = text[pos] == '-'; ++pos; }

    while (true) {
        skip_ws();
        int64_t coef = 1;
        bool saw_any = false;
        Monomial m(ring.nvars());
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
                int64_t v = 0;
                while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
                    v = v * 10 + (text[pos] - '0');
                    if (v > (int64_t)1 << 40) fail("coefficient too large");
                    ++pos;
                }
                coef = (coef * (v % F.prime())) % F.prime();
                saw_any = true;
            } else if (pos < text.size() && std::isalpha((unsigned char)text[pos])) {
                size_t start = pos;
                while (pos < text.size() && (std::isalnum((unsigned char)text[pos]))) ++pos;
                std::string name = text.substr(start, pos - start);
                int idx = ring.var_index(name);
                if (idx < 0) fail("unknown variable '" + name + "'");
                int e = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos; skip_ws();
                    if (pos == text.size() || !std::isdigit((unsigned char)text[pos])) fail("missing exponent");
                    e = 0;
                    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
                        e = e * 10 + (text[pos] - '0');
                        if (e > kDegreeCap) fail("exponent exceeds degree cap");
                        ++pos;
                    }
                }
                m.set_exp(idx, m.exp(idx) + e);
                saw_any = true;
            } else {
                fail("expected a coefficient or variable");
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') { ++pos; continue; }
            expect_factor = false;
        }
        if (!saw_any) fail("empty term");
        uint32_t c = (uint32_t)(coef % F.prime());
        if (neg) c = F.neg(c);
        work_add_term(w, m, c, F);

        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] == '+') { neg = false; ++pos; }
        else if (text[pos] == '-') { neg = true; ++pos; }
        else fail("expected '+' or '-'");
    }
    return from_work(w);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const PrimeField& F, const MonomialOrder& ord) {
    WorkMap w(DescMono{&ord});
    for (const auto& t : f.terms()) work_add_term(w, t.mono, t.coef, F);

    std::vector<Term> rem;
    while (!w.empty()) {
        auto it = w.begin();
        Monomial m = it->first;
        uint32_t c = it->second;
        const Polynomial* g = nullptr;
        for (const auto& cand : basis) {
            if (!cand.is_zero() && cand.lead().mono.divides(m)) { g = &cand; break; }
        }
        if (!g) {
            rem.push_back({m, c});
            w.erase(it);
            continue;
        }
        Monomial q = m.div(g->lead().mono);
        uint32_t factor = F.div(c, g->lead().coef);
        for (const auto& t : g->terms())
            work_add_term(w, t.mono * q, F.neg(F.mul(factor, t.coef)), F);
    }
    return Polynomial(std::move(rem));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PrimeField& F,
                        const MonomialOrder& ord) {
    const Monomial l = Monomial::lcm(f.lead().mono, g.lead().mono);
    Polynomial a = Polynomial::mul_term(f, l.div(f.lead().mono), F.inv(f.lead().coef), F);
    Polynomial b = Polynomial::mul_term(g, l.div(g.lead().mono), F.inv(g.lead().coef), F);
    return Polynomial::sub(a, b, F, ord);
}

namespace {

struct Pair {
    int deg;
    Monomial lcm;
    int i, j;
};

struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Gebauer-Moeller update: add pairs (i, t) for the new element at index t,
// pruning with the lcm and coprimality criteria, and drop superseded old pairs.
void gm_update(std::set<Pair, PairLess>& pairs, const std::vector<Polynomial>& basis, int t) {
    const Monomial& lt = basis[(size_t)t].lead().mono;
    struct Cand { Monomial lcm; int i; bool alive; bool coprime; };
    std::vector<Cand> cands;
    cands.reserve((size_t)t);
    for (int i = 0; i < t; ++i) {
        const Monomial& li = basis[(size_t)i].lead().mono;
        cands.push_back({Monomial::lcm(li, lt), i, true, li.coprime(lt)});
    }
    // criterion M: drop (i,t) when some (j,t) has a strictly smaller lcm dividing it
    for (auto& a : cands) {
        if (!a.alive) continue;
        for (const auto& b : cands) {
            if (&a == &b || !b.alive) continue;
            if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) { a.alive = false; break; }
        }
    }
    // criterion F: keep one representative per lcm value
    for (size_t x = 0; x < cands.size(); ++x) {
        if (!cands[x].alive) continue;
        for (size_t y = x + 1; y < cands.size(); ++y) {
            if (!cands[y].alive) continue;
            if (cands[x].lcm == cands[y].lcm) {
                // prefer dropping via the product criterion if either side qualifies
                if (cands[x].coprime) { cands[x].alive = false; break; }
                cands[y].alive = false;
            }
        }
    }
    // criterion B: coprime leading terms reduce to zero
    for (auto& a : cands)
        if (a.alive && a.coprime) a.alive = false;

    // prune old pairs strictly dominated by the new element
    for (auto it = pairs.begin(); it != pairs.end();) {
        const Pair& p = *it;
        if (lt.divides(p.lcm) &&
            Monomial::lcm(basis[(size_t)p.i].lead().mono, lt) != p.lcm &&
            Monomial::lcm(basis[(size_t)p.j].lead().mono, lt) != p.lcm) {
            it = pairs.erase(it);
        } else {
            ++it;
        }
    }
    for (const auto& c : cands)
        if (c.alive) pairs.insert(Pair{c.lcm.degree(), c.lcm, c.i, t});
}

} // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const PrimeField& F,
                                   const MonomialOrder& ord) {
    std::vector<Polynomial> basis;
    for (auto& g : gens) {
        g.normalize(F, ord);
        if (!g.is_zero()) {
            g.make_monic(F);
            basis.push_back(std::move(g));
        }
    }

    std::set<Pair, PairLess> pairs(PairLess{&ord});
    for (int t = 1; t < (int)basis.size(); ++t) gm_update(pairs, basis, t);

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        Polynomial s = s_polynomial(basis[(size_t)p.i], basis[(size_t)p.j], F, ord);
        Polynomial r = normal_form(s, basis, F, ord);
        if (r.is_zero()) continue;
        r.make_monic(F);
        basis.push_back(std::move(r));
        gm_update(pairs, basis, (int)basis.size() - 1);
    }

    // minimalize: drop elements whose lead is divisible by another kept lead
    std::vector<size_t> idx(basis.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return ord.compare(basis[a].lead().mono, basis[b].lead().mono) < 0;
    });
    std::vector<Polynomial> kept;
    for (size_t k : idx) {
        bool redundant = false;
        for (const auto& h : kept)
            if (h.lead().mono.divides(basis[k].lead().mono)) { redundant = true; break; }
        if (!redundant) kept.push_back(basis[k]);
    }

    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    reduced.reserve(kept.size());
    for (size_t k = 0; k < kept.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != k) others.push_back(kept[j]);
        Polynomial r = normal_form(kept[k], others, F, ord);
        r.make_monic(F);
        if (!r.is_zero()) reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.lead().mono, b.lead().mono) < 0;
    });
    return reduced;
}

Polynomial exact_divide(const Polynomial& g, const Polynomial& f, const PrimeField& F,
                        const MonomialOrder& ord) {
    if (f.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    Polynomial r = g;
    r.normalize(F, ord);
    Polynomial fn = f;
    fn.normalize(F, ord);
    std::vector<Term> q;
    while (!r.is_zero()) {
        if (!fn.lead().mono.divides(r.lead().mono))
            throw std::domain_error("exact_divide: division is not exact");
        Monomial qm = r.lead().mono.div(fn.lead().mono);
        uint32_t qc = F.div(r.lead().coef, fn.lead().coef);
        q.push_back({qm, qc});
        r = Polynomial::sub(r, Polynomial::mul_term(fn, qm, qc, F), F, ord);
    }
    Polynomial out(std::move(q));
    out.normalize(F, ord);
    return out;
}

} // namespace bei
