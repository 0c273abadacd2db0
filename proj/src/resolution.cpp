#include "bei/resolution.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <memory>
#include <iostream>
#include <sstream>

namespace bei {

namespace {

// Internal form of a chain complex of free modules with sparse polynomial
// matrices; d[k] maps F_k (columns) to F_{k-1} (rows), F_0 = S^1.
struct Complex {
    std::vector<std::vector<int>> twists;                         // twists[k] = F_k
    std::vector<std::vector<std::map<int, Polynomial>>> d;        // d[k][col][row]
};

std::map<int, Polynomial> vecpoly_to_column(const VecPoly& v, const PrimeField& F,
                                            const MonomialOrder& ord) {
    std::map<int, std::vector<Term>> rows;
    for (const auto& t : v.terms) rows[t.comp].push_back({t.mono, t.coef});
    std::map<int, Polynomial> col;
    for (auto& [r, ts] : rows) {
        Polynomial p(std::move(ts));
        p.normalize(F, ord);
        if (!p.is_zero()) col.emplace(r, std::move(p));
    }
    return col;
}

// Cancel the unit entry at (row r, col c) of d[k] via the Schur complement,
// removing one basis element from F_k and one from F_{k-1}.
void cancel_unit(Complex& cx, const PrimeField& F, const MonomialOrder& ord, size_t k, int r,
                 int c) {
    auto& A = cx.d[k];
    const std::map<int, Polynomial> colc = A[(size_t)c];
    uint32_t u = colc.at(r).lead().coef;
    uint32_t uinv = F.inv(u);

    for (size_t j = 0; j < A.size(); ++j) {
        if ((int)j == c) continue;
        auto itr = A[j].find(r);
        if (itr == A[j].end()) continue;
        Polynomial w = itr->second;
        w.scale(uinv, F);
        for (const auto& [i, pic] : colc) {
            if (i == r) continue;
            Polynomial delta = Polynomial::mul(pic, w, F, ord);
            auto iti = A[j].find(i);
            if (iti == A[j].end()) {
                Polynomial nd = Polynomial::negate(delta, F);
                if (!nd.is_zero()) A[j].emplace(i, std::move(nd));
            } else {
                iti->second = Polynomial::sub(iti->second, delta, F, ord);
                if (iti->second.is_zero()) A[j].erase(iti);
            }
        }
        A[j].erase(r);
    }
    A.erase(A.begin() + c);

    // drop row r of d[k] and reindex rows above it
    for (auto& col : A) {
        std::map<int, Polynomial> next;
        for (auto& [i, p] : col) next.emplace(i > r ? i - 1 : i, std::move(p));
        col = std::move(next);
    }
    cx.twists[k].erase(cx.twists[k].begin() + c);
    cx.twists[k - 1].erase(cx.twists[k - 1].begin() + r);

    // F_{k-1} lost basis element r: delete the matching column of d[k-1]
    if (k >= 2) cx.d[k - 1].erase(cx.d[k - 1].begin() + r);

    // F_k lost basis element c: delete row c of d[k+1]
    if (k + 1 < cx.d.size()) {
        for (auto& col : cx.d[k + 1]) {
            col.erase(c);
            std::map<int, Polynomial> next;
            for (auto& [i, p] : col) next.emplace(i > c ? i - 1 : i, std::move(p));
            col = std::move(next);
        }
    }
}

// Cancel degree-zero entries. A cancellation only creates new entries inside
// its own matrix (neighbors just lose a row or column), so one fixpoint pass
// per level suffices; levels are processed from the top of the complex down.
void minimize_complex(Complex& cx, const PrimeField& F, const MonomialOrder& ord) {
    for (size_t k = cx.d.size(); k-- > 1;) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t c = 0; c < cx.d[k].size() && !changed; ++c) {
                for (const auto& [r, p] : cx.d[k][c]) {
                    if (p.is_constant()) {
                        cancel_unit(cx, F, ord, k, r, (int)c);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    // drop trailing zero levels
    while (!cx.d.empty() && cx.d.back().empty()) {
        cx.d.pop_back();
        cx.twists.pop_back();
    }
}

std::vector<GradedModulePresentation> complex_to_presentations(const Complex& cx) {
    std::vector<GradedModulePresentation> out;
    for (size_t k = 1; k < cx.d.size(); ++k) {
        GradedModulePresentation P;
        P.target_twists = cx.twists[k - 1];
        for (size_t c = 0; c < cx.d[k].size(); ++c) {
            std::vector<Polynomial> row(P.target_twists.size());
            for (const auto& [r, p] : cx.d[k][c]) row[(size_t)r] = p;
            P.relations.push_back(std::move(row));
            P.relation_degrees.push_back(cx.twists[k][c]);
        }
        out.push_back(std::move(P));
    }
    return out;
}

} // namespace

int BettiTable::max_homological_index() const {
    int m = 0;
    for (const auto& [ij, b] : entries)
        if (b != 0) m = std::max(m, ij.first);
    return m;
}

int BettiTable::max_strand() const {
    int m = -1;
    for (const auto& [ij, b] : entries)
        if (b != 0 && ij.first >= 1) m = std::max(m, ij.second - ij.first);
    return m;
}

long BettiTable::total_rank(int i) const {
    long s = 0;
    for (const auto& [ij, b] : entries)
        if (ij.first == i) s += b;
    return s;
}

BettiTable BettiTable::shifted_to_ideal() const {
    BettiTable t;
    t.module_tag = "J";
    for (const auto& [ij, b] : entries)
        if (ij.first >= 1) t.entries[{ij.first - 1, ij.second}] = b;
    return t;
}

std::string BettiTable::to_text() const {
    int imax = max_homological_index();
    int smin = 0, smax = 0;
    for (const auto& [ij, b] : entries) {
        if (b == 0) continue;
        smin = std::min(smin, ij.second - ij.first);
        smax = std::max(smax, ij.second - ij.first);
    }
    std::ostringstream os;
    auto cell = [&](long v) {
        std::string s = v == 0 ? "." : std::to_string(v);
        os << " ";
        for (size_t pad = s.size(); pad < 6; ++pad) os << " ";
        os << s;
    };
    os << "      ";
    for (int i = 0; i <= imax; ++i) {
        std::string s = std::to_string(i);
        os << " ";
        for (size_t pad = s.size(); pad < 6; ++pad) os << " ";
        os << s;
    }
    os << "\ntotal:";
    for (int i = 0; i <= imax; ++i) cell(total_rank(i));
    os << "\n";
    for (int s = smin; s <= smax; ++s) {
        std::string lbl = std::to_string(s) + ":";
        for (size_t pad = lbl.size(); pad < 6; ++pad) os << " ";
        os << lbl;
        for (int i = 0; i <= imax; ++i) cell(get(i, i + s));
        os << "\n";
    }
    return os.str();
}

std::string BettiTable::to_csv() const {
    int imax = max_homological_index();
    int smax = 0;
    for (const auto& [ij, b] : entries)
        if (b != 0) smax = std::max(smax, ij.second - ij.first);
    std::ostringstream os;
    os << "i";
    for (int s = 0; s <= smax; ++s) os << "," << s;
    os << "\n";
    for (int i = 0; i <= imax; ++i) {
        os << i;
        for (int s = 0; s <= smax; ++s) {
            os << ",";
            long v = get(i, i + s);
            if (v != 0) os << v;
        }
        os << "\n";
    }
    return os.str();
}

GradedModulePresentation syzygies(const GradedModulePresentation& P, const RingContext& ring,
                                  const MonomialOrder& ord) {
    PrimeField F = ring.field();
    std::vector<int> twists = P.target_twists;
    ModuleOrder mord{&ord, &twists};

    std::vector<VecPoly> gens;
    for (const auto& row : P.relations) {
        if (row.size() != P.target_twists.size())
            throw std::invalid_argument("syzygies: relation width does not match target rank");
        VecPoly v;
        for (size_t c = 0; c < row.size(); ++c)
            for (const auto& t : row[c].terms()) v.terms.push_back({(int)c, t.mono, t.coef});
        vec_normalize(v, F, mord);
        if (!v.is_homogeneous(twists))
            throw std::invalid_argument("syzygies: relations must be homogeneous");
        gens.push_back(std::move(v));
    }

    size_t nrel = gens.size();
    std::vector<VecPoly> nonzero;
    std::vector<size_t> nonzero_at;
    for (size_t i = 0; i < nrel; ++i)
        if (!gens[i].is_zero()) {
            nonzero.push_back(gens[i]);
            nonzero_at.push_back(i);
        }

    // Extend to a Groebner basis, tracking each basis element as a combination
    // of the input relations so syzygies can be pulled back.
    std::vector<VecPoly> basis = nonzero;
    std::vector<std::vector<Polynomial>> coords; // coords[b][input]
    for (size_t b = 0; b < basis.size(); ++b) {
        std::vector<Polynomial> row(nrel);
        row[nonzero_at[b]] = Polynomial::constant(ring, 1);
        coords.push_back(std::move(row));
        vec_make_monic(basis[b], F);
        // scale coords to match the monic normalization
        uint32_t lc = nonzero[b].lead().coef;
        if (lc != 1) {
            uint32_t inv = F.inv(lc);
            for (auto& p : coords.back()) p.scale(inv, F);
        }
    }

    // plain Buchberger with coordinate tracking (no pair pruning; sizes here
    // are small and skipped pairs would still need their syzygies)
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            if (basis[i].lead().comp != basis[j].lead().comp) continue;
            const Monomial l = Monomial::lcm(basis[i].lead().mono, basis[j].lead().mono);
            Monomial ui = l.div(basis[i].lead().mono);
            Monomial uj = l.div(basis[j].lead().mono);
            VecPoly s = vec_sub(vec_mul_term(basis[i], ui, 1, F), vec_mul_term(basis[j], uj, 1, F),
                                F, mord);
            std::vector<Polynomial> q;
            VecPoly r = vec_normal_form(s, basis, F, mord, &q);
            if (r.is_zero()) continue;
            std::vector<Polynomial> rc(nrel);
            for (size_t c = 0; c < nrel; ++c) {
                Polynomial acc = Polynomial::sub(
                    Polynomial::mul_term(coords[i][c], ui, 1, F),
                    Polynomial::mul_term(coords[j][c], uj, 1, F), F, ord);
                for (size_t k = 0; k < basis.size(); ++k)
                    if (!q[k].is_zero() && !coords[k][c].is_zero())
                        acc = Polynomial::sub(acc, Polynomial::mul(q[k], coords[k][c], F, ord), F,
                                              ord);
                rc[c] = std::move(acc);
            }
            uint32_t lc = r.lead().coef;
            vec_make_monic(r, F);
            if (lc != 1) {
                uint32_t inv = F.inv(lc);
                for (auto& p : rc) p.scale(inv, F);
            }
            basis.push_back(std::move(r));
            coords.push_back(std::move(rc));
        }
    }

    // division matrix: input_i = sum_k B[i][k] basis_k
    std::vector<std::vector<Polynomial>> B;
    for (size_t i = 0; i < nrel; ++i) {
        std::vector<Polynomial> q;
        VecPoly r = vec_normal_form(gens[i], basis, F, mord, &q);
        if (!r.is_zero()) throw std::logic_error("syzygies: input failed to reduce by its own basis");
        B.push_back(std::move(q));
    }

    std::vector<VecPoly> syz = schreyer_syzygies(basis, F, mord, nullptr);

    GradedModulePresentation out;
    out.target_twists.reserve(nrel);
    for (size_t i = 0; i < nrel; ++i) {
        int d = gens[i].is_zero() ? 0 : gens[i].degree(twists);
        out.target_twists.push_back(d);
    }

    auto push_relation = [&](const std::vector<Polynomial>& row) {
        bool zero = true;
        int rdeg = 0;
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c].is_zero()) continue;
            zero = false;
            rdeg = row[c].lead().mono.degree() + out.target_twists[c];
        }
        if (zero) return;
        out.relations.push_back(row);
        out.relation_degrees.push_back(rdeg);
    };

    // pulled-back Schreyer syzygies: s |-> s . coords
    for (const auto& s : syz) {
        std::vector<Polynomial> row(nrel);
        for (const auto& t : s.terms) {
            for (size_t c = 0; c < nrel; ++c) {
                if (coords[(size_t)t.comp][c].is_zero()) continue;
                row[c] = Polynomial::add(
                    row[c], Polynomial::mul_term(coords[(size_t)t.comp][c], t.mono, t.coef, F), F,
                    ord);
            }
        }
        push_relation(row);
    }
    // identity-correction syzygies: columns of I - B . coords
    for (size_t i = 0; i < nrel; ++i) {
        std::vector<Polynomial> row(nrel);
        row[i] = Polynomial::constant(ring, 1);
        for (size_t k = 0; k < basis.size(); ++k) {
            if (B[i][k].is_zero()) continue;
            for (size_t c = 0; c < nrel; ++c) {
                if (coords[k][c].is_zero()) continue;
                row[c] = Polynomial::sub(row[c], Polynomial::mul(B[i][k], coords[k][c], F, ord), F,
                                         ord);
            }
        }
        push_relation(row);
    }
    return out;
}

std::vector<GradedModulePresentation> minimal_free_resolution(const Ideal& I) {
    return minimal_free_resolution(I, I.ring().degrevlex());
}

std::vector<GradedModulePresentation> minimal_free_resolution(const Ideal& I,
                                                              const MonomialOrder& ord) {
    const RingContext& ring = I.ring();
    PrimeField F = ring.field();

    for (const auto& g : I.generators())
        if (!g.is_homogeneous())
            throw std::invalid_argument("minimal_free_resolution: ideal must be homogeneous");
    if (I.is_zero_ideal()) return {};

    const auto& gb = I.groebner(ord);
    for (const auto& g : gb)
        if (g.lead().mono.is_one())
            throw std::domain_error("minimal_free_resolution: ideal is not proper");

    Complex cx;
    cx.twists.push_back({0}); // F_0 = S
    cx.d.push_back({});       // placeholder for d_0

    const bool trace = std::getenv("BEI_TRACE") != nullptr;
    auto tick = std::chrono::steady_clock::now();
    auto lap = [&] {
        auto now = std::chrono::steady_clock::now();
        double s = std::chrono::duration<double>(now - tick).count();
        tick = now;
        return s;
    };

    // Schreyer tower: each level's syzygies are computed against the induced
    // order of the level below and are then a Groebner basis themselves, so
    // no further basis completion is needed on the way up.
    std::vector<int> twists0 = {0};
    ModuleOrder base{&ord, &twists0, nullptr, nullptr};
    std::vector<VecPoly> current;
    for (const auto& g : gb) {
        VecPoly v;
        for (const auto& t : g.terms()) v.terms.push_back({0, t.mono, t.coef});
        current.push_back(std::move(v));
    }

    std::vector<std::unique_ptr<SchreyerLevel>> tower;
    const ModuleOrder* cur_order = &base;
    // sentinel far above any observed tower length; the minimized output is
    // what the syzygy-theorem bound applies to
    const size_t max_levels = 64;
    for (size_t k = 1; k <= max_levels; ++k) {
        tower.push_back(std::make_unique<SchreyerLevel>(current, *cur_order));
        const ModuleOrder& next_order = tower.back()->order;
        std::vector<VecPoly> syz = schreyer_syzygies(current, F, *cur_order, &next_order);
        if (trace)
            std::cerr << "level " << k << ": basis " << current.size() << ", syzygies "
                      << syz.size() << "  (" << lap() << " s)" << std::endl;

        cx.twists.push_back({});
        cx.d.push_back({});
        for (size_t c = 0; c < current.size(); ++c) {
            cx.twists[k].push_back(tower.back()->twists[c]);
            cx.d[k].push_back(vecpoly_to_column(current[c], F, ord));
        }
        if (syz.empty()) break;
        current = std::move(syz);
        cur_order = &next_order;
        if (k == max_levels)
            throw std::logic_error("minimal_free_resolution: exceeded the syzygy length bound");
    }

    minimize_complex(cx, F, ord);
    if (trace) {
        std::cerr << "minimized ranks:";
        for (const auto& tw : cx.twists) std::cerr << " " << tw.size();
        std::cerr << "  (" << lap() << " s)" << std::endl;
    }

    return complex_to_presentations(cx);
}

BettiTable betti_table(const Ideal& I) { return betti_table(I, I.ring().degrevlex()); }

BettiTable betti_table(const Ideal& I, const MonomialOrder& ord) {
    BettiTable t;
    t.module_tag = "S/J";
    t.entries[{0, 0}] = 1;
    auto res = minimal_free_resolution(I, ord);
    for (size_t k = 0; k < res.size(); ++k)
        for (int d : res[k].relation_degrees) t.entries[{(int)k + 1, d}] += 1;
    return t;
}

int regularity(const Ideal& I) {
    if (I.is_zero_ideal())
        throw std::domain_error("regularity: undefined for the zero ideal");
    BettiTable t = betti_table(I);
    int s = t.max_strand();
    if (s < 0) throw std::domain_error("regularity: ideal has no generators");
    return s + 1;
}

bool has_linear_resolution(const Ideal& I) {
    BettiTable t = betti_table(I);
    int d = -1;
    for (const auto& [ij, b] : t.entries) {
        if (ij.first != 1 || b == 0) continue;
        if (d < 0) d = ij.second;
        else if (d != ij.second)
            throw std::domain_error("has_linear_resolution: generators of mixed degree");
    }
    if (d < 0) throw std::domain_error("has_linear_resolution: zero ideal");
    for (const auto& [ij, b] : t.entries) {
        if (ij.first < 1 || b == 0) continue;
        if (ij.second != ij.first - 1 + d) return false;
    }
    return true;
}

bool resolution_is_complex(const std::vector<GradedModulePresentation>& res,
                           const RingContext& ring) {
    PrimeField F = ring.field();
    MonomialOrder ord = ring.degrevlex();
    for (size_t k = 1; k < res.size(); ++k) {
        const auto& A = res[k - 1]; // d_k : F_k -> F_{k-1}
        const auto& B = res[k];     // d_{k+1} : F_{k+1} -> F_k
        for (const auto& brow : B.relations) {
            // composite of brow (element of F_k) with d_k
            std::vector<Polynomial> acc(A.target_twists.size());
            for (size_t c = 0; c < brow.size(); ++c) {
                if (brow[c].is_zero()) continue;
                for (size_t r = 0; r < A.target_twists.size(); ++r) {
                    if (A.relations[c][r].is_zero()) continue;
                    acc[r] = Polynomial::add(
                        acc[r], Polynomial::mul(brow[c], A.relations[c][r], F, ord), F, ord);
                }
            }
            for (const auto& p : acc)
                if (!p.is_zero()) return false;
        }
    }
    return true;
}

bool resolution_is_minimal(const std::vector<GradedModulePresentation>& res) {
    for (const auto& P : res)
        for (const auto& row : P.relations)
            for (const auto& p : row)
                if (p.is_constant()) return false;
    return true;
}

} // namespace bei
