#include "koszul_oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace bei::oracle {

namespace {

// all monomials of degree d in nv variables, not divisible by any of lts
void enumerate_standard(std::vector<Monomial>& out, Monomial& cur, int var, int remaining,
                        const std::vector<Monomial>& lts) {
    if (var == cur.nvars() - 1) {
        cur.set_exp(var, remaining);
        bool standard = true;
        for (const auto& lt : lts)
            if (lt.divides(cur)) { standard = false; break; }
        if (standard) out.push_back(cur);
        cur.set_exp(var, 0);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur.set_exp(var, e);
        enumerate_standard(out, cur, var + 1, remaining - e, lts);
    }
    cur.set_exp(var, 0);
}

std::vector<Monomial> standard_monomials(const RingContext& ring,
                                         const std::vector<Monomial>& lts, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur(ring.nvars());
    if (ring.nvars() == 0) {
        if (d == 0) out.push_back(cur);
        return out;
    }
    enumerate_standard(out, cur, 0, d, lts);
    return out;
}

// NF of a monomial modulo a pure-binomial Groebner basis is a single monomial
// with coefficient 1; fall back to the general reducer and check.
Monomial monomial_normal_form(const Monomial& m, const std::vector<Polynomial>& gb,
                              const PrimeField& F, const MonomialOrder& ord) {
    Polynomial r = normal_form(Polynomial::term(m, 1), gb, F, ord);
    if (r.term_count() != 1 || r.lead().coef != 1)
        throw std::logic_error("koszul oracle: binomial reduction did not stay monomial");
    return r.lead().mono;
}

} // namespace

long sparse_rank_fp(std::vector<std::vector<std::pair<int, uint32_t>>> rows, const PrimeField& F) {
    // column -> indices of rows whose leading entry reached that column;
    // entries can go stale (row emptied or promoted) and are skipped lazily
    for (auto& row : rows) std::sort(row.begin(), row.end());

    std::map<int, std::vector<size_t>> by_col;
    std::vector<bool> done(rows.size(), false);
    for (size_t r = 0; r < rows.size(); ++r)
        if (!rows[r].empty()) by_col[rows[r][0].first].push_back(r);

    long rank = 0;

    // eliminate in ascending column order, shortest live row as pivot
    while (!by_col.empty()) {
        int col = by_col.begin()->first;
        size_t pivot = SIZE_MAX;
        for (size_t r : by_col.begin()->second) {
            if (done[r] || rows[r].empty() || rows[r][0].first != col) continue;
            if (pivot == SIZE_MAX || rows[r].size() < rows[pivot].size()) pivot = r;
        }
        if (pivot == SIZE_MAX) {
            by_col.erase(by_col.begin());
            continue;
        }
        std::vector<size_t> waiting = std::move(by_col.begin()->second);
        by_col.erase(by_col.begin());
        uint32_t pinv = F.inv(rows[pivot][0].second);
        for (size_t r : waiting) {
            if (r == pivot || done[r] || rows[r].empty() || rows[r][0].first != col) continue;
            uint32_t factor = F.mul(rows[r][0].second, pinv);
            // row_r -= factor * pivot_row (merge of sorted sparse rows)
            std::vector<std::pair<int, uint32_t>> merged;
            merged.reserve(rows[r].size() + rows[pivot].size());
            size_t a = 0, b = 0;
            const auto& pr = rows[pivot];
            const auto& rr = rows[r];
            while (a < rr.size() && b < pr.size()) {
                if (rr[a].first < pr[b].first) merged.push_back(rr[a++]);
                else if (rr[a].first > pr[b].first)
                    merged.push_back({pr[b].first, F.neg(F.mul(factor, pr[b].second))}), ++b;
                else {
                    uint32_t v = F.sub(rr[a].second, F.mul(factor, pr[b].second));
                    if (v) merged.push_back({rr[a].first, v});
                    ++a; ++b;
                }
            }
            while (a < rr.size()) merged.push_back(rr[a++]);
            while (b < pr.size()) merged.push_back({pr[b].first, F.neg(F.mul(factor, pr[b].second))}), ++b;
            rows[r] = std::move(merged);
            if (!rows[r].empty()) by_col[rows[r][0].first].push_back(r);
        }
        done[pivot] = true;
        ++rank;
    }
    return rank;
}

long hilbert_function(const Ideal& J, int d) {
    MonomialOrder ord = J.ring().degrevlex();
    std::vector<Monomial> lts;
    for (const auto& g : J.groebner(ord)) lts.push_back(g.lead().mono);
    return (long)standard_monomials(J.ring(), lts, d).size();
}

BettiTable koszul_betti(const Ideal& J, int max_strand) {
    const RingContext& ring = J.ring();
    PrimeField F = ring.field();
    MonomialOrder ord = ring.degrevlex();
    int nv = ring.nvars();
    if (nv > 12) throw CapacityError("koszul_betti: ring too large for the oracle");

    std::vector<Monomial> lts;
    for (const auto& g : J.groebner(ord)) {
        if (g.lead().mono.is_one()) throw std::domain_error("koszul_betti: unit ideal");
        lts.push_back(g.lead().mono);
    }

    // standard monomial bases and multiplication-by-variable tables per degree
    int dmax = max_strand + 1;
    std::vector<std::vector<Monomial>> std_mons((size_t)dmax + 1);
    std::vector<std::unordered_map<Monomial, int, MonomialHash>> index((size_t)dmax + 1);
    for (int d = 0; d <= dmax; ++d) {
        std_mons[(size_t)d] = standard_monomials(ring, lts, d);
        for (size_t i = 0; i < std_mons[(size_t)d].size(); ++i)
            index[(size_t)d][std_mons[(size_t)d][i]] = (int)i;
    }
    // mulvar[d][l][m] = index in degree d+1 of NF(x_l * m)
    std::vector<std::vector<std::vector<int>>> mulvar((size_t)dmax);
    for (int d = 0; d < dmax; ++d) {
        mulvar[(size_t)d].assign((size_t)nv, {});
        for (int l = 0; l < nv; ++l) {
            auto& tab = mulvar[(size_t)d][(size_t)l];
            tab.resize(std_mons[(size_t)d].size());
            for (size_t mi = 0; mi < std_mons[(size_t)d].size(); ++mi) {
                Monomial prod = std_mons[(size_t)d][mi] * Monomial::variable(nv, l);
                Monomial nf = monomial_normal_form(prod, J.groebner(ord), F, ord);
                tab[mi] = index[(size_t)d + 1].at(nf);
            }
        }
    }

    // subsets of {0..nv-1} grouped by popcount, with positions for indexing
    std::vector<std::vector<uint32_t>> subsets((size_t)nv + 1);
    std::vector<std::unordered_map<uint32_t, int>> subset_index((size_t)nv + 1);
    for (uint32_t mask = 0; mask < (1u << nv); ++mask) {
        int pc = __builtin_popcount(mask);
        subset_index[(size_t)pc][mask] = (int)subsets[(size_t)pc].size();
        subsets[(size_t)pc].push_back(mask);
    }

    // differential d_{i,j} : Lambda^i (x) (S/J)_{j-i} -> Lambda^{i-1} (x) (S/J)_{j-i+1}
    // as sparse rows indexed by target basis, built column by column.
    auto rank_of_differential = [&](int i, int strand) -> long {
        if (i < 1 || i > nv) return 0;
        if (strand < 0 || strand + 1 > dmax) return 0;
        size_t ncols = subsets[(size_t)i].size() * std_mons[(size_t)strand].size();
        size_t target_mons = std_mons[(size_t)strand + 1].size();
        if (ncols == 0 || subsets[(size_t)i - 1].empty() || target_mons == 0) return 0;
        std::unordered_map<long, std::vector<std::pair<int, uint32_t>>> cols;
        size_t nstd = std_mons[(size_t)strand].size();
        for (size_t si = 0; si < subsets[(size_t)i].size(); ++si) {
            uint32_t T = subsets[(size_t)i][si];
            for (size_t mi = 0; mi < nstd; ++mi) {
                long colid = (long)(si * nstd + mi);
                int pos = 0;
                for (int l = 0; l < nv; ++l) {
                    if (!((T >> l) & 1)) continue;
                    uint32_t T2 = T & ~(1u << l);
                    int s2 = subset_index[(size_t)i - 1].at(T2);
                    int m2 = mulvar[(size_t)strand][(size_t)l][mi];
                    long rowid = (long)((size_t)s2 * target_mons + (size_t)m2);
                    uint32_t coef = (pos % 2 == 0) ? 1u : F.neg(1u);
                    cols[colid].push_back({(int)rowid, coef});
                    ++pos;
                }
            }
        }
        // transpose into rows for the eliminator
        std::unordered_map<int, std::vector<std::pair<int, uint32_t>>> rowmap;
        for (const auto& [colid, entries] : cols)
            for (const auto& [rowid, v] : entries) rowmap[rowid].push_back({(int)colid, v});
        std::vector<std::vector<std::pair<int, uint32_t>>> rows;
        rows.reserve(rowmap.size());
        for (auto& [rid, entries] : rowmap) rows.push_back(std::move(entries));
        return sparse_rank_fp(std::move(rows), F);
    };

    BettiTable t;
    t.module_tag = "S/J";
    for (int i = 0; i <= nv; ++i) {
        for (int strand = 0; strand <= max_strand; ++strand) {
            int j = i + strand;
            long dim = (long)subsets[(size_t)i].size() * (long)std_mons[(size_t)strand].size();
            if (dim == 0) continue;
            long rk_out = rank_of_differential(i, strand);
            long rk_in = rank_of_differential(i + 1, strand - 1);
            long beta = dim - rk_out - rk_in;
            if (beta < 0) throw std::logic_error("koszul_betti: negative homology dimension");
            if (beta > 0) t.entries[{i, j}] = beta;
        }
    }
    return t;
}

} // namespace bei::oracle
