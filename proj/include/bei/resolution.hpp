#pragma once

#include <map>
#include <string>
#include <vector>

#include "bei/ideal.hpp"
#include "bei/module_gb.hpp"

namespace bei {

/// Presentation of a graded module: a free target F = sum S(-twist) and a list
/// of homogeneous relations, each given by its row of entries over F's basis.
struct GradedModulePresentation {
    std::vector<int> target_twists;
    std::vector<std::vector<Polynomial>> relations; // relations[r][c], c over target basis
    std::vector<int> relation_degrees;

    size_t target_rank() const { return target_twists.size(); }
    size_t relation_count() const { return relations.size(); }
};

/// Graded Betti numbers beta_{i,j}; entries only where nonzero.
struct BettiTable {
    std::map<std::pair<int, int>, long> entries; // (i, j) -> rank
    std::string module_tag = "S/J";

    long get(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    int max_homological_index() const;
    /// max j - i over nonzero entries with i >= 1; -1 when there are none.
    int max_strand() const;
    long total_rank(int i) const;

    /// Table of the ideal as a module: beta_{i,j}(J) = beta_{i+1,j}(S/J).
    BettiTable shifted_to_ideal() const;

    bool operator==(const BettiTable& o) const { return entries == o.entries; }

    std::string to_text() const; // Macaulay-style: rows j-i, columns i
    std::string to_csv() const;  // rows i, columns j-i
};

/// First syzygy module of the relation set of P. The relations are extended to
/// a module Groebner basis internally; syzygies are lifted back to the
/// original relation list, so the output presents Syz(relations of P).
GradedModulePresentation syzygies(const GradedModulePresentation& P, const RingContext& ring,
                                  const MonomialOrder& ord);

/// Minimal graded free resolution of S/I for a homogeneous proper ideal:
/// element k presents the map F_k -> F_{k-1}, with F_0 = S. The zero ideal
/// yields an empty list (S is free). Differential entries lie in the maximal
/// ideal; length is bounded by the number of ring variables. The internal
/// order defaults to degrevlex and never changes the Betti numbers.
std::vector<GradedModulePresentation> minimal_free_resolution(const Ideal& I);
std::vector<GradedModulePresentation> minimal_free_resolution(const Ideal& I,
                                                              const MonomialOrder& ord);

/// beta_{i,j}(S/I) read off the minimized resolution.
BettiTable betti_table(const Ideal& I);
BettiTable betti_table(const Ideal& I, const MonomialOrder& ord);

/// Castelnuovo-Mumford regularity of the module I (not of S/I):
/// reg(I) = max{j - i : beta_{i,j}(S/I) != 0, i >= 1} + 1.
/// The zero ideal has no regularity and raises a domain error.
int regularity(const Ideal& I);

/// True iff I, generated in a single degree d, has beta_{i,j}(I) = 0 for all
/// j != i + d. Mixed minimal generator degrees raise a domain error.
bool has_linear_resolution(const Ideal& I);

/// Exactness check: d_k . d_{k+1} = 0 for consecutive presentations; used by
/// tests and assertions.
bool resolution_is_complex(const std::vector<GradedModulePresentation>& res,
                           const RingContext& ring);

/// No differential entry is a nonzero constant.
bool resolution_is_minimal(const std::vector<GradedModulePresentation>& res);

} // namespace bei
