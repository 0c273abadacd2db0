#pragma once

#include "bei/ideal.hpp"
#include "bei/resolution.hpp"

namespace bei::oracle {

/// Graded Betti numbers of S/J computed independently of the syzygy pipeline:
/// beta_{i,j}(S/J) = dim_k H_i(K ⊗ S/J)_j for the Koszul complex K on all
/// ring variables, evaluated strand by strand with sparse linear algebra over
/// F_p. Strands j - i = 0..max_strand are covered. Intended for small rings
/// (n <= 4 vertices); cost grows quickly with the variable count.
BettiTable koszul_betti(const Ideal& J, int max_strand);

/// Hilbert function of S/J at degree d: the number of standard monomials.
long hilbert_function(const Ideal& J, int d);

/// Rank of a sparse matrix over F_p; rows as (column, value) lists.
long sparse_rank_fp(std::vector<std::vector<std::pair<int, uint32_t>>> rows, const PrimeField& F);

} // namespace bei::oracle
