#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "bei/poly.hpp"

namespace bei {

/// Finite list of generators in a RingContext, with lazily cached reduced
/// Groebner bases keyed by monomial order. Zero generators are dropped on
/// construction. The cache is the only mutable state and is mutex-guarded.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingContext ring, std::vector<Polynomial> gens);

    Ideal(const Ideal& o);
    Ideal& operator=(const Ideal& o);
    Ideal(Ideal&& o) noexcept;
    Ideal& operator=(Ideal&& o) noexcept;

    const RingContext& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    /// Reduced Groebner basis for ord; computed once per order and cached.
    const std::vector<Polynomial>& groebner(const MonomialOrder& ord) const;

private:
    RingContext ring_;
    std::vector<Polynomial> gens_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::vector<Polynomial>> gb_cache_;
};

/// Reduced Groebner basis of I (degrevlex unless an order is given).
const std::vector<Polynomial>& groebner_basis(const Ideal& I, const MonomialOrder& ord);

/// f mod the reduced Groebner basis of I under degrevlex.
bool ideal_membership(const Polynomial& f, const Ideal& I);

/// Equality of ideals via reduced Groebner bases; requires the same ring.
bool ideal_equal(const Ideal& I, const Ideal& J);

bool ideal_contains(const Ideal& I, const Ideal& J); // J subset of I

/// I cap J via one auxiliary variable t and a block elimination order on
/// t*I + (1-t)*J. Output generators live in the original ring; when both
/// inputs are homogeneous the generators are split into homogeneous parts.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

/// I : f = { g : g*f in I }, computed as (I cap (f)) / f.
Ideal ideal_colon(const Ideal& I, const Polynomial& f);

/// Krull dimension of S/I: the largest size of a variable subset meeting the
/// support of no minimal generator of the degrevlex leading-term ideal.
int krull_dim(const Ideal& I);

/// 2n - krull_dim(I) in the ambient ring of I.
int height_of(const Ideal& I);

} // namespace bei
