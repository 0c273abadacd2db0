#pragma once

#include <cstdint>
#include <stdexcept>

namespace bei {

/// Arithmetic in the prime field F_p. Values are canonical representatives in [0, p).
class PrimeField {
public:
    explicit PrimeField(uint32_t p) : p_(p) {
        if (!is_prime(p)) throw std::domain_error("PrimeField: modulus " + std::to_string(p) + " is not prime");
    }

    uint32_t prime() const { return p_; }

    uint32_t reduce(int64_t x) const {
        int64_t r = x % (int64_t)p_;
        if (r < 0) r += p_;
        return (uint32_t)r;
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const { return (uint32_t)((uint64_t)a * b % p_); }

    // Multiplicative inverse via extended Euclid; a must be nonzero mod p.
    uint32_t inv(uint32_t a) const {
        a %= p_;
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        int64_t t = 0, newt = 1;
        int64_t r = p_, newr = a;
        while (newr != 0) {
            int64_t q = r / newr;
            int64_t tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        if (t < 0) t += p_;
        return (uint32_t)t;
    }

    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    static bool is_prime(uint32_t p) {
        if (p < 2) return false;
        if (p % 2 == 0) return p == 2;
        for (uint32_t d = 3; (uint64_t)d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    uint32_t p_;
};

} // namespace bei
