#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

#include "bei/field.hpp"

namespace bei {

inline constexpr int kMaxVars = 24;
inline constexpr int kDegreeCap = 64;

/// Thrown when an input exceeds a configured size ceiling (census ceiling,
/// variable-count limit, subset-enumeration bounds). CLI maps it to exit code 3.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Power product in a fixed number of ring variables. Exponents are small
/// integers; the total degree is cached and capped at kDegreeCap.
class Monomial {
public:
    Monomial() { exp_.fill(0); }

    explicit Monomial(int nvars) : nv_((uint8_t)nvars) {
        if (nvars < 0 || nvars > kMaxVars) throw CapacityError("Monomial: variable count out of range");
        exp_.fill(0);
    }

    static Monomial variable(int nvars, int idx, int power = 1) {
        Monomial m(nvars);
        m.set_exp(idx, power);
        return m;
    }

    int nvars() const { return nv_; }
    int degree() const { return deg_; }
    int exp(int i) const { return exp_[(size_t)i]; }

    void set_exp(int i, int e) {
        if (i < 0 || i >= nv_) throw std::out_of_range("Monomial: variable index");
        deg_ = (uint16_t)(deg_ - exp_[(size_t)i] + e);
        exp_[(size_t)i] = (uint8_t)e;
        if (deg_ > kDegreeCap) throw std::overflow_error("Monomial: degree cap exceeded");
    }

    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(nv_);
        int d = deg_ + o.deg_;
        if (d > kDegreeCap) throw std::overflow_error("Monomial: degree cap exceeded");
        for (int i = 0; i < nv_; ++i) r.exp_[(size_t)i] = (uint8_t)(exp_[(size_t)i] + o.exp_[(size_t)i]);
        r.deg_ = (uint16_t)d;
        return r;
    }

    bool divides(const Monomial& m) const {
        if (deg_ > m.deg_) return false;
        for (int i = 0; i < nv_; ++i)
            if (exp_[(size_t)i] > m.exp_[(size_t)i]) return false;
        return true;
    }

    // this / d, assuming d | this.
    Monomial div(const Monomial& d) const {
        Monomial r(nv_);
        for (int i = 0; i < nv_; ++i) r.exp_[(size_t)i] = (uint8_t)(exp_[(size_t)i] - d.exp_[(size_t)i]);
        r.deg_ = (uint16_t)(deg_ - d.deg_);
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r((int)a.nv_);
        int d = 0;
        for (int i = 0; i < a.nv_; ++i) {
            uint8_t e = a.exp_[(size_t)i] > b.exp_[(size_t)i] ? a.exp_[(size_t)i] : b.exp_[(size_t)i];
            r.exp_[(size_t)i] = e;
            d += e;
        }
        if (d > kDegreeCap) throw std::overflow_error("Monomial: degree cap exceeded");
        r.deg_ = (uint16_t)d;
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (int i = 0; i < nv_; ++i)
            if (exp_[(size_t)i] && o.exp_[(size_t)i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const {
        return nv_ == o.nv_ && deg_ == o.deg_ &&
               std::memcmp(exp_.data(), o.exp_.data(), (size_t)nv_) == 0;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (int i = 0; i < nv_; ++i) {
            h ^= exp_[(size_t)i];
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::array<uint8_t, kMaxVars> exp_;
    uint8_t nv_ = 0;
    uint16_t deg_ = 0;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Term order on monomials. Lex uses x_1 > ... > x_n > y_1 > ... > y_n
/// (variable index 0 is most significant). The elimination order puts the
/// trailing aux block first, degrevlex inside each block.
struct MonomialOrder {
    enum class Kind { DegRevLex, Lex, ElimBlock };

    Kind kind = Kind::DegRevLex;
    int nmain = 0; // size of the main block
    int naux = 0;  // trailing aux block, compared first under ElimBlock

    static MonomialOrder degrevlex(int nvars) { return {Kind::DegRevLex, nvars, 0}; }
    static MonomialOrder lex(int nvars) { return {Kind::Lex, nvars, 0}; }
    static MonomialOrder elim(int nmain, int naux) { return {Kind::ElimBlock, nmain, naux}; }

    int nvars() const { return nmain + naux; }

    // <0, 0, >0 as a <, ==, > b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::DegRevLex:
                return degrevlex_range(a, b, 0, nmain);
            case Kind::Lex:
                for (int i = 0; i < nmain; ++i)
                    if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
                return 0;
            case Kind::ElimBlock: {
                int c = degrevlex_range(a, b, nmain, nmain + naux);
                if (c) return c;
                return degrevlex_range(a, b, 0, nmain);
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string key() const {
        switch (kind) {
            case Kind::DegRevLex: return "degrevlex";
            case Kind::Lex: return "lex";
            case Kind::ElimBlock: return "elim" + std::to_string(naux);
        }
        return "?";
    }

private:
    static int degrevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) { da += a.exp(i); db += b.exp(i); }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; --i) {
            int ea = a.exp(i), eb = b.exp(i);
            if (ea != eb) return ea < eb ? 1 : -1; // smaller exponent at the last difference wins
        }
        return 0;
    }
};

/// The polynomial ring S = F_p[x_1..x_n, y_1..y_n], optionally extended by an
/// auxiliary elimination block appended after y_n. Variable index layout:
/// x_i -> i-1, y_i -> n+i-1, aux -> 2n.., for 1-based labels i.
struct RingContext {
    int n = 0;
    uint32_t characteristic = 32003;
    int aux = 0;

    RingContext() = default;
    RingContext(int n_, uint32_t p, int aux_ = 0) : n(n_), characteristic(p), aux(aux_) {
        if (n < 0) throw std::domain_error("RingContext: negative vertex count");
        if (nvars() > kMaxVars)
            throw CapacityError("RingContext: " + std::to_string(nvars()) + " variables exceed limit " +
                                std::to_string(kMaxVars));
        if (!PrimeField::is_prime(p)) throw std::domain_error("RingContext: characteristic must be prime");
    }

    int nvars() const { return 2 * n + aux; }
    PrimeField field() const { return PrimeField(characteristic); }

    int x_index(int i) const { check_label(i); return i - 1; }
    int y_index(int i) const { check_label(i); return n + i - 1; }

    std::string var_name(int idx) const {
        if (idx < 0 || idx >= nvars()) throw std::out_of_range("RingContext: variable index");
        if (idx < n) return "x" + std::to_string(idx + 1);
        if (idx < 2 * n) return "y" + std::to_string(idx - n + 1);
        if (aux == 1) return "t";
        return "t" + std::to_string(idx - 2 * n + 1);
    }

    // Inverse of var_name; returns -1 when the name is unknown.
    int var_index(const std::string& name) const {
        if (name == "t" && aux >= 1) return 2 * n;
        if (name.size() < 2) return -1;
        char c = name[0];
        int num = 0;
        for (size_t k = 1; k < name.size(); ++k) {
            if (name[k] < '0' || name[k] > '9') return -1;
            num = num * 10 + (name[k] - '0');
        }
        if (c == 'x' && num >= 1 && num <= n) return num - 1;
        if (c == 'y' && num >= 1 && num <= n) return n + num - 1;
        if (c == 't' && num >= 1 && num <= aux) return 2 * n + num - 1;
        return -1;
    }

    MonomialOrder degrevlex() const { return MonomialOrder::degrevlex(nvars()); }
    MonomialOrder lex() const { return MonomialOrder::lex(nvars()); }
    MonomialOrder elim_order() const {
        if (aux == 0) throw std::domain_error("RingContext: elimination order needs an aux block");
        return MonomialOrder::elim(2 * n, aux);
    }

    bool operator==(const RingContext& o) const {
        return n == o.n && characteristic == o.characteristic && aux == o.aux;
    }
    bool operator!=(const RingContext& o) const { return !(*this == o); }

private:
    void check_label(int i) const {
        if (i < 1 || i > n) throw std::out_of_range("RingContext: vertex label out of range");
    }
};

} // namespace bei
