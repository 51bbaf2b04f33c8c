#pragma once

#include <cstdint>
#include <vector>

#include "pgcodes/errors.hpp"

namespace pgcodes {

// Nonzero elements are powers of the generator: Exp(e) = alpha^e with e
// reduced mod q-1. Zero is exp = -1 so the type stays a plain value.
struct FieldElement {
    int32_t exp = -1;

    static constexpr FieldElement zero() { return FieldElement{-1}; }
    static constexpr FieldElement from_exp(int32_t e) { return FieldElement{e}; }
    constexpr bool is_zero() const { return exp < 0; }
    friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

struct FieldParams {
    int p = 0;
    int n = 0;
    std::vector<int> poly;  // constant term first, monic, length n+1
    int64_t q_minus_1 = 0;
    int64_t m = 0;  // (p^n - 1)/(p - 1), the P0 cycle length
};

class FieldCtx {
public:
    const FieldParams& params() const { return params_; }
    int p() const { return params_.p; }
    int n() const { return params_.n; }
    int64_t q_minus_1() const { return params_.q_minus_1; }
    int64_t m() const { return params_.m; }

    // exponent of 1 + alpha^i; -1 at the single sentinel (1 + alpha^i = 0)
    int32_t zech(int64_t i) const { return zech_[static_cast<size_t>(reduce(i))]; }
    int32_t minus_one_exp() const { return minus_one_exp_; }  // 0 when p = 2
    // exponent of the prime-field scalar s in [1, p); scalar_exp(0) is -1
    int32_t scalar_exp(int s) const { return scalar_exp_[static_cast<size_t>(s)]; }

    int32_t reduce(int64_t e) const {
        int64_t M = params_.q_minus_1;
        e %= M;
        return static_cast<int32_t>(e < 0 ? e + M : e);
    }

    FieldElement add(FieldElement a, FieldElement b) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int32_t z = zech_[static_cast<size_t>(reduce(a.exp - b.exp))];
        if (z < 0) return FieldElement::zero();
        return FieldElement::from_exp(reduce(b.exp + z));
    }

    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a.is_zero() || b.is_zero()) return FieldElement::zero();
        return FieldElement::from_exp(reduce(static_cast<int64_t>(a.exp) + b.exp));
    }

    FieldElement pw(FieldElement a, int64_t k) const {
        if (a.is_zero()) return a;
        return FieldElement::from_exp(reduce(static_cast<int64_t>(a.exp) * reduce(k)));
    }

    FieldElement neg(FieldElement a) const {
        if (a.is_zero() || params_.p == 2) return a;
        return FieldElement::from_exp(reduce(static_cast<int64_t>(a.exp) + minus_one_exp_));
    }

    // Upsilon_l: x -> x^(p^l); acts on exponents as multiplication by p^l
    FieldElement frobenius(int l, FieldElement a) const {
        if (a.is_zero()) return a;
        return FieldElement::from_exp(reduce(static_cast<int64_t>(a.exp) * p_pow_[static_cast<size_t>(l)]));
    }

    // Phi_j: alpha^i -> alpha^(i+j); Zero is fixed by convention
    FieldElement cyclic_shift(int64_t j, FieldElement a) const {
        if (a.is_zero()) return a;
        return FieldElement::from_exp(reduce(a.exp + j));
    }

    std::vector<int> to_vector(FieldElement a) const;
    FieldElement from_vector(const std::vector<int>& v) const;

private:
    friend FieldCtx build_field(int p, int n, std::vector<int> poly);

    FieldParams params_;
    std::vector<int32_t> zech_;
    std::vector<uint8_t> antilog_;     // (q-1) rows of n coordinates
    std::vector<int32_t> log_;         // radix-p coordinate key -> exponent, -1 for 0
    std::vector<int64_t> p_pow_;       // p^0 .. p^(n-1)
    std::vector<int32_t> scalar_exp_;  // prime-field scalars as exponents
    int32_t minus_one_exp_ = 0;
};

// Validates p, n prime and the polynomial monic of degree n, then iterates
// powers of x modulo poly; the order of x must be exactly p^n - 1.
FieldCtx build_field(int p, int n, std::vector<int> poly);

}  // namespace pgcodes
