#include "pgcodes/gfield.hpp"

#include <algorithm>
#include <string>

namespace pgcodes {

namespace {

bool is_prime(int64_t v) {
    if (v < 2) return false;
    for (int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

int64_t radix_key(const std::vector<uint8_t>& v, int p) {
    int64_t k = 0;
    for (size_t i = v.size(); i-- > 0;) k = k * p + v[i];
    return k;
}

}  // namespace

std::vector<int> FieldCtx::to_vector(FieldElement a) const {
    std::vector<int> v(static_cast<size_t>(params_.n), 0);
    if (a.is_zero()) return v;
    const uint8_t* row = antilog_.data() + static_cast<size_t>(a.exp) * params_.n;
    for (int i = 0; i < params_.n; ++i) v[static_cast<size_t>(i)] = row[i];
    return v;
}

FieldElement FieldCtx::from_vector(const std::vector<int>& v) const {
    if (v.size() != static_cast<size_t>(params_.n))
        throw Error("from_vector: expected " + std::to_string(params_.n) + " coordinates");
    int64_t k = 0;
    for (size_t i = v.size(); i-- > 0;) {
        int c = v[i];
        if (c < 0 || c >= params_.p) throw Error("from_vector: coordinate out of range");
        k = k * params_.p + c;
    }
    int32_t e = log_[static_cast<size_t>(k)];
    return e < 0 ? FieldElement::zero() : FieldElement::from_exp(e);
}

FieldCtx build_field(int p, int n, std::vector<int> poly) {
    if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (!is_prime(n)) throw NotPrimeError("n = " + std::to_string(n) + " is not prime");
    if (poly.size() != static_cast<size_t>(n) + 1)
        throw BadPolynomialError("polynomial must have n+1 coefficients");
    if (poly.back() != 1) throw BadPolynomialError("polynomial must be monic");
    for (int c : poly)
        if (c < 0 || c >= p) throw BadPolynomialError("coefficient out of Z_p range");

    int64_t q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > (1 << 20)) throw Error("field larger than the supported ~2^20 elements");
    }
    const int64_t M = q - 1;

    FieldCtx ctx;
    ctx.params_.p = p;
    ctx.params_.n = n;
    ctx.params_.poly = std::move(poly);
    ctx.params_.q_minus_1 = M;
    ctx.params_.m = M / (p - 1);

    ctx.p_pow_.resize(static_cast<size_t>(n));
    ctx.p_pow_[0] = 1;
    for (int i = 1; i < n; ++i) ctx.p_pow_[static_cast<size_t>(i)] = ctx.p_pow_[static_cast<size_t>(i - 1)] * p;

    // x^n = red(x) with red_i = -poly_i
    std::vector<int> red(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) red[static_cast<size_t>(i)] = ((-ctx.params_.poly[static_cast<size_t>(i)]) % p + p) % p;

    ctx.antilog_.assign(static_cast<size_t>(M) * n, 0);
    ctx.log_.assign(static_cast<size_t>(q), -1);

    std::vector<uint8_t> cur(static_cast<size_t>(n), 0);
    cur[0] = 1;
    for (int64_t e = 0; e < M; ++e) {
        int64_t k = radix_key(cur, p);
        if (k == 0)
            throw BadPolynomialError("x is a zero divisor modulo the polynomial");
        if (ctx.log_[static_cast<size_t>(k)] >= 0)
            throw NotPrimitiveError("order of x is " + std::to_string(e) + ", not " + std::to_string(M));
        ctx.log_[static_cast<size_t>(k)] = static_cast<int32_t>(e);
        std::copy(cur.begin(), cur.end(), ctx.antilog_.begin() + static_cast<size_t>(e) * n);
        int carry = cur[static_cast<size_t>(n - 1)];
        for (int i = n - 1; i > 0; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        cur[0] = 0;
        if (carry)
            for (int i = 0; i < n; ++i)
                cur[static_cast<size_t>(i)] = static_cast<uint8_t>((cur[static_cast<size_t>(i)] + carry * red[static_cast<size_t>(i)]) % p);
    }
    if (radix_key(cur, p) != 1)
        throw NotPrimitiveError("x^" + std::to_string(M) + " != 1");

    // Zech table: z[i] = log(1 + alpha^i); exactly one sentinel (at 0 for
    // p = 2, at the exponent of -1 for odd p).
    ctx.zech_.assign(static_cast<size_t>(M), -1);
    int sentinels = 0;
    int32_t sentinel_at = -1;
    std::vector<uint8_t> sum(static_cast<size_t>(n));
    for (int64_t i = 0; i < M; ++i) {
        const uint8_t* row = ctx.antilog_.data() + static_cast<size_t>(i) * n;
        for (int c = 0; c < n; ++c) sum[static_cast<size_t>(c)] = static_cast<uint8_t>((row[c] + (c == 0 ? 1 : 0)) % p);
        int64_t k = radix_key(sum, p);
        if (k == 0) {
            ++sentinels;
            sentinel_at = static_cast<int32_t>(i);
        } else {
            ctx.zech_[static_cast<size_t>(i)] = ctx.log_[static_cast<size_t>(k)];
        }
    }
    ctx.minus_one_exp_ = p == 2 ? 0 : static_cast<int32_t>(M / 2);
    if (sentinels != 1 || sentinel_at != (p == 2 ? 0 : ctx.minus_one_exp_))
        throw NotPrimitiveError("zech sentinel misplaced: field tables are inconsistent");

    ctx.scalar_exp_.assign(static_cast<size_t>(p), -1);
    FieldElement acc = FieldElement::zero();
    for (int s = 1; s < p; ++s) {
        acc = ctx.add(acc, FieldElement::from_exp(0));
        ctx.scalar_exp_[static_cast<size_t>(s)] = acc.exp;
    }
    return ctx;
}

}  // namespace pgcodes
