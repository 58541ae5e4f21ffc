#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "padicteich/context.hpp"
#include "padicteich/errors.hpp"
#include "padicteich/rational.hpp"

namespace padicteich {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// inverse of a modulo m for gcd(a, m) = 1 (extended Euclid)
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw division_by_zero();
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

}  // namespace detail

// Element of Q_p under the capped-relative model: a nonzero value is
// p^val * unit with the unit known modulo p^prec (1 <= prec <= N). Exact zero
// uses a valuation sentinel; total cancellation yields an "inexact zero"
// O(p^k) carrying prec = 0. Values are immutable; all operations are pure.
class padic_number {
public:
    static constexpr std::int64_t inf_valuation = INT64_MAX / 4;

    padic_number() = default;

    static padic_number zero(const prime_context& ctx) {
        padic_number x(ctx);
        x.val_ = inf_valuation;
        x.prec_ = ctx.N;
        return x;
    }

    // O(p^k): a value indistinguishable from zero below absolute precision k
    static padic_number inexact_zero(const prime_context& ctx, std::int64_t k) {
        padic_number x(ctx);
        x.val_ = k;
        x.prec_ = 0;
        return x;
    }

    static padic_number from_integer(const prime_context& ctx, __int128 n) {
        if (n == 0) return zero(ctx);
        padic_number x(ctx);
        bool neg = n < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-n)
                                  : static_cast<unsigned __int128>(n);
        std::int64_t v = 0;
        while (u % static_cast<unsigned>(ctx.p) == 0) { u /= static_cast<unsigned>(ctx.p); ++v; }
        std::uint64_t m = ctx.modulus();
        std::uint64_t r = static_cast<std::uint64_t>(u % m);
        if (neg) r = (m - r) % m;
        if (r == 0) {
            // unit truncated away entirely: known only as O(p^{v+N})
            return inexact_zero(ctx, v + ctx.N);
        }
        x.val_ = v;
        x.unit_ = r;
        x.prec_ = ctx.N;
        return x;
    }

    static padic_number from_rational(const prime_context& ctx, const rational& r) {
        if (r.is_zero()) return zero(ctx);
        padic_number n = from_integer(ctx, r.num());
        padic_number d = from_integer(ctx, r.den());
        return n / d;
    }

    const prime_context& context() const { return ctx_; }

    bool is_exact_zero() const { return val_ == inf_valuation; }
    // zero as far as the carried precision can tell (exact or inexact)
    bool is_zero_at_precision() const { return is_exact_zero() || prec_ == 0; }

    // lower bound on the valuation; exact for values with known digits
    std::int64_t valuation() const { return val_; }
    bool valuation_at_least(std::int64_t k) const { return val_ >= k; }

    int precision() const { return prec_; }
    // index below which all digits of the value are known
    std::int64_t absolute_precision() const {
        return is_exact_zero() ? inf_valuation : val_ + prec_;
    }

    std::uint64_t unit() const {
        require_digits();
        return unit_;
    }

    bool is_unit() const { return !is_zero_at_precision() && val_ == 0; }

    // little-endian base-p digits of the unit part, one per known digit
    std::vector<int> unit_digits() const {
        std::vector<int> d;
        if (is_zero_at_precision()) return d;
        std::uint64_t u = unit_;
        for (int i = 0; i < prec_; ++i) {
            d.push_back(static_cast<int>(u % std::uint64_t(ctx_.p)));
            u /= std::uint64_t(ctx_.p);
        }
        return d;
    }

    friend padic_number operator+(const padic_number& a, const padic_number& b) {
        a.require_same_field(b);
        if (a.is_exact_zero()) return b;
        if (b.is_exact_zero()) return a;
        std::int64_t abs_a = a.absolute_precision();
        std::int64_t abs_b = b.absolute_precision();
        std::int64_t abs = abs_a < abs_b ? abs_a : abs_b;
        std::int64_t base = a.val_ < b.val_ ? a.val_ : b.val_;
        int digits = static_cast<int>(abs - base);
        if (digits <= 0) return inexact_zero(a.ctx_, abs);
        std::uint64_t m = a.ctx_.pow_p(digits);
        std::uint64_t s = 0;
        if (a.prec_ > 0) s = detail::mulmod(a.unit_ % m, a.ctx_.pow_p(static_cast<int>(a.val_ - base)) % m, m);
        if (b.prec_ > 0) s = (s + detail::mulmod(b.unit_ % m, b.ctx_.pow_p(static_cast<int>(b.val_ - base)) % m, m)) % m;
        return from_residue(a.ctx_, s, base, abs);
    }

    friend padic_number operator-(const padic_number& a, const padic_number& b) {
        return a + (-b);
    }

    padic_number operator-() const {
        if (is_zero_at_precision()) return *this;
        padic_number r = *this;
        std::uint64_t m = ctx_.pow_p(prec_);
        r.unit_ = (m - unit_ % m) % m;
        return r;
    }

    friend padic_number operator*(const padic_number& a, const padic_number& b) {
        a.require_same_field(b);
        if (a.is_exact_zero() || b.is_exact_zero()) return zero(a.ctx_);
        if (a.prec_ == 0 || b.prec_ == 0)
            return inexact_zero(a.ctx_, a.val_ + b.val_);
        int prec = a.prec_ < b.prec_ ? a.prec_ : b.prec_;
        std::uint64_t m = a.ctx_.pow_p(prec);
        padic_number r(a.ctx_);
        r.val_ = a.val_ + b.val_;
        r.unit_ = detail::mulmod(a.unit_ % m, b.unit_ % m, m);
        r.prec_ = prec;
        return r;
    }

    friend padic_number operator/(const padic_number& a, const padic_number& b) {
        a.require_same_field(b);
        if (b.is_exact_zero()) throw division_by_zero();
        if (b.prec_ == 0) throw precision_exhausted("divisor has no known digits");
        if (a.is_exact_zero()) return zero(a.ctx_);
        if (a.prec_ == 0) return inexact_zero(a.ctx_, a.val_ - b.val_);
        int prec = a.prec_ < b.prec_ ? a.prec_ : b.prec_;
        std::uint64_t m = a.ctx_.pow_p(prec);
        padic_number r(a.ctx_);
        r.val_ = a.val_ - b.val_;
        r.unit_ = detail::mulmod(a.unit_ % m, detail::invmod(b.unit_ % m, m), m);
        r.prec_ = prec;
        return r;
    }

    // integer powers; negative exponents require a nonzero base
    padic_number pow(std::int64_t e) const {
        if (e == 0) return from_integer(ctx_, 1);
        if (e < 0) return from_integer(ctx_, 1) / pow(-e);
        if (is_exact_zero()) return *this;
        if (prec_ == 0) return inexact_zero(ctx_, val_ * e);
        padic_number r(ctx_);
        r.val_ = val_ * e;
        std::uint64_t m = ctx_.pow_p(prec_);
        r.unit_ = detail::powmod(unit_, static_cast<std::uint64_t>(e), m);
        r.prec_ = prec_;
        return r;
    }

    // shift by p^k: exact, no precision cost beyond the valuation move
    padic_number shift(std::int64_t k) const {
        if (is_exact_zero()) return *this;
        padic_number r = *this;
        r.val_ += k;
        return r;
    }

    // true when the two values agree modulo p^min(absolute precisions)
    friend bool agree(const padic_number& a, const padic_number& b) {
        return (a - b).is_zero_at_precision();
    }

    friend bool operator==(const padic_number& a, const padic_number& b) {
        return agree(a, b);
    }
    friend bool operator!=(const padic_number& a, const padic_number& b) {
        return !agree(a, b);
    }

    // residue modulo p^k, 0 <= k <= absolute precision, as an integer in [0, p^k)
    std::uint64_t residue(int k) const {
        if (k < 0 || k > absolute_precision())
            throw precision_exhausted("residue request beyond known precision");
        if (is_zero_at_precision() || val_ >= k) return 0;
        std::uint64_t m = ctx_.pow_p(k);
        return detail::mulmod(unit_ % m, ctx_.pow_p(static_cast<int>(val_)) % m, m);
    }

    std::string str() const {
        if (is_exact_zero()) return "0";
        if (prec_ == 0) return "O(" + std::to_string(ctx_.p) + "^" + std::to_string(val_) + ")";
        std::string s = std::to_string(unit_);
        if (val_ != 0) s += "*" + std::to_string(ctx_.p) + "^" + std::to_string(val_);
        s += " + O(" + std::to_string(ctx_.p) + "^" + std::to_string(val_ + prec_) + ")";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const padic_number& x) {
        return os << x.str();
    }

    // --- internal helpers shared between modules ---

    // Rebuilds a value from a residue s modulo p^{abs-base}, representing
    // p^base * s known to absolute precision abs.
    static padic_number from_residue(const prime_context& ctx, std::uint64_t s,
                                     std::int64_t base, std::int64_t abs) {
        if (s == 0) return inexact_zero(ctx, abs);
        std::int64_t v = base;
        while (s % static_cast<std::uint64_t>(ctx.p) == 0) { s /= static_cast<std::uint64_t>(ctx.p); ++v; }
        int prec = static_cast<int>(abs - v);
        if (prec <= 0) return inexact_zero(ctx, abs);
        if (prec > ctx.N) prec = ctx.N;
        padic_number r(ctx);
        r.val_ = v;
        r.unit_ = s % ctx.pow_p(prec);
        r.prec_ = prec;
        return r;
    }

    // Reinterpret the known digits inside a wider context, fabricating zeros
    // above the known precision. Only valid inside operations whose result,
    // capped back at the input's absolute precision, is insensitive to the
    // fabricated digits (the Frobenius-limit maps, exp/log, Newton roots);
    // the public API never exposes the extension. Callers must follow with
    // with_absolute_cap at the honest precision.
    padic_number reembed_padded(const prime_context& wide) const {
        if (wide.p != ctx_.p || wide.N < ctx_.N)
            throw internal_error("reembed requires a wider context over the same prime");
        if (is_exact_zero()) return zero(wide);
        if (prec_ == 0) return zero(wide);  // no digits known: pad to literal zero
        padic_number r(wide);
        r.val_ = val_;
        r.unit_ = unit_;
        r.prec_ = wide.N;
        return r;
    }

    // Forget everything at or above p^abs.
    padic_number with_absolute_cap(std::int64_t abs) const {
        if (is_exact_zero()) return inexact_zero(ctx_, abs);
        if (prec_ == 0) return inexact_zero(ctx_, val_ < abs ? val_ : abs);
        if (val_ >= abs) return inexact_zero(ctx_, abs);
        padic_number r = *this;
        int p2 = static_cast<int>(abs - val_);
        if (p2 < r.prec_) {
            r.prec_ = p2;
            r.unit_ %= ctx_.pow_p(p2);
        }
        return r;
    }

    // Project back to a narrower context, keeping min(prec, N) digits.
    padic_number truncate_to(const prime_context& narrow) const {
        if (narrow.p != ctx_.p)
            throw internal_error("truncate requires the same prime");
        if (is_exact_zero()) return zero(narrow);
        if (prec_ == 0) {
            std::int64_t k = val_;
            return inexact_zero(narrow, k);
        }
        padic_number r(narrow);
        r.val_ = val_;
        r.prec_ = prec_ < narrow.N ? prec_ : narrow.N;
        r.unit_ = unit_ % narrow.pow_p(r.prec_);
        return r;
    }

private:
    explicit padic_number(const prime_context& ctx) : ctx_(ctx) {}

    void require_digits() const {
        if (is_exact_zero()) throw zero_input();
        if (prec_ == 0) throw precision_exhausted();
    }

    void require_same_field(const padic_number& o) const {
        if (ctx_.p != o.ctx_.p || ctx_.N != o.ctx_.N)
            throw modulus_mismatch("operands live in different p-adic contexts");
    }

    prime_context ctx_{};
    std::int64_t val_ = inf_valuation;
    std::uint64_t unit_ = 0;
    int prec_ = 0;
};

// ---------------------------------------------------------------------------
// Teichmuller lift and the exponential / logarithm family
// ---------------------------------------------------------------------------

// omega(a) for a residue 1..p-1: the unique (p-1)-th root of unity congruent
// to a, computed by iterating x -> x^p until the digits stabilize.
inline padic_number teichmuller_lift(const prime_context& ctx, std::int64_t a) {
    if (a < 1 || a > ctx.p - 1)
        throw domain_error("Teichmuller lift needs a residue in 1..p-1");
    std::uint64_t m = ctx.modulus();
    std::uint64_t x = static_cast<std::uint64_t>(a);
    for (int i = 0; i <= ctx.N + 1; ++i) {
        std::uint64_t nx = detail::powmod(x, static_cast<std::uint64_t>(ctx.p), m);
        if (nx == x) return padic_number::from_integer(ctx, static_cast<__int128>(x));
        x = nx;
    }
    throw internal_error("Teichmuller iteration failed to stabilize");
}

// omega extended by omega(0) = 0 (used for Witt digit expansions)
inline padic_number teichmuller_digit(const prime_context& ctx, std::int64_t a) {
    if (a == 0) return padic_number::zero(ctx);
    return teichmuller_lift(ctx, a);
}

namespace detail {

// Hard cap on the exp/log series index: every term beyond 2N + 2 has
// valuation >= N on the stated domains (v >= 1), for every odd p.
inline int series_term_cap(const prime_context& ctx) { return 2 * ctx.N + 2; }

inline int vp_of_int(std::int64_t n, std::int64_t p) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

// digits lost to the worst single division by n (log) or n! (exp)
inline int exp_guard(const prime_context& ctx) {
    int cap = series_term_cap(ctx);
    int g = 0;  // v_p(cap!)
    for (std::int64_t q = ctx.p; q <= cap; q *= ctx.p) g += cap / static_cast<int>(q);
    return g + 1;
}

inline int log_guard(const prime_context& ctx) {
    int cap = series_term_cap(ctx);
    int g = 0;
    while ((std::int64_t(1) << (2 * g)) <= cap) ++g;  // ~log_p bound, p >= 3
    return g + 2;
}

}  // namespace detail

// exp(x) = sum x^n / n! for v_p(x) >= 1
inline padic_number padic_exp(const padic_number& x) {
    const prime_context& ctx = x.context();
    if (x.is_exact_zero()) return padic_number::from_integer(ctx, 1);
    if (x.valuation() < 1)
        throw domain_error("exp requires v_p(x) >= 1 for odd p");
    std::int64_t honest = std::min<std::int64_t>(x.absolute_precision(), ctx.N);
    prime_context wide = ctx.extended(detail::exp_guard(ctx));
    padic_number xw = x.reembed_padded(wide);
    padic_number sum = padic_number::from_integer(wide, 1);
    padic_number power = padic_number::from_integer(wide, 1);
    padic_number factorial = padic_number::from_integer(wide, 1);
    int cap = detail::series_term_cap(ctx);
    for (int n = 1; n <= cap; ++n) {
        power = power * xw;
        factorial = factorial * padic_number::from_integer(wide, n);
        sum = sum + power / factorial;
    }
    return sum.with_absolute_cap(honest).truncate_to(ctx);
}

// log(x) = sum (-1)^{n-1} (x-1)^n / n, extended to all units by killing the
// Teichmuller torsion part: log(omega(a) * g) := log(g).
inline padic_number padic_log(const padic_number& x) {
    const prime_context& ctx = x.context();
    if (x.is_zero_at_precision() || x.valuation() != 0)
        throw domain_error("log requires a unit");
    std::int64_t honest = std::min<std::int64_t>(x.absolute_precision(), ctx.N);
    prime_context wide = ctx.extended(detail::log_guard(ctx));
    padic_number xw = x.reembed_padded(wide);
    std::int64_t a0 = static_cast<std::int64_t>(x.unit() % static_cast<std::uint64_t>(ctx.p));
    if (a0 != 1) {
        // strip torsion: x = omega(a0) * g with g in 1 + pZ_p
        xw = xw / teichmuller_lift(wide, a0);
    }
    padic_number z = xw - padic_number::from_integer(wide, 1);
    if (z.is_zero_at_precision()) return padic_number::zero(ctx);
    padic_number sum = padic_number::zero(wide);
    padic_number power = padic_number::from_integer(wide, 1);
    int cap = detail::series_term_cap(ctx);
    for (int n = 1; n <= cap; ++n) {
        power = power * z;
        padic_number term = power / padic_number::from_integer(wide, n);
        sum = (n % 2 == 1) ? sum + term : sum - term;
    }
    return sum.with_absolute_cap(honest).truncate_to(ctx);
}

// Frobenius approximation of log: (x^{p^m} - 1) / p^m for x in 1 + pZ_p.
// Computed with m digits of internal headroom so the final division costs
// nothing at the caller's precision.
inline padic_number frobenius_log(const padic_number& x, int m) {
    const prime_context& ctx = x.context();
    if (m < 1) throw domain_error("Frobenius log needs m >= 1");
    if (x.is_zero_at_precision() || x.valuation() != 0 ||
        x.unit() % static_cast<std::uint64_t>(ctx.p) != 1)
        throw domain_error("Frobenius log requires x in 1 + pZ_p");
    std::int64_t honest = std::min<std::int64_t>(x.absolute_precision(), ctx.N);
    prime_context wide = ctx.extended(m);
    padic_number xw = x.reembed_padded(wide);
    std::uint64_t expo = 1;
    for (int i = 0; i < m; ++i) expo *= static_cast<std::uint64_t>(ctx.p);
    padic_number power(xw.pow(static_cast<std::int64_t>(expo)));
    padic_number diff = power - padic_number::from_integer(wide, 1);
    return diff.shift(-m).with_absolute_cap(honest).truncate_to(ctx);
}

// Frobenius approximation of exp: the p^m-th root of 1 + p^m x, by Newton
// iteration for z^{p^m} = 1 + p^m x seeded at z = 1. Contraction is
// guaranteed because 1 + p^m x = 1 mod p^{m+1}.
inline padic_number frobenius_exp_approx(const padic_number& x, int m) {
    const prime_context& ctx = x.context();
    if (m < 1) throw domain_error("Frobenius exp needs m >= 1");
    if (x.is_exact_zero()) return padic_number::from_integer(ctx, 1);
    if (x.valuation() < 1)
        throw domain_error("Frobenius exp requires v_p(x) >= 1");
    std::int64_t honest = std::min<std::int64_t>(x.absolute_precision(), ctx.N);
    prime_context wide = ctx.extended(m + 2);
    padic_number xw = x.reembed_padded(wide);
    padic_number one = padic_number::from_integer(wide, 1);
    padic_number w = one + xw.shift(m);
    std::int64_t expo = 1;
    for (int i = 0; i < m; ++i) expo *= ctx.p;
    padic_number z = one;
    std::int64_t last_step_val = 0;
    bool settled = false;
    for (int iter = 0; iter < 64 && !settled; ++iter) {
        // Newton self-corrects, so each iterate may be re-padded to full
        // working precision without affecting the capped result.
        z = z.reembed_padded(wide);
        padic_number zp1 = z.pow(expo - 1);
        padic_number f = zp1 * z - w;
        if (f.is_zero_at_precision() || f.valuation() >= ctx.N + m) {
            settled = true;
            break;
        }
        padic_number step = f / (zp1.shift(m));
        if (!step.is_zero_at_precision()) {
            if (iter > 0 && step.valuation() <= last_step_val)
                throw non_convergence("Newton step failed to contract (check precision)");
            last_step_val = step.valuation();
        }
        z = z - step;
    }
    if (!settled)
        throw non_convergence("Newton iteration for the p^m-th root did not settle");
    return z.with_absolute_cap(honest).truncate_to(ctx);
}

// ---------------------------------------------------------------------------
// Polar decomposition x = p^s * omega(a) * g and the generalized logarithms
// ---------------------------------------------------------------------------

struct unit_decomposition {
    std::int64_t s = 0;       // power of p
    std::int64_t a = 1;       // residue 1..p-1 (torsion part is omega(a))
    padic_number g;           // principal unit in 1 + pZ_p
};

inline unit_decomposition unit_decompose(const padic_number& x) {
    if (x.is_exact_zero()) throw zero_input();
    if (x.precision() == 0)
        throw precision_exhausted("cannot decompose a value with no known digits");
    const prime_context& ctx = x.context();
    unit_decomposition d;
    d.s = x.valuation();
    d.a = static_cast<std::int64_t>(x.unit() % static_cast<std::uint64_t>(ctx.p));
    padic_number u = x.shift(-x.valuation());
    d.g = u / teichmuller_lift(ctx, d.a);
    return d;
}

// s*log(p) + omega^l(a)*log(g): the formal multiple of log p is carried as an
// exact rational and only ever added, never multiplied.
struct formal_log_value {
    rational logp_coeff;
    padic_number body;
    int char_index = 0;

    friend formal_log_value operator+(const formal_log_value& a, const formal_log_value& b) {
        if (a.char_index != b.char_index)
            throw domain_error("generalized logs with different character indices");
        return formal_log_value{a.logp_coeff + b.logp_coeff, a.body + b.body, a.char_index};
    }
};

inline formal_log_value generalized_log(const padic_number& x, int l) {
    const prime_context& ctx = x.context();
    if (l < 0 || l > ctx.p - 2)
        throw domain_error("character index must lie in 0..p-2");
    unit_decomposition d = unit_decompose(x);
    padic_number tw = teichmuller_lift(ctx, d.a).pow(l);
    return formal_log_value{rational(d.s), tw * padic_log(d.g), l};
}

}  // namespace padicteich
