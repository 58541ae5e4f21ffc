#pragma once

#include <cstdint>

#include "padicteich/errors.hpp"

namespace padicteich {

// Fixed working environment for one prime: p, the absolute precision N
// (units are carried modulo p^N), and the default series truncation degree D.
//
// Units are stored in a single 64-bit word, so p^N must stay below 2^62.
// That allows N = 26 at p = 5 and N = 17 at p = 13 -- ample headroom for the
// internal precision extensions the Frobenius-limit operations need.
struct prime_context {
    std::int64_t p = 5;
    int N = 8;
    int D = 8;

    prime_context() = default;
    prime_context(std::int64_t p_, int N_, int D_ = 8) : p(p_), N(N_), D(D_) {
        validate();
    }

    void validate() const {
        if (p < 3 || !is_prime(p))
            throw domain_error("p must be an odd prime >= 3");
        if (N < 2) throw domain_error("absolute precision N must be >= 2");
        if (D < 1) throw domain_error("series degree D must be >= 1");
        // overflow guard: p^N (and its square via 128-bit intermediates) must fit
        std::uint64_t m = 1;
        for (int i = 0; i < N; ++i) {
            if (m > (std::uint64_t(1) << 62) / std::uint64_t(p))
                throw domain_error("p^N exceeds the 64-bit unit representation");
            m *= std::uint64_t(p);
        }
    }

    // p^k as u64, k <= N.
    std::uint64_t pow_p(int k) const {
        std::uint64_t m = 1;
        for (int i = 0; i < k; ++i) m *= std::uint64_t(p);
        return m;
    }

    std::uint64_t modulus() const { return pow_p(N); }

    // Same prime, precision raised by `extra` digits. Used internally by the
    // Frobenius-limit operations, whose final division by p^m costs m digits.
    prime_context extended(int extra) const { return prime_context(p, N + extra, D); }

    friend bool operator==(const prime_context& a, const prime_context& b) {
        return a.p == b.p && a.N == b.N && a.D == b.D;
    }
    friend bool operator!=(const prime_context& a, const prime_context& b) {
        return !(a == b);
    }

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

}  // namespace padicteich
