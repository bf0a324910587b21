// AVX2 variants of the word kernels.  This TU is the only one built with
// -mavx2; everything else stays baseline so the binary still runs on machines
// without AVX2 (dispatch never selects this table there).

#if defined(__x86_64__) || defined(_M_X64)

#include "flipcover/kernels.hpp"

#include <immintrin.h>

#ifndef __AVX2__
#error "kernels_avx2.cpp must be compiled with -mavx2"
#endif

namespace flipcover::kern {

namespace {

void v_band(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(x, y));
    }
    for (; i < nw; ++i) dst[i] = a[i] & b[i];
}

void v_bor(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(x, y));
    }
    for (; i < nw; ++i) dst[i] = a[i] | b[i];
}

void v_bxor(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(x, y));
    }
    for (; i < nw; ++i) dst[i] = a[i] ^ b[i];
}

void v_bandnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // andnot computes ~first & second, so the operand order swaps.
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(y, x));
    }
    for (; i < nw; ++i) dst[i] = a[i] & ~b[i];
}

inline std::uint64_t hsum_popcount(__m256i v) {
    // Per-lane popcount via scalar popcnt on the four extracted words; the
    // popcnt unit is fast enough that a table-based SIMD popcount is not
    // worth the complexity at our sizes.
    alignas(32) std::uint64_t w[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(w), v);
    return static_cast<std::uint64_t>(__builtin_popcountll(w[0])) + static_cast<std::uint64_t>(__builtin_popcountll(w[1])) +
           static_cast<std::uint64_t>(__builtin_popcountll(w[2])) + static_cast<std::uint64_t>(__builtin_popcountll(w[3]));
}

std::uint64_t v_popcount(const std::uint64_t* a, std::size_t nw) {
    std::uint64_t c = 0;
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4)
        c += hsum_popcount(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    for (; i < nw; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i]));
    return c;
}

std::uint64_t v_popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::uint64_t c = 0;
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        c += hsum_popcount(_mm256_and_si256(x, y));
    }
    for (; i < nw; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
}

std::uint64_t v_popcount_xor(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::uint64_t c = 0;
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        c += hsum_popcount(_mm256_xor_si256(x, y));
    }
    for (; i < nw; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i] ^ b[i]));
    return c;
}

std::uint64_t v_boundary(const std::uint64_t* a, std::size_t nbits) {
    if (nbits < 2) return 0;
    std::size_t nw = (nbits + 63) / 64;
    std::uint64_t c = 0;
    std::size_t i = 0;
    // Full-mask words: every compared pair lies inside the bit range as long
    // as word i+4 still exists to supply the carry bit, and 64*(i+4) <= nbits-1.
    while (i + 5 <= nw && 64 * (i + 4) <= nbits - 1) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i nx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i + 1));
        __m256i sh = _mm256_or_si256(_mm256_srli_epi64(x, 1), _mm256_slli_epi64(nx, 63));
        c += hsum_popcount(_mm256_xor_si256(x, sh));
        i += 4;
    }
    for (; i < nw; ++i) {
        std::uint64_t next = (i + 1 < nw) ? a[i + 1] : 0;
        std::uint64_t y = a[i] ^ ((a[i] >> 1) | (next << 63));
        std::size_t base = 64 * i;
        std::uint64_t mask = ~std::uint64_t(0);
        if (base + 64 > nbits - 1) {
            std::size_t keep = (nbits - 1 > base) ? nbits - 1 - base : 0;
            mask = (keep >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << keep) - 1);
        }
        c += static_cast<std::uint64_t>(__builtin_popcountll(y & mask));
    }
    return c;
}

} // namespace

const ops_table avx2_ops = {
    v_band, v_bor, v_bxor, v_bandnot,
    v_popcount, v_popcount_and, v_popcount_xor,
    v_boundary,
    "avx2",
};

} // namespace flipcover::kern

#endif // x86_64
