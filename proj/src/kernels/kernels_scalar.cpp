#include "flipcover/kernels.hpp"

namespace flipcover::kern {

namespace {

void s_band(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i) dst[i] = a[i] & b[i];
}

void s_bor(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i) dst[i] = a[i] | b[i];
}

void s_bxor(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i) dst[i] = a[i] ^ b[i];
}

void s_bandnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i) dst[i] = a[i] & ~b[i];
}

std::uint64_t s_popcount(const std::uint64_t* a, std::size_t nw) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < nw; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i]));
    return c;
}

std::uint64_t s_popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < nw; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
}

std::uint64_t s_popcount_xor(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < nw; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i] ^ b[i]));
    return c;
}

std::uint64_t s_boundary(const std::uint64_t* a, std::size_t nbits) {
    if (nbits < 2) return 0;
    std::size_t nw = (nbits + 63) / 64;
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < nw; ++i) {
        std::uint64_t next = (i + 1 < nw) ? a[i + 1] : 0;
        std::uint64_t y = a[i] ^ ((a[i] >> 1) | (next << 63));
        // Bit j of y compares positions 64*i+j and 64*i+j+1; only pairs fully
        // inside [0, nbits) count.
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

const ops_table scalar_ops = {
    s_band, s_bor, s_bxor, s_bandnot,
    s_popcount, s_popcount_and, s_popcount_xor,
    s_boundary,
    "scalar",
};

} // namespace flipcover::kern
