#pragma once

#include <cstddef>
#include <cstdint>

// Word-level kernels behind the bitset type.  Every operation has a plain
// scalar implementation (the reference semantics) and, on x86, an AVX2 one;
// which table is live gets decided once at startup from CPUID.  Tests run the
// two tables against each other on random buffers, so the scalar versions are
// the ground truth and the vector versions are never trusted blindly.

namespace flipcover::kern {

struct ops_table {
    void (*band)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
    void (*bor)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
    void (*bxor)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
    void (*bandnot)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
    std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t nw);
    std::uint64_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
    std::uint64_t (*popcount_xor)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
    // Number of adjacent bit positions (i, i+1) with differing values over the
    // first nbits bits of a.  Used for crossing counts of 0/1 sequences.
    std::uint64_t (*boundary)(const std::uint64_t* a, std::size_t nbits);
    const char* name;
};

extern const ops_table scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
extern const ops_table avx2_ops;
#endif

// Active table (CPUID-selected at first use).
const ops_table& active();

// Test hook: force a specific table; pass nullptr to restore auto-detection.
void force(const ops_table* t);

} // namespace flipcover::kern
