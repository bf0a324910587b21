#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace flipcover {

// splitmix64: tiny, fully-specified generator.  We avoid std::mt19937 +
// std::uniform_int_distribution because the distribution's draw sequence is
// implementation-defined and the CLI promises byte-identical output per seed.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Named substream: one stage's draw count never shifts another stage's stream.
inline std::uint64_t substream_seed(std::uint64_t master, std::string_view stage) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : stage) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    std::uint64_t s = master ^ h;
    return splitmix64_next(s);
}

class rng {
public:
    explicit rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next_u64() { return splitmix64_next(s_); }

    // Uniform in [0, n), rejection-sampled so the result is exactly uniform
    // and reproducible across platforms.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t lim = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        for (;;) {
            std::uint64_t x = next_u64();
            if (x < lim) return x % n;
        }
    }

    int range(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Random permutation of 0..n-1.
    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
        shuffle(p);
        return p;
    }

private:
    std::uint64_t s_;
};

} // namespace flipcover
