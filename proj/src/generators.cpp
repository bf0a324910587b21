#include "flipcover/error.hpp"
#include "flipcover/patterns.hpp"
#include "flipcover/rng.hpp"

namespace flipcover {

graph make_grid(int side) {
    require(side >= 1, errc::bad_params, "grid side must be positive");
    std::vector<std::pair<int, int>> edges;
    auto id = [side](int i, int j) { return i * side + j; };
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            if (j + 1 < side) edges.push_back({id(i, j), id(i, j + 1)});
            if (i + 1 < side) edges.push_back({id(i, j), id(i + 1, j)});
        }
    return build_graph(side * side, edges);
}

graph make_gnp(int n, double p, std::uint64_t seed) {
    require(n >= 0 && p >= 0.0 && p <= 1.0, errc::bad_params, "G(n,p) needs n >= 0 and p in [0,1]");
    rng r(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (r.bernoulli(p)) edges.push_back({u, v});
    return build_graph(n, edges);
}

} // namespace flipcover
