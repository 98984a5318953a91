#include "sft/generators.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace sft {

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0)
        throw Error(ErrorCode::InvalidInput, "Rng::below(0)");
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return x % bound;
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw Error(ErrorCode::InvalidInput, msg);
}

} // namespace

Graph gen_path(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph gen_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return Graph(n, es);
}

Graph gen_star(int leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

Graph gen_double_star(int a, int b) {
    require(a >= 1 && b >= 1, "double star needs a, b >= 1");
    // centers 0 and 1; leaves of 0 first, then leaves of 1
    std::vector<std::pair<int, int>> es;
    es.emplace_back(0, 1);
    for (int i = 0; i < a; ++i) es.emplace_back(0, 2 + i);
    for (int i = 0; i < b; ++i) es.emplace_back(1, 2 + a + i);
    return Graph(2 + a + b, es);
}

Graph gen_complete(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph gen_grid(int rows, int cols) {
    require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> es;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) es.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, es);
}

Graph gen_wheel(int n) {
    require(n >= 4, "wheel needs n >= 4");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.emplace_back(0, i);
    for (int i = 1; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(1, n - 1);
    return Graph(n, es);
}

Graph gen_erdos_renyi(int n, double p, uint64_t seed) {
    require(n >= 0, "erdos_renyi needs n >= 0");
    require(p >= 0.0 && p <= 1.0, "erdos_renyi needs p in [0,1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph gen_preferential_attachment(int n, int k, uint64_t seed) {
    require(k >= 1, "preferential attachment needs k >= 1");
    require(n >= k + 1, "preferential attachment needs n >= k + 1");
    Rng rng(seed);
    std::vector<std::pair<int, int>> es;
    // degree-weighted endpoint pool; the seed clique primes it
    std::vector<int> pool;
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) {
            es.emplace_back(u, v);
            pool.push_back(u);
            pool.push_back(v);
        }
    for (int v = k + 1; v < n; ++v) {
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < k)
            targets.insert(pool[rng.below(pool.size())]);
        for (int t : targets) {
            es.emplace_back(t, v);
            pool.push_back(t);
            pool.push_back(v);
        }
    }
    return Graph(n, es);
}

Graph gen_random_split(int n, int max_clique, double extra_p, uint64_t seed) {
    require(n >= 2, "random split needs n >= 2");
    require(max_clique >= 1 && max_clique <= n, "max_clique out of range");
    Rng rng(seed);
    int omega = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_clique)));
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < omega; ++u)
        for (int v = u + 1; v < omega; ++v) es.emplace_back(u, v);
    for (int v = omega; v < n; ++v) {
        int anchor = static_cast<int>(rng.below(static_cast<uint64_t>(omega)));
        es.emplace_back(anchor, v);
        for (int u = 0; u < omega; ++u)
            if (u != anchor && rng.uniform() < extra_p) es.emplace_back(u, v);
    }
    return Graph(n, es);
}

Graph corona(const Graph& g1, const Graph& g2) {
    int n1 = g1.num_vertices();
    require(n1 >= 1, "corona needs a nonempty first factor");
    int n2 = g2.num_vertices();
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g1.edges()) es.emplace_back(e.u, e.v);
    for (int i = 0; i < n1; ++i) {
        int base = n1 + i * n2;
        for (const Edge& e : g2.edges()) es.emplace_back(base + e.u, base + e.v);
        for (int j = 0; j < n2; ++j) es.emplace_back(i, base + j);
    }
    return Graph(n1 + n1 * n2, es);
}

Graph gen_gomega(int omega, GOmegaVariant variant) {
    require(omega >= 4, "G_omega family needs omega >= 4");
    // c_i -> id i-1 (i = 1..omega), b_j -> id omega + j - 1 (j = 1..2*omega-2)
    auto c = [](int i) { return i - 1; };
    auto b = [omega](int j) { return omega + j - 1; };
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= omega; ++i)
        for (int j = i + 1; j <= omega; ++j) es.emplace_back(c(i), c(j));
    for (int i = 1; i <= omega - 1; ++i) {
        es.emplace_back(c(i), b(i));
        es.emplace_back(c(i), b(i + omega - 1));
    }
    if (variant == GOmegaVariant::G)
        for (int j = omega; j <= 2 * omega - 2; ++j) es.emplace_back(c(omega), b(j));
    return Graph(3 * omega - 2, es);
}

GadgetResult gen_3dm_gadget(const ThreeDMInstance& inst, bool split) {
    int n = inst.n, m = static_cast<int>(inst.triples.size());
    require(n >= 1 && m >= 1, "3-DM instance needs n >= 1 and at least one triple");
    std::set<std::array<int, 3>> seen;
    for (const auto& t : inst.triples) {
        for (int coord : t) require(coord >= 0 && coord < n, "triple index out of range");
        require(seen.insert(t).second, "duplicate triple");
    }
    // r = 0, triples 1..m, then X, Y, Z element blocks
    auto a = [](int i) { return 1 + i; };
    auto x = [m](int j) { return 1 + m + j; };
    auto y = [m, n](int j) { return 1 + m + n + j; };
    auto z = [m, n](int j) { return 1 + m + 2 * n + j; };
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i) es.emplace_back(0, a(i));
    for (int i = 0; i < m; ++i) {
        es.emplace_back(a(i), x(inst.triples[i][0]));
        es.emplace_back(a(i), y(inst.triples[i][1]));
        es.emplace_back(a(i), z(inst.triples[i][2]));
    }
    if (split)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) es.emplace_back(a(i), a(j));
    Graph g(3 * n + m + 1, es);
    return {g, is_connected(g)};
}

long long threedm_t1(long long n, long long m) { return m * m + m + 18 * n; }
long long threedm_t2(long long n, long long m) { return m * m + 3 * m * n + 12 * n; }
long long threedm_split_t2(long long n, long long m) {
    return m * m + 3 * m * n + 3 * m + 21 * n - 12;
}

} // namespace sft
