// Shared fixtures and random-instance generators for the test suite.
#pragma once

#include <pstkit/bridge.hpp>
#include <pstkit/bicayley.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testutil {

using namespace pstkit;

inline BiCayleySpec k2_spec() {
    return BiCayleySpec(make_group({1}), {}, {}, {{0}});
}

/// The 4-cycle as BiCay(Z_2; {}, {}, Z_2).
inline BiCayleySpec c4_spec() {
    return BiCayleySpec(make_group({2}), {}, {}, {{0}, {1}});
}

/// Two disjoint triangles: BiCay(Z_3; {1,2}, {1,2}, {}).
inline BiCayleySpec z3_triangles() {
    return BiCayleySpec(make_group({3}), {{1}, {2}}, {{1}, {2}}, {});
}

/// Two disjoint pentagons — the stock non-integral instance.
inline BiCayleySpec z5_pentagons() {
    return BiCayleySpec(make_group({5}), {{1}, {4}}, {{1}, {4}}, {});
}

inline BiCayleySpec family_spec(const std::string& name, long m) {
    ExampleGraph ex = example_family(name, m);
    return cayley_to_bicayley(ex.extension, ex.connection);
}

/// Random inverse-closed, identity-free subset of the group.
inline std::vector<GroupElement> random_symmetric_set(const GroupSpec& g,
                                                      std::mt19937& rng,
                                                      double p = 0.4) {
    std::bernoulli_distribution coin(p);
    std::vector<GroupElement> out;
    for (const auto& e : g.enumerate_elements()) {
        if (e == g.identity()) continue;
        GroupElement inv = g.inverse(e);
        if (inv < e) continue;  // one decision per {e, -e} orbit
        if (!coin(rng)) continue;
        out.push_back(e);
        if (inv != e) out.push_back(inv);
    }
    return out;
}

inline std::vector<GroupElement> random_subset(const GroupSpec& g,
                                               std::mt19937& rng,
                                               double p = 0.3) {
    std::bernoulli_distribution coin(p);
    std::vector<GroupElement> out;
    for (const auto& e : g.enumerate_elements())
        if (coin(rng)) out.push_back(e);
    return out;
}

inline GroupSpec random_group(std::mt19937& rng, long max_n) {
    static const std::vector<std::vector<long>> shapes = {
        {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {12},
        {2, 2}, {2, 3}, {2, 4}, {3, 3}, {2, 2, 2}, {2, 6}, {11}};
    std::vector<std::vector<long>> ok;
    for (const auto& s : shapes) {
        long n = std::accumulate(s.begin(), s.end(), 1L, std::multiplies<>());
        if (n <= max_n) ok.push_back(s);
    }
    return make_group(ok[std::uniform_int_distribution<std::size_t>(
        0, ok.size() - 1)(rng)]);
}

inline BiCayleySpec random_spec(std::mt19937& rng, long max_n) {
    GroupSpec g = random_group(rng, max_n);
    auto r = random_symmetric_set(g, rng);
    auto l = random_symmetric_set(g, rng);
    auto t = random_subset(g, rng);
    return BiCayleySpec(std::move(g), std::move(r), std::move(l), std::move(t));
}

/**
 * Random integral spec over a cyclic group: connection sets are unions of
 * gcd classes C_d = {k : gcd(k,n) = d}, whose character sums (Ramanujan
 * sums) are integers. With R = L the discriminant is 4 chi(T)^2, so any
 * class-union T keeps the spectrum integral; with R != L we force T empty
 * so sqrt(Delta) = |chi(R) - chi(L)|.
 */
inline BiCayleySpec random_integral_spec(std::mt19937& rng, long max_n) {
    std::uniform_int_distribution<long> pick_n(1, max_n);
    long n = pick_n(rng);
    GroupSpec g = make_group({n});
    std::bernoulli_distribution coin(0.5);

    auto class_union = [&](bool allow_identity) {
        std::vector<GroupElement> out;
        std::vector<bool> take(static_cast<std::size_t>(n) + 1, false);
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) take[static_cast<std::size_t>(d)] = coin(rng);
        for (long k = 0; k < n; ++k) {
            if (k == 0 && !allow_identity) continue;
            long d = k == 0 ? n : std::gcd(k, n);
            if (take[static_cast<std::size_t>(d)]) out.push_back({k});
        }
        return out;
    };

    auto r = class_union(false);
    if (coin(rng)) {
        return BiCayleySpec(g, r, r, class_union(true));
    }
    return BiCayleySpec(g, r, class_union(false), {});
}

}  // namespace testutil
