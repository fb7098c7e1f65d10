#include "antimagic/random_gen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace antimagic {

Tree random_lobster(int spine_edges, const LobsterProfile& profile, uint64_t seed) {
    if (spine_edges < 2) {
        throw std::invalid_argument("a lobster spine needs at least two edges");
    }
    if (profile.branch_probability < 0.0 || profile.branch_probability > 1.0) {
        throw std::invalid_argument("branch probability out of [0, 1]");
    }
    if (profile.branch_probability > 0.0 && profile.max_limbs_per_branch < 1) {
        throw std::invalid_argument("branching requires at least one limb per branch");
    }
    if (profile.max_tips_per_limb < 0) {
        throw std::invalid_argument("negative tip count");
    }

    std::mt19937_64 rng(seed);
    auto chance = [&rng](double prob) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < prob;
    };
    auto pick = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    std::vector<Edge> edges;
    for (int i = 0; i < spine_edges; ++i) edges.push_back({i, i + 1});
    int next = spine_edges + 1;

    for (int pos = 1; pos < spine_edges; ++pos) {
        if (!chance(profile.branch_probability)) continue;
        // A leg of length L at position pos creates a path of length
        // L + max(pos, p - pos); keep that at most p.
        int leg_cap = std::min({pos, spine_edges - pos, 2});
        int limb_count = pick(1, profile.max_limbs_per_branch);
        for (int i = 0; i < limb_count; ++i) {
            int limb = next++;
            edges.push_back({pos, limb});
            if (leg_cap >= 2 && profile.max_tips_per_limb > 0) {
                int tip_count = pick(0, profile.max_tips_per_limb);
                for (int j = 0; j < tip_count; ++j) {
                    edges.push_back({limb, next++});
                }
            }
        }
    }
    return Tree(next, std::move(edges));
}

Tree random_tree(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    if (n == 1) return Tree(1, {});
    if (n == 2) return Tree(2, {{0, 1}});

    std::mt19937_64 rng(seed);
    std::vector<int> seq(n - 2);
    for (int& digit : seq) {
        digit = std::uniform_int_distribution<int>(0, n - 1)(rng);
    }

    std::vector<int> deg(n, 1);
    for (int digit : seq) ++deg[digit];

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int digit : seq) {
        edges.push_back({leaf, digit});
        if (--deg[digit] == 1 && digit < ptr) {
            leaf = digit;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back({leaf, n - 1});
    return Tree(n, std::move(edges));
}

}  // namespace antimagic
