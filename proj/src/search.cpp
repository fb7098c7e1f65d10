#include "antimagic/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "antimagic/taxonomy.hpp"
#include "antimagic/verify.hpp"

namespace antimagic {

namespace {

// Depth-first label assignment for one fixed orientation. Edges are visited
// in an order that closes off vertices early; whenever a vertex has all its
// incident edges labeled, its sum is frozen and checked against the sums
// frozen so far.
class LabelSearcher {
public:
    LabelSearcher(const Tree& t, const std::vector<std::pair<Vertex, Vertex>>& ordered_edges)
        : m_(t.edge_count()),
          ordered_edges_(ordered_edges),
          base_degree_(t.vertex_count()) {
        for (Vertex u = 0; u < t.vertex_count(); ++u) base_degree_[u] = t.degree(u);
        // |s(u)| is at most the sum of all labels on u's edges.
        offset_ = m_ * (m_ + 1) / 2;
        sum_seen_.assign(2 * offset_ + 1, 0);
        sums_.assign(t.vertex_count(), 0);
        label_used_.assign(m_ + 1, 0);
    }

    // orientation bit i flips ordered edge i; returns labels in ordered-edge order.
    bool search(uint64_t orientation, std::vector<int>& labels_out) {
        remaining_ = base_degree_;
        std::fill(sums_.begin(), sums_.end(), 0);
        std::fill(label_used_.begin(), label_used_.end(), 0);
        std::fill(sum_seen_.begin(), sum_seen_.end(), 0);
        tails_.resize(m_);
        heads_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            auto [u, v] = ordered_edges_[i];
            bool flip = (orientation >> i) & 1;
            tails_[i] = flip ? v : u;
            heads_[i] = flip ? u : v;
        }
        labels_out.assign(m_, 0);
        return place(0, labels_out);
    }

private:
    bool place(int k, std::vector<int>& labels) {
        if (k == m_) return true;
        Vertex tail = tails_[k];
        Vertex head = heads_[k];
        for (int label = 1; label <= m_; ++label) {
            if (label_used_[label]) continue;
            label_used_[label] = 1;
            sums_[head] += label;
            sums_[tail] -= label;
            --remaining_[head];
            --remaining_[tail];

            bool ok = true;
            int frozen = 0;
            for (Vertex w : {head, tail}) {
                if (remaining_[w] == 0) {
                    int slot = sums_[w] + offset_;
                    if (sum_seen_[slot]) {
                        ok = false;
                        break;
                    }
                    sum_seen_[slot] = 1;
                    frozen_stack_[frozen++] = slot;
                }
            }
            if (ok) {
                labels[k] = label;
                if (place(k + 1, labels)) return true;
            }
            for (int i = 0; i < frozen; ++i) sum_seen_[frozen_stack_[i]] = 0;
            ++remaining_[head];
            ++remaining_[tail];
            sums_[head] -= label;
            sums_[tail] += label;
            label_used_[label] = 0;
        }
        return false;
    }

    int m_;
    const std::vector<std::pair<Vertex, Vertex>>& ordered_edges_;
    std::vector<int> base_degree_;
    std::vector<int> remaining_;
    std::vector<int> sums_;
    std::vector<char> label_used_;
    std::vector<char> sum_seen_;
    std::vector<Vertex> tails_, heads_;
    std::array<int, 2> frozen_stack_{};
    int offset_ = 0;
};

// Edges reordered along a depth-first walk from vertex 0, so consecutive
// edges share vertices and leaves complete immediately.
std::vector<std::pair<Vertex, Vertex>> dfs_edge_order(const Tree& t) {
    std::vector<std::pair<Vertex, Vertex>> order;
    order.reserve(t.edge_count());
    std::vector<char> seen(t.vertex_count(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : t.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                order.emplace_back(u, v);
                stack.push_back(v);
            }
        }
    }
    return order;
}

OrientedLabeling assemble(const Tree& t, const std::vector<std::pair<Vertex, Vertex>>& edges,
                          uint64_t orientation, const std::vector<int>& labels) {
    OrientedLabeling d;
    d.vertex_count = t.vertex_count();
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        bool flip = (orientation >> i) & 1;
        d.arcs.push_back({flip ? v : u, flip ? u : v, labels[i]});
    }
    return d;
}

SearchResult exhaustive_search(const Tree& t, int workers) {
    const int m = t.edge_count();
    const auto edges = dfs_edge_order(t);
    SearchResult result;
    result.exhaustive = true;

    if (m == 0) {
        result.outcome = SearchOutcome::witness_found;
        OrientedLabeling d;
        d.vertex_count = t.vertex_count();
        result.witness = d;
        return result;
    }

    // Bit 0 is pinned: reversing every arc negates every sum, which
    // preserves both collisions and their absence.
    const uint64_t half_space = uint64_t{1} << (m - 1);
    workers = std::max(1, std::min<int>(workers, static_cast<int>(half_space)));

    std::atomic<uint64_t> best_mask{UINT64_MAX};
    std::vector<std::vector<int>> best_labels(workers);
    std::vector<unsigned long long> tried(workers, 0);

    auto run_worker = [&](int w) {
        LabelSearcher searcher(t, edges);
        std::vector<int> labels;
        for (uint64_t half = w; half < half_space; half += workers) {
            uint64_t mask = half << 1;
            if (mask >= best_mask.load(std::memory_order_relaxed)) continue;
            ++tried[w];
            if (searcher.search(mask, labels)) {
                uint64_t seen = best_mask.load(std::memory_order_relaxed);
                while (mask < seen &&
                       !best_mask.compare_exchange_weak(seen, mask, std::memory_order_relaxed)) {
                }
                if (best_mask.load(std::memory_order_relaxed) == mask) {
                    best_labels[w] = labels;
                }
                return;
            }
        }
    };

    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
        for (auto& th : pool) th.join();
    }

    for (int w = 0; w < workers; ++w) result.orientations_tried += tried[w];
    uint64_t mask = best_mask.load();
    if (mask == UINT64_MAX) {
        result.outcome = SearchOutcome::exhausted_no_witness;
        return result;
    }

    // The winning worker is the one whose stride covers the winning mask.
    const std::vector<int>& labels = best_labels[(mask >> 1) % workers];
    OrientedLabeling witness = assemble(t, edges, mask, labels);
    if (!verify_antimagic(witness).antimagic()) {
        throw std::logic_error("search produced an invalid witness");
    }
    result.outcome = SearchOutcome::witness_found;
    result.witness = std::move(witness);
    return result;
}

SearchResult randomized_search(const Tree& t, const SearchOptions& options) {
    const int m = t.edge_count();
    const auto& edges = t.edges();
    std::mt19937_64 rng(options.seed);
    std::vector<int> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = i + 1;

    SearchResult result;
    for (long long attempt = 0; attempt < options.random_attempts; ++attempt) {
        uint64_t orientation = rng();
        for (int i = m - 1; i > 0; --i) {
            std::swap(labels[i], labels[rng() % (i + 1)]);
        }
        OrientedLabeling d;
        d.vertex_count = t.vertex_count();
        for (int i = 0; i < m; ++i) {
            bool flip = (orientation >> (i % 64)) & 1;
            Vertex a = edges[i].a, b = edges[i].b;
            d.arcs.push_back({flip ? b : a, flip ? a : b, labels[i]});
        }
        ++result.orientations_tried;
        if (verify_antimagic(d).antimagic()) {
            result.outcome = SearchOutcome::witness_found;
            result.witness = std::move(d);
            return result;
        }
    }
    result.outcome = SearchOutcome::inconclusive;
    return result;
}

}  // namespace

SearchResult find_antimagic_orientation(const Tree& t, const SearchOptions& options) {
    if (t.edge_count() <= options.exhaustive_edge_limit) {
        return exhaustive_search(t, options.workers);
    }
    return randomized_search(t, options);
}

// ---------------------------------------------------------------------------
// Exhaustive non-isomorphic tree enumeration.

namespace {

constexpr int kMaxEnumVertices = 10;

// Fixed-capacity scratch space for one decoded tree.
struct TreeScratch {
    int n = 0;
    int edge_a[kMaxEnumVertices], edge_b[kMaxEnumVertices];
    int adj[kMaxEnumVertices][kMaxEnumVertices];
    int deg[kMaxEnumVertices];
};

// Linear-time decode of one integer sequence into tree edges.
void decode_sequence(const int* seq, int n, TreeScratch& ts) {
    ts.n = n;
    int deg[kMaxEnumVertices];
    for (int i = 0; i < n; ++i) deg[i] = 1;
    for (int i = 0; i < n - 2; ++i) ++deg[seq[i]];

    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int i = 0; i < n - 2; ++i) {
        int v = seq[i];
        ts.edge_a[i] = leaf;
        ts.edge_b[i] = v;
        if (--deg[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    ts.edge_a[n - 2] = leaf;
    ts.edge_b[n - 2] = n - 1;
}

void build_adjacency(TreeScratch& ts) {
    for (int i = 0; i < ts.n; ++i) ts.deg[i] = 0;
    for (int i = 0; i < ts.n - 1; ++i) {
        int a = ts.edge_a[i], b = ts.edge_b[i];
        ts.adj[a][ts.deg[a]++] = b;
        ts.adj[b][ts.deg[b]++] = a;
    }
}

// Tree centers by simultaneous leaf peeling; one or two survive.
int find_centers(const TreeScratch& ts, int centers[2]) {
    int deg[kMaxEnumVertices];
    char dead[kMaxEnumVertices] = {};
    for (int i = 0; i < ts.n; ++i) deg[i] = ts.deg[i];
    int alive = ts.n;
    int layer[kMaxEnumVertices], next_layer[kMaxEnumVertices];
    int layer_size = 0;
    for (int i = 0; i < ts.n; ++i) {
        if (deg[i] <= 1) layer[layer_size++] = i;
    }
    while (alive > 2) {
        int next_size = 0;
        for (int j = 0; j < layer_size; ++j) {
            int u = layer[j];
            dead[u] = 1;
            --alive;
            for (int k = 0; k < ts.deg[u]; ++k) {
                int v = ts.adj[u][k];
                if (!dead[v] && --deg[v] == 1) next_layer[next_size++] = v;
            }
        }
        std::copy(next_layer, next_layer + next_size, layer);
        layer_size = next_size;
    }
    int count = 0;
    for (int i = 0; i < ts.n; ++i) {
        if (!dead[i]) centers[count++] = i;
    }
    return count;
}

// Canonical rooted code as a bit string: '(' = 1, ')' = 0, children sorted
// by (length, bits). A full-tree code has exactly 2n bits, so codes rooted
// at different centers compare directly as integers.
struct BitCode {
    int len = 0;
    uint32_t bits = 0;
};

BitCode rooted_code(const TreeScratch& ts, int u, int parent) {
    BitCode children[kMaxEnumVertices];
    int count = 0;
    for (int k = 0; k < ts.deg[u]; ++k) {
        int v = ts.adj[u][k];
        if (v == parent) continue;
        BitCode c = rooted_code(ts, v, u);
        int pos = count++;
        while (pos > 0 && (children[pos - 1].len > c.len ||
                           (children[pos - 1].len == c.len && children[pos - 1].bits > c.bits))) {
            children[pos] = children[pos - 1];
            --pos;
        }
        children[pos] = c;
    }
    BitCode code{1, 1};
    for (int i = 0; i < count; ++i) {
        code.bits = (code.bits << children[i].len) | children[i].bits;
        code.len += children[i].len;
    }
    code.bits <<= 1;
    ++code.len;
    return code;
}

uint32_t canonical_code(TreeScratch& ts) {
    build_adjacency(ts);
    int centers[2];
    int count = find_centers(ts, centers);
    uint32_t best = rooted_code(ts, centers[0], -1).bits;
    if (count == 2) {
        best = std::min(best, rooted_code(ts, centers[1], -1).bits);
    }
    return best;
}

// Rebuilds the rooted tree a canonical code describes; vertex ids in
// preorder, so the output is deterministic.
void parse_code(uint32_t bits, int n, std::vector<Edge>& edges) {
    edges.clear();
    int pos = 2 * n - 1;  // most significant bit first
    int next_id = 0;
    std::vector<int> stack;
    while (pos >= 0) {
        if ((bits >> pos) & 1) {
            int id = next_id++;
            if (!stack.empty()) edges.push_back({stack.back(), id});
            stack.push_back(id);
        } else {
            stack.pop_back();
        }
        --pos;
    }
}

}  // namespace

std::vector<Tree> enumerate_trees(int n) {
    if (n < 1 || n > kMaxEnumVertices) {
        throw std::invalid_argument("tree enumeration supports 1..10 vertices");
    }
    if (n == 1) {
        return {Tree(1, {})};
    }
    if (n == 2) {
        return {Tree(2, {{0, 1}})};
    }

    std::unordered_set<uint32_t> codes;
    TreeScratch ts;
    int seq[kMaxEnumVertices] = {};
    const int digits = n - 2;
    while (true) {
        decode_sequence(seq, n, ts);
        codes.insert(canonical_code(ts));

        int d = digits - 1;
        while (d >= 0 && seq[d] == n - 1) {
            seq[d] = 0;
            --d;
        }
        if (d < 0) break;
        ++seq[d];
    }

    std::vector<uint32_t> sorted(codes.begin(), codes.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Tree> trees;
    trees.reserve(sorted.size());
    std::vector<Edge> edges;
    for (uint32_t code : sorted) {
        parse_code(code, n, edges);
        trees.emplace_back(n, edges);
    }
    return trees;
}

std::vector<Tree> enumerate_lobsters(int n) {
    std::vector<Tree> out;
    for (Tree& t : enumerate_trees(n)) {
        if (classify(t) != TreeClass::other) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace antimagic
