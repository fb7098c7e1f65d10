#pragma once

#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

/// Labels for a plain path v_0 ... v_m in edge order from v_0:
/// 1,2,...,m for even m and 1,2,...,m-2,m,m-1 for odd m. The resulting
/// undirected vertex sums are pairwise distinct. Requires m >= 2.
std::vector<int> antimagic_path_labels(int edge_count);

/// Orients every edge of the tree from one 2-coloring class to the other
/// (color of vertex 0 is the tail side). `edge_labels` is aligned with
/// t.edges() and must be a bijection onto [1, m].
OrientedLabeling orient_bipartite(const Tree& t, const std::vector<int>& edge_labels);

/// The thirteen front-segment label schedules, keyed by the parity of the
/// back-segment length and the slack value (with the small-value special
/// rows kept distinct).
enum class FrontCase {
    even_slack1,
    even_slack_odd_ge3,
    even2_slack0,
    even_ge4_slack0,
    even_slack2,
    even_slack_even_ge4,
    odd_slack0,
    odd_slack2,
    odd_slack_even_ge4,
    odd1_slack1,
    odd_ge3_slack1,
    odd_slack3,
    odd_slack_odd_ge5,
};

constexpr int front_case_count = 13;
const char* to_string(FrontCase c);

/// Normalized parameters for labeling a path with marked internal vertices
/// v_{h_1} < ... < v_{h_t}. tail_len is the edge count after the last mark,
/// slack = h_1 - tail_len; when the raw positions have slack < 0 the whole
/// path is mirrored first and `reversed` records that.
struct SpineLabelParams {
    int edge_count = 0;          // m
    std::vector<int> marked;     // normalized positions, strictly increasing, within [1, m-1]
    bool reversed = false;
    int tail_len = 0;            // m - marked.back()
    int slack = 0;               // marked.front() - tail_len, >= 0 after normalization
    FrontCase front_case = FrontCase::even_slack1;

    int front_len() const { return tail_len + slack; }  // marked.front()
};

/// Validates and normalizes the marked positions. Throws
/// std::invalid_argument if m < 2, the set is empty, or any position
/// touches an endpoint.
SpineLabelParams make_spine_params(int edge_count, std::vector<int> marked);

/// The not-yet-assigned labels from [1, m]; hands out its extremes.
class LabelPool {
public:
    explicit LabelPool(int edge_count);

    /// Marks a label as used up front; throws if absent.
    void remove(int label);

    int take_largest();
    int take_smallest();
    int size() const { return remaining_; }
    bool empty() const { return remaining_ == 0; }

private:
    std::vector<char> available_;   // index 1..m
    int lo_ = 1;
    int hi_ = 0;
    int remaining_ = 0;
};

/// Back-segment labels, ordered from the far endpoint inward
/// (first element goes on the edge incident to v_m).
std::vector<int> back_segment_labels(const SpineLabelParams& params);

/// Front-segment labels, ordered outward from v_0; exactly front_len()
/// of them, disjoint from the back-segment labels.
std::vector<int> front_segment_labels(const SpineLabelParams& params);

/// The vertex sums induced on v_0 ... v_{h_1 - 1} by the front-segment
/// labels under the construction's orientation, in vertex order. Listed
/// per case; label_spine checks its own output against this.
std::vector<int> predicted_front_sums(const SpineLabelParams& params);

/// Which rule filled the segment just before the last mark.
enum class LastSegmentFill {
    not_applicable,          // single marked vertex: no middle segments
    single_edge,             // one edge left; takes the last label
    from_back,               // standard: alternation starts at the v_m side
    even_slack_odd_count,    // reversed: even tail, even slack >= 2, odd edge count
    odd_slack_odd_count,     // reversed: odd tail, odd slack >= 3, odd edge count
    low_slack_even_count,    // reversed: minimal-slack cases, edge count >= 4 even
};

const char* to_string(LastSegmentFill f);

struct SpineLabeling {
    OrientedLabeling labeling;      // on path positions 0..m
    SpineLabelParams params;        // normalized; `reversed` tells whether output was mirrored back
    LastSegmentFill last_segment_fill = LastSegmentFill::not_applicable;
    // Middle segments whose fill direction had to be flipped after the
    // primary schedule produced a sum collision (rare boundary instances).
    std::vector<int> flipped_segments;
};

/// Orients and labels the path v_0 ... v_m so that every marked vertex has
/// positive vertex-sum, every unmarked vertex u has 1 <= |s(u)| <= m, and
/// the unmarked sums are pairwise distinct. Arcs converge at the sink mark;
/// arc i of the result covers path edge (v_i, v_{i+1}).
SpineLabeling label_spine(int edge_count, const std::vector<int>& marked_positions);

}  // namespace antimagic
