#include "antimagic/path_labeling.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace antimagic {

std::vector<int> antimagic_path_labels(int edge_count) {
    if (edge_count < 2) {
        throw std::invalid_argument("path labeling needs at least two edges");
    }
    std::vector<int> labels(edge_count);
    std::iota(labels.begin(), labels.end(), 1);
    if (edge_count % 2 == 1) {
        std::swap(labels[edge_count - 2], labels[edge_count - 1]);
    }
    return labels;
}

OrientedLabeling orient_bipartite(const Tree& t, const std::vector<int>& edge_labels) {
    if (static_cast<int>(edge_labels.size()) != t.edge_count()) {
        throw std::invalid_argument("one label per edge required");
    }
    {
        OrientedLabeling probe;
        probe.vertex_count = t.vertex_count();
        for (int i = 0; i < t.edge_count(); ++i) {
            probe.arcs.push_back({t.edges()[i].a, t.edges()[i].b, edge_labels[i]});
        }
        if (!is_bijective_labeling(probe)) {
            throw std::invalid_argument("edge labels are not a bijection onto [1, m]");
        }
    }

    // 2-coloring by depth parity from vertex 0; arcs run from color 0 to color 1.
    std::vector<int> color(t.vertex_count(), -1);
    std::vector<Vertex> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : t.neighbors(u)) {
            if (color[v] < 0) {
                color[v] = 1 - color[u];
                stack.push_back(v);
            }
        }
    }

    OrientedLabeling d;
    d.vertex_count = t.vertex_count();
    d.arcs.reserve(t.edge_count());
    for (int i = 0; i < t.edge_count(); ++i) {
        Edge e = t.edges()[i];
        if (color[e.a] == 0) {
            d.arcs.push_back({e.a, e.b, edge_labels[i]});
        } else {
            d.arcs.push_back({e.b, e.a, edge_labels[i]});
        }
    }
    return d;
}

const char* to_string(FrontCase c) {
    switch (c) {
        case FrontCase::even_slack1: return "even tail, slack 1";
        case FrontCase::even_slack_odd_ge3: return "even tail, odd slack >= 3";
        case FrontCase::even2_slack0: return "tail 2, slack 0";
        case FrontCase::even_ge4_slack0: return "even tail >= 4, slack 0";
        case FrontCase::even_slack2: return "even tail, slack 2";
        case FrontCase::even_slack_even_ge4: return "even tail, even slack >= 4";
        case FrontCase::odd_slack0: return "odd tail, slack 0";
        case FrontCase::odd_slack2: return "odd tail, slack 2";
        case FrontCase::odd_slack_even_ge4: return "odd tail, even slack >= 4";
        case FrontCase::odd1_slack1: return "tail 1, slack 1";
        case FrontCase::odd_ge3_slack1: return "odd tail >= 3, slack 1";
        case FrontCase::odd_slack3: return "odd tail, slack 3";
        case FrontCase::odd_slack_odd_ge5: return "odd tail, odd slack >= 5";
    }
    return "?";
}

const char* to_string(LastSegmentFill f) {
    switch (f) {
        case LastSegmentFill::not_applicable: return "not applicable";
        case LastSegmentFill::single_edge: return "single edge";
        case LastSegmentFill::from_back: return "from back";
        case LastSegmentFill::even_slack_odd_count: return "reversed (even slack, odd count)";
        case LastSegmentFill::odd_slack_odd_count: return "reversed (odd slack, odd count)";
        case LastSegmentFill::low_slack_even_count: return "reversed (low slack, even count)";
    }
    return "?";
}

namespace {

FrontCase select_front_case(int tail_len, int slack) {
    if (tail_len % 2 == 0) {
        if (slack == 0) return tail_len == 2 ? FrontCase::even2_slack0 : FrontCase::even_ge4_slack0;
        if (slack == 1) return FrontCase::even_slack1;
        if (slack == 2) return FrontCase::even_slack2;
        return slack % 2 == 1 ? FrontCase::even_slack_odd_ge3 : FrontCase::even_slack_even_ge4;
    }
    if (slack == 0) return FrontCase::odd_slack0;
    if (slack == 1) return tail_len == 1 ? FrontCase::odd1_slack1 : FrontCase::odd_ge3_slack1;
    if (slack == 2) return FrontCase::odd_slack2;
    if (slack == 3) return FrontCase::odd_slack3;
    return slack % 2 == 0 ? FrontCase::odd_slack_even_ge4 : FrontCase::odd_slack_odd_ge5;
}

}  // namespace

SpineLabelParams make_spine_params(int edge_count, std::vector<int> marked) {
    if (edge_count < 2) {
        throw std::invalid_argument("marked-path labeling needs at least two edges");
    }
    if (marked.empty()) {
        throw std::invalid_argument("at least one marked position required");
    }
    std::sort(marked.begin(), marked.end());
    if (std::adjacent_find(marked.begin(), marked.end()) != marked.end()) {
        throw std::invalid_argument("duplicate marked position");
    }
    if (marked.front() < 1 || marked.back() > edge_count - 1) {
        throw std::invalid_argument("marked positions must be internal to the path");
    }

    SpineLabelParams params;
    params.edge_count = edge_count;
    params.reversed = marked.front() < edge_count - marked.back();
    if (params.reversed) {
        std::vector<int> mirrored(marked.size());
        for (size_t i = 0; i < marked.size(); ++i) {
            mirrored[i] = edge_count - marked[marked.size() - 1 - i];
        }
        marked = std::move(mirrored);
    }
    params.marked = std::move(marked);
    params.tail_len = edge_count - params.marked.back();
    params.slack = params.marked.front() - params.tail_len;
    params.front_case = select_front_case(params.tail_len, params.slack);
    return params;
}

LabelPool::LabelPool(int edge_count) {
    if (edge_count < 0) throw std::invalid_argument("negative pool size");
    available_.assign(edge_count + 1, 1);
    if (!available_.empty()) available_[0] = 0;
    lo_ = 1;
    hi_ = edge_count;
    remaining_ = edge_count;
}

void LabelPool::remove(int label) {
    if (label < 1 || label >= static_cast<int>(available_.size()) || !available_[label]) {
        throw std::invalid_argument("label " + std::to_string(label) + " not available");
    }
    available_[label] = 0;
    --remaining_;
}

int LabelPool::take_largest() {
    while (hi_ >= 1 && !available_[hi_]) --hi_;
    if (hi_ < 1) throw std::logic_error("label pool exhausted");
    available_[hi_] = 0;
    --remaining_;
    return hi_;
}

int LabelPool::take_smallest() {
    while (lo_ < static_cast<int>(available_.size()) && !available_[lo_]) ++lo_;
    if (lo_ >= static_cast<int>(available_.size())) throw std::logic_error("label pool exhausted");
    available_[lo_] = 0;
    --remaining_;
    return lo_;
}

namespace {

// The even-tail slack-0 schedules break down on two boundary families and
// need replacements (worked out from the conditions, not the tables):
//   - a single mark at m/2 (m = 2*tail): the front's terminal correction
//     would reuse the back's last label, so the front stays on the plain
//     alternating prefix instead;
//   - marks {tail, tail+1} (m = 2*tail + 1): the back's interior +2 sum
//     would repeat the front's trailing +2, so the back's last low label
//     drops by one, which shifts that sum to +3.
bool lone_center_mark(const SpineLabelParams& params) {
    return params.marked.size() == 1 && params.tail_len % 2 == 0 && params.slack == 0;
}

bool adjacent_center_marks(const SpineLabelParams& params) {
    return params.marked.size() >= 2 && params.tail_len % 2 == 0 && params.slack == 0 &&
           params.edge_count == 2 * params.tail_len + 1;
}

}  // namespace

std::vector<int> back_segment_labels(const SpineLabelParams& params) {
    const int m = params.edge_count;
    std::vector<int> labels(params.tail_len);
    // k-th edge counted from v_m: high chain m-1, m-3, ... at odd k,
    // low chain 2, 4, ... at even k. Both parities of the tail length
    // collapse to this one interleaving.
    for (int k = 1; k <= params.tail_len; ++k) {
        labels[k - 1] = (k % 2 == 1) ? m - k : k;
    }
    if (adjacent_center_marks(params)) {
        labels.back() = params.tail_len - 1;
    }
    return labels;
}

namespace {

// Shared prefix of every front-segment schedule: m, 1, m-2, 3, m-4, 5, ...
void append_front_prefix(std::vector<int>& out, int m, int count) {
    for (int k = 1; k <= count; ++k) {
        out.push_back(k % 2 == 1 ? m - k + 1 : k - 1);
    }
}

// Interleaved tail pairs. For an even back segment the j-th pair is
// (tail+j, m-tail-j); for an odd one it is (tail+j-1, m-tail-j).
void append_front_pairs(std::vector<int>& out, int m, int tail_len, int pair_count) {
    const int low_base = (tail_len % 2 == 0) ? tail_len : tail_len - 1;
    for (int j = 1; j <= pair_count; ++j) {
        out.push_back(low_base + j);
        out.push_back(m - tail_len - j);
    }
}

}  // namespace

std::vector<int> front_segment_labels(const SpineLabelParams& params) {
    const int m = params.edge_count;
    const int len = params.tail_len;
    const int s = params.slack;
    std::vector<int> out;
    out.reserve(params.front_len());

    switch (params.front_case) {
        case FrontCase::even_slack1:
            append_front_prefix(out, m, len + 1);
            break;
        case FrontCase::even_slack_odd_ge3:
            append_front_prefix(out, m, len + 1);
            append_front_pairs(out, m, len, (s - 1) / 2);
            break;
        case FrontCase::even2_slack0:
        case FrontCase::even_ge4_slack0:
            if (lone_center_mark(params)) {
                append_front_prefix(out, m, len);
            } else {
                append_front_prefix(out, m, len - 1);
                out.push_back(m - len);
            }
            break;
        case FrontCase::even_slack2:
            append_front_prefix(out, m, len + 1);
            out.push_back(m - len - 1);
            break;
        case FrontCase::even_slack_even_ge4:
            append_front_prefix(out, m, len + 1);
            append_front_pairs(out, m, len, s / 2 - 1);
            out.push_back(m - len - s / 2);
            break;
        case FrontCase::odd_slack0:
            append_front_prefix(out, m, len);
            break;
        case FrontCase::odd_slack2:
            append_front_prefix(out, m, len);
            append_front_pairs(out, m, len, 1);
            break;
        case FrontCase::odd_slack_even_ge4:
            append_front_prefix(out, m, len);
            append_front_pairs(out, m, len, s / 2);
            break;
        case FrontCase::odd1_slack1:
        case FrontCase::odd_ge3_slack1:
            append_front_prefix(out, m, len);
            out.push_back(m - len - 1);
            break;
        case FrontCase::odd_slack3:
            append_front_prefix(out, m, len);
            append_front_pairs(out, m, len, 1);
            out.push_back(m - len - 2);
            break;
        case FrontCase::odd_slack_odd_ge5:
            append_front_prefix(out, m, len);
            append_front_pairs(out, m, len, s / 2);
            out.push_back(m - len - s / 2 - 1);
            break;
    }
    return out;
}

namespace {

// Sums on v_0, v_1, ...: -m first, then alternating +(m-1), -(m-3), +(m-5), ...
void append_generic_sums(std::vector<int>& out, int m, int count) {
    if (count >= 1) out.push_back(-m);
    for (int k = 1; k < count; ++k) {
        int magnitude = m - (2 * k - 1);
        out.push_back(k % 2 == 1 ? magnitude : -magnitude);
    }
}

// Magnitudes start, start-1, start-2, ... with signs +, -, +, ...
void append_unit_run(std::vector<int>& out, int start, int count) {
    for (int j = 0; j < count; ++j) {
        int magnitude = start - j;
        out.push_back(j % 2 == 0 ? magnitude : -magnitude);
    }
}

}  // namespace

std::vector<int> predicted_front_sums(const SpineLabelParams& params) {
    const int m = params.edge_count;
    const int len = params.tail_len;
    const int s = params.slack;
    std::vector<int> out;
    out.reserve(params.front_len());

    switch (params.front_case) {
        case FrontCase::even_slack1:
            append_generic_sums(out, m, len + 1);
            break;
        case FrontCase::even_slack_odd_ge3:
            append_generic_sums(out, m, len + 1);
            append_unit_run(out, m - 2 * len - 1, s - 1);
            break;
        case FrontCase::even2_slack0:
            if (lone_center_mark(params)) {
                append_generic_sums(out, m, len);
            } else {
                out = {-m, 2};
            }
            break;
        case FrontCase::odd1_slack1:
            out = {-m, 2};
            break;
        case FrontCase::even_ge4_slack0:
            if (lone_center_mark(params)) {
                append_generic_sums(out, m, len);
            } else {
                append_generic_sums(out, m, len - 1);
                out.push_back(2);
            }
            break;
        case FrontCase::even_slack2:
            append_generic_sums(out, m, len + 1);
            out.push_back(1);
            break;
        case FrontCase::even_slack_even_ge4:
            append_generic_sums(out, m, len + 1);
            append_unit_run(out, m - 2 * len - 1, s - 2);
            out.push_back(1);
            break;
        case FrontCase::odd_slack0:
            append_generic_sums(out, m, len);
            break;
        case FrontCase::odd_slack2:
            append_generic_sums(out, m, len);
            out.push_back(m - 2 * len + 1);
            out.push_back(-(m - 2 * len - 1));
            break;
        case FrontCase::odd_slack_even_ge4:
            append_generic_sums(out, m, len);
            out.push_back(m - 2 * len + 1);
            out.push_back(-(m - 2 * len - 1));
            append_unit_run(out, m - 2 * len - 2, s - 2);
            break;
        case FrontCase::odd_ge3_slack1:
            append_generic_sums(out, m, len);
            out.push_back(2);
            break;
        case FrontCase::odd_slack3:
            append_generic_sums(out, m, len);
            out.push_back(m - 2 * len + 1);
            out.push_back(-(m - 2 * len - 1));
            out.push_back(1);
            break;
        case FrontCase::odd_slack_odd_ge5:
            append_generic_sums(out, m, len);
            out.push_back(m - 2 * len + 1);
            out.push_back(-(m - 2 * len - 1));
            append_unit_run(out, m - 2 * len - 2, s - 3);
            out.push_back(1);
            break;
    }
    return out;
}

namespace {

LastSegmentFill select_last_segment_fill(const SpineLabelParams& params, int edge_count) {
    if (edge_count == 1) return LastSegmentFill::single_edge;
    const int len = params.tail_len;
    const int s = params.slack;
    const bool odd_count = edge_count % 2 == 1;
    if (len % 2 == 0 && s >= 2 && s % 2 == 0 && odd_count) {
        return LastSegmentFill::even_slack_odd_count;
    }
    if (len % 2 == 1 && s >= 3 && s % 2 == 1 && odd_count) {
        return LastSegmentFill::odd_slack_odd_count;
    }
    if (((len % 2 == 0 && s == 0) || (len % 2 == 1 && s == 1)) &&
        edge_count >= 4 && !odd_count) {
        return LastSegmentFill::low_slack_even_count;
    }
    return LastSegmentFill::from_back;
}

// Assigns pool extremes to edges [first, last] of the path, alternating
// largest/smallest starting with largest from the chosen end. Results land
// directly in `labels`, which is indexed by edge (1-based).
void fill_segment(std::vector<int>& labels, LabelPool& pool, int first_edge, int last_edge,
                  bool from_back) {
    const int count = last_edge - first_edge + 1;
    for (int i = 0; i < count; ++i) {
        int edge = from_back ? last_edge - i : first_edge + i;
        labels[edge] = (i % 2 == 0) ? pool.take_largest() : pool.take_smallest();
    }
}

[[noreturn]] void contract_failure(const SpineLabelParams& params, const std::string& what) {
    throw std::logic_error("spine labeling contract violated (" + what + ") for m=" +
                           std::to_string(params.edge_count) + " case [" +
                           to_string(params.front_case) + "]");
}

}  // namespace

namespace {

// Labels for the whole path under the normalized parameters, with the fill
// direction of middle segment i toggled whenever flips[i] is set. A flip
// only permutes labels within its own segment (the pool sees the same
// take-largest/take-smallest sequence), so segments stay independent.
struct ScheduleResult {
    std::vector<int> labels;   // labels[k] covers path edge (v_{k-1}, v_k)
    LastSegmentFill fill_mode = LastSegmentFill::not_applicable;
};

ScheduleResult build_schedule(const SpineLabelParams& params, const std::vector<char>& flips) {
    const int m = params.edge_count;
    const std::vector<int>& marks = params.marked;
    const int t = static_cast<int>(marks.size());

    ScheduleResult out;
    out.labels.assign(m + 1, 0);
    LabelPool pool(m);

    std::vector<int> back = back_segment_labels(params);
    if (static_cast<int>(back.size()) != params.tail_len) {
        contract_failure(params, "back segment length");
    }
    for (int k = 0; k < params.tail_len; ++k) {
        pool.remove(back[k]);  // throws on duplicates or out-of-range
        out.labels[m - k] = back[k];
    }

    std::vector<int> front = front_segment_labels(params);
    if (static_cast<int>(front.size()) != params.front_len()) {
        contract_failure(params, "front segment length");
    }
    for (int k = 0; k < params.front_len(); ++k) {
        pool.remove(front[k]);  // also enforces disjointness from the back segment
        out.labels[k + 1] = front[k];
    }

    // Middle segments in increasing order, each filled from its v_m side
    // unless flipped.
    for (int i = 1; i <= t - 2; ++i) {
        fill_segment(out.labels, pool, marks[i - 1] + 1, marks[i], !flips[i]);
    }

    if (t >= 2) {
        const int first_edge = marks[t - 2] + 1;
        const int last_edge = marks[t - 1];
        out.fill_mode = select_last_segment_fill(params, last_edge - first_edge + 1);
        bool from_back = out.fill_mode != LastSegmentFill::even_slack_odd_count &&
                         out.fill_mode != LastSegmentFill::odd_slack_odd_count &&
                         out.fill_mode != LastSegmentFill::low_slack_even_count;
        fill_segment(out.labels, pool, first_edge, last_edge, from_back != !!flips[t - 1]);
    }

    if (!pool.empty()) contract_failure(params, "labels left over");
    return out;
}

// Conditions on the finished schedule, checked in normalized coordinates:
// positive sums on the marks, magnitudes within [1, m] off the marks, and
// no off-mark sum repeated.
bool schedule_conditions_hold(const SpineLabelParams& params, const std::vector<int>& labels) {
    const int m = params.edge_count;
    const int sink = params.marked.back();
    std::vector<char> marked(m + 1, 0);
    for (int h : params.marked) marked[h] = 1;

    std::vector<char> seen(2 * m + 1, 0);
    for (int v = 0; v <= m; ++v) {
        int in = 0, out = 0;
        if (v > 0) (v <= sink ? in : out) += labels[v];
        if (v < m) (v + 1 <= sink ? out : in) += labels[v + 1];
        int sum = in - out;
        if (marked[v]) {
            if (sum < 1) return false;
            continue;
        }
        if (sum == 0 || sum > m || sum < -m) return false;
        if (seen[sum + m]) return false;
        seen[sum + m] = 1;
    }
    return true;
}

}  // namespace

SpineLabeling label_spine(int edge_count, const std::vector<int>& marked_positions) {
    SpineLabelParams params = make_spine_params(edge_count, marked_positions);
    const int m = params.edge_count;
    const int t = static_cast<int>(params.marked.size());

    // Primary schedule first; if its sums collide (a handful of boundary
    // instances), retry with middle-segment fills flipped, single segments
    // first, then pairs. Flips are local, so the first passing combination
    // is taken.
    std::vector<char> flips(t, 0);
    ScheduleResult schedule = build_schedule(params, flips);
    std::vector<int> flipped_segments;
    if (!schedule_conditions_hold(params, schedule.labels)) {
        bool repaired = false;
        for (int i = 1; i <= t - 1 && !repaired; ++i) {
            std::fill(flips.begin(), flips.end(), 0);
            flips[i] = 1;
            schedule = build_schedule(params, flips);
            if (schedule_conditions_hold(params, schedule.labels)) {
                repaired = true;
                flipped_segments = {i};
            }
        }
        for (int i = 1; i <= t - 1 && !repaired; ++i) {
            for (int j = i + 1; j <= t - 1 && !repaired; ++j) {
                std::fill(flips.begin(), flips.end(), 0);
                flips[i] = 1;
                flips[j] = 1;
                schedule = build_schedule(params, flips);
                if (schedule_conditions_hold(params, schedule.labels)) {
                    repaired = true;
                    flipped_segments = {i, j};
                }
            }
        }
        if (!repaired) contract_failure(params, "no collision-free fill found");
    }
    const std::vector<int>& labels = schedule.labels;

    // Predicted front sums, checked in vertex order. All front arcs point
    // forward, so s(v_0) = -L_1 and s(v_k) = L_k - L_{k+1}.
    std::vector<int> predicted = predicted_front_sums(params);
    if (static_cast<int>(predicted.size()) != params.front_len()) {
        contract_failure(params, "predicted sum count");
    }
    for (int k = 0; k < params.front_len(); ++k) {
        int actual = (k == 0) ? -labels[1] : labels[k] - labels[k + 1];
        if (actual != predicted[k]) contract_failure(params, "front sums");
    }

    const int sink = params.marked.back();
    SpineLabeling result;
    result.params = params;
    result.last_segment_fill = schedule.fill_mode;
    result.flipped_segments = std::move(flipped_segments);
    result.labeling.vertex_count = m + 1;
    result.labeling.arcs.resize(m);
    for (int k = 1; k <= m; ++k) {
        Arc arc;
        arc.label = labels[k];
        if (k <= sink) {
            arc.tail = k - 1;
            arc.head = k;
        } else {
            arc.tail = k;
            arc.head = k - 1;
        }
        if (params.reversed) {
            arc.tail = m - arc.tail;
            arc.head = m - arc.head;
            result.labeling.arcs[m - k] = arc;
        } else {
            result.labeling.arcs[k - 1] = arc;
        }
    }

    if (!is_bijective_labeling(result.labeling)) contract_failure(params, "bijection");
    return result;
}

}  // namespace antimagic
