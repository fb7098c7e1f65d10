#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/lobster_labeling.hpp"
#include "antimagic/verify.hpp"

namespace antimagic {

/// Input problems: malformed syntax (with a line number when available) or
/// an edge list that is not a tree.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A tree together with the external names of its vertices; indices follow
/// first appearance in the input.
struct NamedTree {
    Tree tree;
    std::vector<std::string> names;
};

/// Reads either a plain edge list ("u v" per line, '#' comments) or a JSON
/// document {"vertices": [...], "edges": [[a, b], ...]}. Vertex names are
/// arbitrary whitespace-free strings. Throws parse_error with a line number
/// on syntax problems and names the offending vertex on cycles or
/// disconnected input.
NamedTree parse_tree(const std::string& text);

/// Serialized labeling: arcs, vertex sums and verifier verdicts, with a
/// stable key order so outputs diff cleanly.
std::string emit_labeling(const OrientedLabeling& d, const std::vector<std::string>& names,
                          const AntimagicReport& report);

/// Reads an emitted labeling document back (arcs and names; sums and
/// verdicts are derived data and get recomputed downstream).
struct ParsedLabeling {
    OrientedLabeling labeling;
    std::vector<std::string> names;
};
ParsedLabeling parse_labeling(const std::string& text);

/// DOT digraph with arc labels and per-vertex sum annotations.
std::string emit_dot(const OrientedLabeling& d, const std::vector<std::string>& names);

/// Compact fixed-width text form ("arc <tail> <head> <label>" lines) used
/// for golden comparisons; indices, not names.
std::string emit_arc_lines(const OrientedLabeling& d);

/// Default names "0", "1", ... for labelings built outside parse_tree.
std::vector<std::string> index_names(int vertex_count);

}  // namespace antimagic
