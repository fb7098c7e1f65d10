// Command-line front end: classify trees, build antimagic orientations of
// lobsters, verify labelings, and drive the fuzzing / exhaustive suites.
//
// Exit codes: 0 success or antimagic, 1 verification failure, 2 input error,
// 3 unsupported tree family.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "antimagic/io.hpp"
#include "antimagic/lobster_labeling.hpp"
#include "antimagic/random_gen.hpp"
#include "antimagic/search.hpp"
#include "antimagic/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUnsupportedFamily = 3;

using namespace antimagic;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

uint64_t default_seed() {
    if (const char* env = std::getenv("ANTIMAGIC_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 1;
}

int run_classify(const std::string& path) {
    NamedTree input = parse_tree(read_file(path));
    TreeClass cls = classify(input.tree);
    std::cout << "class: " << to_string(cls) << "\n";
    std::cout << "vertices: " << input.tree.vertex_count()
              << "  edges: " << input.tree.edge_count() << "\n";
    if (cls == TreeClass::other) {
        std::cout << "no spine decomposition (not a lobster)\n";
        return kExitOk;
    }
    std::vector<Vertex> spine = find_spine(input.tree);
    SpineDecomposition d = decompose(input.tree, spine);
    std::cout << "spine:";
    for (Vertex u : d.spine) std::cout << " " << input.names[u];
    std::cout << "\nspine edges: " << d.spine_edge_count()
              << "  branch vertices: " << d.branch_count()
              << "  limbs: " << d.limbs.size()
              << " (leaves: " << d.leaf_limbs.size() << ")"
              << "  tips: " << d.tips.size() << "\n";
    return kExitOk;
}

int run_orient(const std::string& path, bool as_dot, bool check) {
    NamedTree input = parse_tree(read_file(path));
    LobsterConstruction built = orient_lobster(input.tree);
    AntimagicReport report = verify_antimagic(built.labeling);

    if (as_dot) {
        std::cout << emit_dot(built.labeling, input.names);
    } else {
        std::cout << emit_labeling(built.labeling, input.names, report);
    }

    if (check) {
        bool ok = report.antimagic();
        if (ok && built.decomposition) {
            ok = verify_band_structure(built.labeling, *built.decomposition, *built.plan).all_ok();
        }
        if (!ok) {
            std::cerr << "verification failed\n";
            return kExitVerificationFailure;
        }
    }
    return kExitOk;
}

int run_verify(const std::string& path) {
    ParsedLabeling doc = parse_labeling(read_file(path));
    AntimagicReport report = verify_antimagic(doc.labeling);
    std::cout << emit_labeling(doc.labeling, doc.names, report);
    return report.antimagic() ? kExitOk : kExitVerificationFailure;
}

int run_fuzz(int count, int max_spine, uint64_t seed) {
    LobsterProfile profile;
    int failures = 0;
    for (int i = 0; i < count; ++i) {
        uint64_t instance_seed = seed + static_cast<uint64_t>(i);
        int spine_edges = 2 + static_cast<int>(instance_seed * 2654435761u % (max_spine - 1));
        Tree t = random_lobster(spine_edges, profile, instance_seed);
        LobsterConstruction built = orient_lobster(t);
        bool ok = verify_antimagic(built.labeling).antimagic();
        if (ok && built.decomposition) {
            ok = verify_band_structure(built.labeling, *built.decomposition, *built.plan).all_ok();
        }
        if (!ok) {
            ++failures;
            std::cerr << "fuzz failure at seed " << instance_seed << " (spine " << spine_edges
                      << " edges)\n";
        }
    }
    std::cout << count << " instances, " << failures << " failures\n";
    return failures == 0 ? kExitOk : kExitVerificationFailure;
}

int run_enumerate(int max_n, bool with_oracle) {
    int failures = 0;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Tree> lobsters = enumerate_lobsters(n);
        int checked = 0;
        for (const Tree& t : lobsters) {
            LobsterConstruction built = orient_lobster(t);
            bool ok = verify_antimagic(built.labeling).antimagic();
            if (ok && built.decomposition) {
                ok = verify_band_structure(built.labeling, *built.decomposition, *built.plan)
                         .all_ok();
            }
            if (with_oracle && ok) {
                SearchResult oracle = find_antimagic_orientation(t);
                ok = oracle.outcome == SearchOutcome::witness_found;
            }
            if (!ok) ++failures;
            ++checked;
        }
        std::cout << "n=" << n << ": " << checked << " lobsters checked\n";
    }
    std::cout << (failures == 0 ? "all constructions verified\n"
                                : std::to_string(failures) + " failures\n");
    return failures == 0 ? kExitOk : kExitVerificationFailure;
}

int run_demo(const std::string& which) {
    if (which != "figure1") {
        std::cerr << "unknown demo '" << which << "' (available: figure1)\n";
        return kExitInputError;
    }
    // The four bundled reference labelings: paths with 13 edges and the four
    // marked-position sets that exercise both tail parities at low slack.
    const std::vector<std::vector<int>> marks = {
        {3, 4, 7, 9, 10, 11},
        {4, 5, 7, 8, 11},
        {3, 5, 6, 7, 10},
        {4, 5, 6, 7, 10},
    };
    for (const auto& marked : marks) {
        SpineLabeling spine = label_spine(13, marked);
        std::cout << "# marked positions:";
        for (int h : marked) std::cout << " " << h;
        std::cout << "  [" << to_string(spine.params.front_case) << "]\n";
        std::cout << emit_arc_lines(spine.labeling);
        MarkedPathReport report = verify_marked_path(spine.labeling, marked);
        std::cout << "conditions: marked-positive=" << (report.marked_positive_ok ? "ok" : "FAIL")
                  << " range=" << (report.unmarked_range_ok ? "ok" : "FAIL")
                  << " distinct=" << (report.unmarked_distinct_ok ? "ok" : "FAIL") << "\n\n";
        if (!report.all_ok()) return kExitVerificationFailure;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"antimagic orientations of lobsters"};
    app.require_subcommand(1);

    std::string tree_path;
    bool as_dot = false, as_json = false, check = false;
    auto* classify_cmd = app.add_subcommand("classify", "classify a tree and show its decomposition");
    classify_cmd->add_option("file", tree_path)->required();

    auto* orient_cmd = app.add_subcommand("orient", "construct an antimagic orientation");
    orient_cmd->add_option("file", tree_path)->required();
    orient_cmd->add_flag("--json", as_json, "emit the labeling document (default)");
    orient_cmd->add_flag("--dot", as_dot, "emit DOT instead of JSON");
    orient_cmd->add_flag("--verify", check, "run the verifiers and fail on any violation");

    std::string labeling_path;
    auto* verify_cmd = app.add_subcommand("verify", "verify a labeling document");
    verify_cmd->add_option("file", labeling_path)->required();

    int fuzz_count = 100, fuzz_spine = 20;
    uint64_t seed = default_seed();
    auto* fuzz_cmd = app.add_subcommand("fuzz", "generate, construct and verify random lobsters");
    fuzz_cmd->add_option("--count", fuzz_count, "number of instances");
    fuzz_cmd->add_option("--spine", fuzz_spine, "maximum spine edge count")->check(CLI::Range(2, 100000));
    fuzz_cmd->add_option("--seed", seed, "base seed (default from ANTIMAGIC_SEED)");

    int max_n = 8;
    bool with_oracle = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive suite over all lobsters up to a size");
    enum_cmd->add_option("--max-n", max_n, "largest vertex count")->check(CLI::Range(1, 10));
    enum_cmd->add_flag("--oracle", with_oracle, "cross-check against brute-force search");

    std::string demo_name;
    auto* demo_cmd = app.add_subcommand("demo", "emit bundled reference labelings");
    demo_cmd->add_option("name", demo_name)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return run_classify(tree_path);
        if (orient_cmd->parsed()) return run_orient(tree_path, as_dot, check);
        if (verify_cmd->parsed()) return run_verify(labeling_path);
        if (fuzz_cmd->parsed()) return run_fuzz(fuzz_count, fuzz_spine, seed);
        if (enum_cmd->parsed()) return run_enumerate(max_n, with_oracle);
        if (demo_cmd->parsed()) return run_demo(demo_name);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const unsupported_family_error& e) {
        std::cerr << "unsupported family: " << e.what() << "\n";
        return kExitUnsupportedFamily;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
