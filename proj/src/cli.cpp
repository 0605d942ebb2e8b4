#include "altfree/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "altfree/analysis.hpp"
#include "altfree/constructions.hpp"
#include "altfree/corpus.hpp"
#include "altfree/io.hpp"
#include "altfree/search.hpp"
#include "altfree/witness.hpp"

namespace altfree {

namespace {

using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

OrderedHypergraph load_hypergraph(const std::string& path) {
    try {
        return parse_hypergraph(read_file(path));
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ":" + e.what());
    }
}

BinaryMatrix load_matrix(const std::string& path) {
    try {
        return parse_matrix(read_file(path));
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ":" + e.what());
    }
}

std::string join1(const std::vector<int>& v) {  // 1-based, space separated
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i] + 1);
    }
    return s;
}

std::string join_raw(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

void require_verified(bool ok) {
    if (!ok) throw InternalError("internal error: emitted witness failed self-verification");
}

struct Emitter {
    bool json_mode = false;
    std::ostringstream text;
    json j;

    std::string render() {
        if (json_mode) return j.dump() + "\n";
        return text.str();
    }
};

json edges_json(const std::vector<std::vector<int>>& edges) {
    json arr = json::array();
    for (const auto& e : edges) {
        json one = json::array();
        for (int v : e) one.push_back(v + 1);
        arr.push_back(std::move(one));
    }
    return arr;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"alternation-free hypergraphs: freeness checks, pattern search, "
                 "colorings, hitting sets, constructions"};
    app.name("altfree");
    app.require_subcommand(1);
    app.fallthrough();

    SearchBudget budget;
    bool json_mode = false;
    app.add_option("--budget-nodes", budget.node_limit, "search node limit");
    app.add_option("--budget-seconds", budget.time_limit_s, "search time limit in seconds");
    app.add_option("--jobs", budget.parallel_width, "parallel width hint (results are identical)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", json_mode, "emit a JSON document instead of text");

    // check
    auto* check = app.add_subcommand("check", "freeness of a hypergraph file");
    int check_t = 0;
    bool check_ordered = false, check_search = false;
    std::string check_file;
    check->add_option("--t", check_t, "alternation bound")->required();
    auto* opt_ordered = check->add_flag("--ordered", check_ordered, "check the given vertex order (default)");
    check->add_flag("--search-order", check_search, "search all vertex orders")->excludes(opt_ordered);
    check->add_option("file", check_file, "hypergraph file (.hg)")->required();

    // check-dual
    auto* check_dual = app.add_subcommand("check-dual", "dual freeness via row/column orderings");
    int dual_t = 0;
    std::string dual_file;
    check_dual->add_option("--t", dual_t, "alternation bound")->required();
    check_dual->add_option("file", dual_file, "hypergraph file (.hg)")->required();

    // pattern
    auto* pattern = app.add_subcommand("pattern", "induced 0/1 pattern search in a matrix file");
    std::string pattern_name, pattern_file, pattern_target;
    auto* opt_name = pattern->add_option("--name", pattern_name, "named pattern, e.g. X3, X3p, X3T, X3pT");
    pattern->add_option("--pattern", pattern_file, "pattern matrix file (.mat)")->excludes(opt_name);
    pattern->add_option("file", pattern_target, "matrix file (.mat)")->required();

    // sortcols
    auto* sortcols = app.add_subcommand("sortcols", "stable lexicographic column sort of a matrix");
    std::string sort_file;
    sortcols->add_option("file", sort_file, "matrix file (.mat)")->required();

    // color
    auto* color = app.add_subcommand("color", "proper coloring with a size threshold");
    int color_c = 0, color_m = 1;
    std::string color_file;
    color->add_option("--colors", color_c, "number of colors")->required();
    color->add_option("--min-size", color_m, "only edges of at least this size are constrained");
    color->add_option("file", color_file, "hypergraph file (.hg)")->required();

    // hit
    auto* hit = app.add_subcommand("hit", "c-shallow hitting set");
    int hit_c = 0;
    std::string hit_file;
    hit->add_option("--depth", hit_c, "maximum hits per edge")->required();
    hit->add_option("file", hit_file, "hypergraph file (.hg)")->required();

    // unsplit
    auto* unsplit = app.add_subcommand("unsplit", "unsplittable k-subset of a hyperedge");
    int un_t = 0, un_edge = 0, un_k = 0;
    std::string un_file;
    unsplit->add_option("--t", un_t, "alternation bound")->required();
    unsplit->add_option("--edge", un_edge, "1-based edge index")->required();
    unsplit->add_option("--size", un_k, "subset size k")->required();
    unsplit->add_option("file", un_file, "hypergraph file (.hg)")->required();

    // build
    auto* build = app.add_subcommand("build", "generate a construction");
    std::string build_kind, build_out;
    int build_x = 0, build_y = 0;
    build->add_option("kind", build_kind, "tree | prefix | dual-extremal")->required();
    build->add_option("x", build_x, "first parameter")->required();
    build->add_option("y", build_y, "second parameter")->required();
    build->add_option("--out", build_out, "directory to write files into (default: print)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive extremal counts");
    std::string oracle_what;
    int on = 0, ok_ = 0, ot = 0;
    oracle->add_option("what", oracle_what, "max-uniform")->required();
    oracle->add_option("n", on, "vertex count")->required();
    oracle->add_option("k", ok_, "edge size")->required();
    oracle->add_option("t", ot, "alternation bound")->required();

    // vc
    auto* vc = app.add_subcommand("vc", "VC dimension by exhaustive shattering");
    int vc_cap = -1;
    std::string vc_file;
    vc->add_option("--cap", vc_cap, "largest subset size to try (default: all vertices)")
        ->check(CLI::NonNegativeNumber);
    vc->add_option("file", vc_file, "hypergraph file (.hg)")->required();

    // homog
    auto* homog = app.add_subcommand("homog", "largest all-0 or all-1 square block");
    int homog_limit = 16;
    std::string homog_file;
    homog->add_option("--exact-limit", homog_limit, "exact search limit on the smaller dimension");
    homog->add_option("file", homog_file, "matrix file (.mat)")->required();

    // corpus
    auto* corpus = app.add_subcommand("corpus", "embedded reference matrices");
    std::string corpus_action, corpus_dir;
    corpus->add_option("action", corpus_action, "list | verify | export")->required();
    corpus->add_option("dir", corpus_dir, "output directory for export");

    CommandResult result;
    Emitter out;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        out.json_mode = json_mode;

        if (*check) {
            const OrderedHypergraph h = load_hypergraph(check_file);
            if (check_t < 1) throw std::invalid_argument("--t must be at least 1");
            if (!check_search) {
                const FreenessReport rep = is_free_ordered(h, check_t);
                out.j = {{"command", "check"}, {"mode", "ordered"}, {"t", check_t}, {"free", rep.is_free}};
                if (rep.is_free) {
                    out.text << "ordered-free t=" << check_t << ": yes\n";
                    result.exit_code = kExitHolds;
                } else {
                    require_verified(verify_witness(
                        h, AlternationClaim{rep.edge_a, rep.edge_b, check_t}, Witness{*rep.witness}));
                    out.text << "ordered-free t=" << check_t << ": no\n"
                             << "edges: " << rep.edge_a + 1 << " " << rep.edge_b + 1 << "\n"
                             << "vertices: " << join1(rep.witness->vertices) << "\n";
                    out.j["edges"] = {rep.edge_a + 1, rep.edge_b + 1};
                    out.j["witness"] = witness_to_json(Witness{*rep.witness});
                    result.exit_code = kExitFails;
                }
            } else {
                const auto r = find_free_ordering(h, check_t, budget);
                out.j = {{"command", "check"}, {"mode", "search-order"}, {"t", check_t}};
                if (r.found()) {
                    require_verified(
                        verify_witness(h, FreeOrderClaim{check_t}, Witness{OrderingWitness{*r.value, {}}}));
                    out.text << "free t=" << check_t << ": yes\n"
                             << "order: " << join1(*r.value) << "\n";
                    out.j["status"] = "found";
                    out.j["witness"] = witness_to_json(Witness{OrderingWitness{*r.value, {}}});
                    result.exit_code = kExitHolds;
                } else if (r.none()) {
                    out.text << "free t=" << check_t << ": no (search exhaustive)\n";
                    out.j["status"] = "none";
                    result.exit_code = kExitFails;
                } else {
                    out.text << "budget exhausted after " << r.nodes << " nodes\n";
                    out.j["status"] = "budget-exhausted";
                    result.exit_code = kExitBudget;
                }
            }
        } else if (*check_dual) {
            const OrderedHypergraph h = load_hypergraph(dual_file);
            if (dual_t < 2) throw std::invalid_argument("--t must be at least 2");
            const auto r = is_dual_free(h, dual_t, budget);
            out.j = {{"command", "check-dual"}, {"t", dual_t}};
            if (r.found()) {
                Witness w{OrderingWitness{r.value->row_order, r.value->col_order}};
                require_verified(verify_witness(h, DualFreeClaim{dual_t}, w));
                out.text << "dual-free t=" << dual_t << ": yes\n"
                         << "row-order: " << join1(r.value->row_order) << "\n"
                         << "col-order: " << join1(r.value->col_order) << "\n";
                out.j["status"] = "found";
                out.j["witness"] = witness_to_json(w);
                result.exit_code = kExitHolds;
            } else if (r.none()) {
                out.text << "dual-free t=" << dual_t << ": no (search exhaustive)\n";
                out.j["status"] = "none";
                result.exit_code = kExitFails;
            } else {
                out.text << "budget exhausted after " << r.nodes << " nodes\n";
                out.j["status"] = "budget-exhausted";
                result.exit_code = kExitBudget;
            }
        } else if (*pattern) {
            const BinaryMatrix m = load_matrix(pattern_target);
            Pattern p;
            if (!pattern_name.empty()) {
                auto named = Pattern::by_name(pattern_name);
                if (!named) throw std::invalid_argument("unknown pattern name: " + pattern_name);
                p = *named;
            } else if (!pattern_file.empty()) {
                p = Pattern{load_matrix(pattern_file), pattern_file};
            } else {
                throw std::invalid_argument("pattern: need --name or --pattern");
            }
            const auto w = contains_pattern(m, p);
            out.j = {{"command", "pattern"}, {"pattern", p.name}};
            if (w) {
                require_verified(verify_witness(m, PatternClaim{p}, Witness{*w}));
                out.text << "pattern " << p.name << ": found\n"
                         << "rows: " << join1(w->rows) << "\n"
                         << "cols: " << join1(w->cols) << "\n";
                out.j["status"] = "found";
                out.j["witness"] = witness_to_json(Witness{*w});
                result.exit_code = kExitHolds;
            } else {
                out.text << "pattern " << p.name << ": not contained\n";
                out.j["status"] = "none";
                result.exit_code = kExitFails;
            }
        } else if (*sortcols) {
            const BinaryMatrix m = load_matrix(sort_file);
            const LexSortResult sorted = lex_sort_columns(m);
            require_verified(sorted.matrix == m.permuted_cols(sorted.perm));
            for (const auto& row : sorted.matrix.to_strings()) out.text << row << "\n";
            out.text << "perm: " << join1(sorted.perm) << "\n";
            json perm1 = json::array();
            for (int c : sorted.perm) perm1.push_back(c + 1);
            out.j = {{"command", "sortcols"},
                     {"matrix", sorted.matrix.to_strings()},
                     {"perm", std::move(perm1)}};
            result.exit_code = kExitHolds;
        } else if (*color) {
            const OrderedHypergraph h = load_hypergraph(color_file);
            const auto r = proper_coloring(h, color_c, color_m, budget);
            out.j = {{"command", "color"}, {"colors", color_c}, {"min_size", color_m}};
            if (r.found()) {
                Witness w{ColoringWitness{*r.value}};
                require_verified(verify_witness(h, ColoringClaim{color_c, color_m}, w));
                out.text << "coloring c=" << color_c << " m=" << color_m << ": found\n"
                         << "colors: " << join_raw(*r.value) << "\n";
                out.j["status"] = "found";
                out.j["witness"] = witness_to_json(w);
                result.exit_code = kExitHolds;
            } else if (r.none()) {
                out.text << "coloring c=" << color_c << " m=" << color_m << ": none (search exhaustive)\n";
                out.j["status"] = "none";
                result.exit_code = kExitFails;
            } else {
                out.text << "budget exhausted after " << r.nodes << " nodes\n";
                out.j["status"] = "budget-exhausted";
                result.exit_code = kExitBudget;
            }
        } else if (*hit) {
            const OrderedHypergraph h = load_hypergraph(hit_file);
            const auto r = shallow_hitting_set(h, hit_c, budget);
            out.j = {{"command", "hit"}, {"depth", hit_c}};
            if (r.found()) {
                Witness w{HittingSetWitness{*r.value}};
                require_verified(verify_witness(h, HittingClaim{hit_c}, w));
                out.text << "hitting-set depth=" << hit_c << ": found\n"
                         << "vertices: " << join1(*r.value) << "\n";
                out.j["status"] = "found";
                out.j["witness"] = witness_to_json(w);
                result.exit_code = kExitHolds;
            } else if (r.none()) {
                out.text << "hitting-set depth=" << hit_c << ": none (search exhaustive)\n";
                out.j["status"] = "none";
                result.exit_code = kExitFails;
            } else {
                out.text << "budget exhausted after " << r.nodes << " nodes\n";
                out.j["status"] = "budget-exhausted";
                result.exit_code = kExitBudget;
            }
        } else if (*unsplit) {
            const OrderedHypergraph h = load_hypergraph(un_file);
            const auto s = unsplittable_subset(h, un_t, un_edge - 1, un_k);
            out.j = {{"command", "unsplit"}, {"t", un_t}, {"edge", un_edge}, {"size", un_k}};
            if (s) {
                // Re-run the defining check on the returned subset.
                OrderedHypergraph extended = h;
                extended.edges.push_back(*s);
                extended = make_hypergraph(extended.n_vertices, std::move(extended.edges));
                const int added = static_cast<int>(extended.edges.size()) - 1;
                bool ok = true;
                for (int f = 0; f < added; ++f)
                    if (alternation_length(extended, added, f) >= un_t ||
                        alternation_length(extended, f, added) >= un_t)
                        ok = false;
                require_verified(ok);
                out.text << "unsplittable k=" << un_k << " t=" << un_t << " edge=" << un_edge
                         << ": found\n"
                         << "vertices: " << join1(*s) << "\n";
                out.j["status"] = "found";
                out.j["vertices"] = json::array();
                for (int v : *s) out.j["vertices"].push_back(v + 1);
                result.exit_code = kExitHolds;
            } else {
                out.text << "unsplittable k=" << un_k << " t=" << un_t << " edge=" << un_edge
                         << ": none (every " << un_k << "-subset is splittable)\n";
                out.j["status"] = "none";
                result.exit_code = kExitFails;
            }
        } else if (*build) {
            OrderedHypergraph h;
            std::string stem;
            out.j = {{"command", "build"}, {"kind", build_kind}, {"x", build_x}, {"y", build_y}};
            if (build_kind == "tree") {
                h = build_tree(build_x, build_y);
                stem = "tree_" + std::to_string(build_x) + "_" + std::to_string(build_y);
            } else if (build_kind == "prefix") {
                h = build_prefix_union(build_x, build_y);
                stem = "prefix_" + std::to_string(build_x) + "_" + std::to_string(build_y);
            } else if (build_kind == "dual-extremal") {
                const DualExtremal d = build_dual_extremal(build_x, build_y);
                h = d.hypergraph;
                stem = "dual_extremal_" + std::to_string(build_x) + "_" + std::to_string(build_y);
                const CrossingReport rep = wiring_crossings(d.wiring);
                // keep stdout parseable: the wiring summary is commentary
                result.diagnostics = "wires: " + std::to_string(d.wiring.n_wires) + " (A: " +
                                     std::to_string(d.n_a) + ", B: " + std::to_string(d.n_b) +
                                     ")\nevents: " + std::to_string(d.wiring.events.size()) +
                                     "\ncrossings: total " + std::to_string(rep.total) +
                                     ", max pair " + std::to_string(rep.max_pair) + "\n";
                out.j["wires"] = d.wiring.n_wires;
                out.j["n_a"] = d.n_a;
                out.j["n_b"] = d.n_b;
                out.j["events"] = d.wiring.events.size();
                out.j["crossings_total"] = rep.total;
                out.j["crossings_max_pair"] = rep.max_pair;
            } else {
                throw std::invalid_argument("unknown construction: " + build_kind +
                                            " (expected tree, prefix, or dual-extremal)");
            }
            out.j["n"] = h.n_vertices;
            out.j["edges"] = edges_json(h.edges);
            if (build_out.empty()) {
                out.text << serialize_hypergraph(h);
            } else {
                std::filesystem::create_directories(build_out);
                const auto hg_path = std::filesystem::path(build_out) / (stem + ".hg");
                const auto mat_path = std::filesystem::path(build_out) / (stem + ".mat");
                std::ofstream(hg_path) << serialize_hypergraph(h);
                std::ofstream(mat_path) << serialize_matrix(incidence(h));
                out.text << "wrote " << hg_path.string() << "\n" << "wrote " << mat_path.string() << "\n";
                out.j["files"] = {hg_path.string(), mat_path.string()};
            }
            result.exit_code = kExitHolds;
        } else if (*oracle) {
            if (oracle_what != "max-uniform")
                throw std::invalid_argument("unknown oracle: " + oracle_what);
            const auto r = max_free_uniform_count(on, ok_, ot, budget);
            out.j = {{"command", "oracle"}, {"what", "max-uniform"}, {"n", on}, {"k", ok_}, {"t", ot}};
            if (r.found()) {
                const OrderedHypergraph fam{on, r.value->edges};
                require_verified(static_cast<int>(fam.edges.size()) == r.value->count &&
                                 is_free_ordered(fam, ot).is_free);
                out.text << r.value->count << "\n";
                out.j["count"] = r.value->count;
                out.j["edges"] = edges_json(r.value->edges);
                result.exit_code = kExitHolds;
            } else {
                out.text << "budget exhausted after " << r.nodes << " nodes\n";
                out.j["status"] = "budget-exhausted";
                result.exit_code = kExitBudget;
            }
        } else if (*vc) {
            const OrderedHypergraph h = load_hypergraph(vc_file);
            const int cap = vc_cap < 0 ? h.n_vertices : vc_cap;
            const int dim = vc_dimension(h, cap);
            out.text << dim << "\n";
            out.j = {{"command", "vc"}, {"cap", cap}, {"dimension", dim}};
            result.exit_code = kExitHolds;
        } else if (*homog) {
            const BinaryMatrix m = load_matrix(homog_file);
            const HomogeneousBlock block = max_homogeneous_square(m, homog_limit);
            bool ok = block.rows.size() == block.cols.size();
            for (int r : block.rows)
                for (int c : block.cols)
                    if (m.get(r, c) != (block.value == 1)) ok = false;
            require_verified(ok);
            out.text << "k=" << block.rows.size() << " value=" << block.value
                     << " exact=" << (block.exact ? "yes" : "no") << "\n";
            if (!block.rows.empty())
                out.text << "rows: " << join1(block.rows) << "\n"
                         << "cols: " << join1(block.cols) << "\n";
            out.j = {{"command", "homog"},
                     {"k", block.rows.size()},
                     {"value", block.value},
                     {"exact", block.exact}};
            out.j["rows"] = json::array();
            for (int r : block.rows) out.j["rows"].push_back(r + 1);
            out.j["cols"] = json::array();
            for (int c : block.cols) out.j["cols"].push_back(c + 1);
            result.exit_code = kExitHolds;
        } else if (*corpus) {
            const auto& entries = reference_corpus();
            if (corpus_action == "list") {
                out.j = {{"command", "corpus"}, {"action", "list"}, {"entries", json::array()}};
                for (const auto& e : entries) {
                    out.text << e.name << ": " << e.matrix.n_rows() << "x" << e.matrix.n_cols() << " ("
                             << (e.orientation == Orientation::rows_are_vertices ? "rows are vertices"
                                                                                 : "rows are edges")
                             << ", " << e.claims.size() << " claims)\n";
                    out.j["entries"].push_back({{"name", e.name},
                                                {"rows", e.matrix.n_rows()},
                                                {"cols", e.matrix.n_cols()},
                                                {"claims", e.claims.size()}});
                }
                result.exit_code = kExitHolds;
            } else if (corpus_action == "verify") {
                bool all_ok = true;
                out.j = {{"command", "corpus"}, {"action", "verify"}, {"entries", json::array()}};
                for (const auto& e : entries) {
                    const auto outcomes = verify_corpus_entry(e, budget);
                    std::size_t passed = 0;
                    json claims = json::array();
                    std::string first_fail;
                    for (const auto& oc : outcomes) {
                        passed += oc.ok ? 1 : 0;
                        if (!oc.ok && first_fail.empty()) first_fail = oc.description;
                        claims.push_back({{"description", oc.description}, {"ok", oc.ok}});
                    }
                    const bool entry_ok = passed == outcomes.size();
                    all_ok = all_ok && entry_ok;
                    out.text << (entry_ok ? "PASS " : "FAIL ") << e.name << " (" << passed << "/"
                             << outcomes.size() << " claims)";
                    if (!entry_ok) out.text << ": " << first_fail;
                    out.text << "\n";
                    out.j["entries"].push_back(
                        {{"name", e.name}, {"pass", entry_ok}, {"claims", std::move(claims)}});
                }
                out.j["pass"] = all_ok;
                result.exit_code = all_ok ? kExitHolds : kExitFails;
            } else if (corpus_action == "export") {
                if (corpus_dir.empty()) throw std::invalid_argument("corpus export needs a directory");
                std::filesystem::create_directories(corpus_dir);
                out.j = {{"command", "corpus"}, {"action", "export"}, {"files", json::array()}};
                for (const auto& e : entries) {
                    const auto path = std::filesystem::path(corpus_dir) / (e.name + ".mat");
                    std::ofstream(path) << serialize_matrix(e.matrix);
                    out.text << "wrote " << path.string() << "\n";
                    out.j["files"].push_back(path.string());
                }
                result.exit_code = kExitHolds;
            } else {
                throw std::invalid_argument("unknown corpus action: " + corpus_action +
                                            " (expected list, verify, or export)");
            }
        }
        result.output = out.render();
        return result;
    } catch (const CLI::CallForHelp&) {
        result.exit_code = kExitHolds;
        const auto parsed = app.get_subcommands();
        result.output = parsed.empty() ? app.help() : parsed.front()->help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = kExitError;
        result.diagnostics = std::string("error: ") + e.what() + "\n";
        return result;
    } catch (const std::exception& e) {
        result.exit_code = kExitError;
        result.diagnostics = std::string("error: ") + e.what() + "\n";
        return result;
    }
}

}  // namespace altfree
