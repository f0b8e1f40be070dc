// Batch command line for the workbench: sequence tables, graph
// enumeration and checking, coloring generation, thin-set solving,
// witness extraction and the one-shot verification suites.
//
// Exit codes: 0 success / witness found, 1 usage, 2 bad input (including
// size guards), 3 no witness exists, 4 budget exceeded, 5 the finite
// data cannot support the requested conclusion. Failure paths print a
// single {"error": ...} object to stdout.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "thinset/coloring.hpp"
#include "thinset/errors.hpp"
#include "thinset/extract.hpp"
#include "thinset/io.hpp"
#include "thinset/largeness_graph.hpp"
#include "thinset/search.hpp"
#include "thinset/sequences.hpp"
#include "thinset/tournament.hpp"
#include "thinset/verify.hpp"
#include "thinset/witness.hpp"

using nlohmann::json;
using namespace thinset;

namespace {

struct Sink {
    std::string path; // empty or "-" writes to stdout
    std::ofstream file;

    std::ostream& stream() {
        if (path.empty() || path == "-") return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw InputError("cannot open output file '" + path + "'");
        }
        return file;
    }
};

json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        try {
            return json::parse(std::cin);
        } catch (const json::parse_error& e) {
            throw InputError(std::string("stdin is not valid JSON: ") + e.what());
        }
    }
    return json_from_file(path);
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("'" + item + "' in the domain list is not an integer");
        }
    }
    return out;
}

std::vector<int> make_domain(int points, const std::string& list) {
    if (!list.empty()) return parse_int_list(list);
    if (points <= 0) throw InputError("a domain is required: give -D or --domain");
    std::vector<int> d(points);
    for (int i = 0; i < points; ++i) d[i] = i;
    return d;
}

ApproxTable load_table(const std::string& path, bool normalize) {
    StagedTable raw = staged_from_json(read_json_input(path));
    return normalize ? normalize_approximations(raw) : ApproxTable::checked(std::move(raw));
}

json sequence_to_json(const SequenceTable& t) {
    json values = json::array();
    for (const auto& v : t.values) values.push_back(v.str());
    const char* kind = t.kind == SequenceKind::catalan   ? "catalan"
                       : t.kind == SequenceKind::schroder ? "schroder"
                                                          : "ell";
    return json{{"kind", kind}, {"first_index", t.first_index}, {"values", values}};
}

void print_sequence(Sink& out, const SequenceTable& t, const std::string& format) {
    std::ostream& os = out.stream();
    if (format == "json") {
        os << sequence_to_json(t).dump(2) << "\n";
    } else if (format == "csv") {
        write_sequence_csv(os, t);
    } else {
        for (size_t i = 0; i < t.values.size(); ++i) os << (i ? "," : "") << t.values[i];
        os << "\n";
    }
}

LargenessGraph load_valid_graph(const std::string& path) {
    LargenessGraph g = graph_from_json(read_json_input(path));
    auto report = validate_graph(g);
    if (!report.ok()) {
        json violations = json::array();
        for (const auto& v : report.violations) violations.push_back(v.describe());
        json err{{"error",
                  {{"type", "input"},
                   {"message", "graph fails the structural axioms"},
                   {"violations", violations}}}};
        std::cout << err.dump(2) << std::endl;
        std::exit(2);
    }
    return g;
}

void print_graphs(Sink& out, const std::vector<LargenessGraph>& graphs, const std::string& format) {
    std::ostream& os = out.stream();
    if (format == "dot") {
        for (const auto& g : graphs) os << graph_to_dot(g) << "\n";
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& g : graphs) arr.push_back(graph_to_json(g));
        os << arr.dump(2) << "\n";
    } else if (format == "table") {
        for (const auto& g : graphs) {
            os << g.code().hex() << " ";
            auto edges = g.edges();
            if (edges.empty()) os << "(no edges)";
            for (const auto& [i, j] : edges) os << "{" << i << "," << j << "} ";
            os << "\n";
        }
    } else { // jsonl
        for (const auto& g : graphs) os << graph_to_json(g).dump() << "\n";
    }
}

SearchBudget make_budget(long long nodes, double seconds, int workers) {
    SearchBudget b;
    b.max_nodes = nodes;
    b.max_seconds = seconds;
    b.workers = workers;
    return b;
}

int run_verify(const std::string& suite, unsigned long long seed, const std::string& format,
               Sink& out) {
    VerifyReport report = run_suite(suite, seed);
    std::ostream& os = out.stream();
    if (format == "json") {
        json criteria = json::array();
        for (const auto& r : report.results)
            criteria.push_back(json{{"index", r.index},
                                    {"name", r.name},
                                    {"passed", r.passed},
                                    {"detail", r.detail},
                                    {"seconds", r.seconds}});
        json j{{"suite", suite}, {"seed", seed}, {"passed", report.all_passed()},
               {"criteria", criteria}};
        os << j.dump(2) << "\n";
    } else {
        for (const auto& r : report.results) {
            std::ostringstream line;
            line.setf(std::ios::fixed);
            line.precision(2);
            line << (r.passed ? "PASS" : "FAIL") << " criterion " << r.index << " (" << r.name
                 << "): " << r.detail << " [" << r.seconds << "s]";
            os << line.str() << "\n";
        }
        os << (report.all_passed() ? "all criteria passed" : "CRITERIA FAILED") << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite workbench for interval colorings, largeness graphs and thin sets"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file; flags take precedence");
    app.set_version_flag("--version", "thinset 0.1.0");

    std::function<int()> action;

    // ---- numbers ----
    auto* numbers = app.add_subcommand("numbers", "print a counting sequence prefix");
    numbers->require_subcommand(1);
    int seq_max = 7;
    std::string seq_format = "table";
    Sink seq_out;
    for (const char* kind : {"catalan", "schroder", "ell"}) {
        auto* sub = numbers->add_subcommand(kind, std::string("the ") + kind + " sequence");
        sub->add_option("--max", seq_max, "largest index to print")->capture_default_str();
        sub->add_option("--format", seq_format, "table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("-o,--output", seq_out.path, "output file (default stdout)");
        std::string kind_name = kind;
        sub->callback([&, kind_name] {
            action = [&, kind_name] {
                SequenceTable t = kind_name == "catalan"    ? catalan_sequence(seq_max)
                                  : kind_name == "schroder" ? schroder_sequence(seq_max)
                                                            : ell_sequence(std::max(seq_max, 1));
                print_sequence(seq_out, t, seq_format);
                return 0;
            };
        });
    }

    // ---- graphs ----
    auto* graphs = app.add_subcommand("graphs", "enumerate, check and transform largeness graphs");
    graphs->require_subcommand(1);
    int g_n = 4;
    std::string g_method = "recursive";
    std::string g_format;
    std::string g_in;
    Sink g_out;

    auto* g_enum = graphs->add_subcommand("enumerate", "all valid graphs of one size");
    g_enum->add_option("-n,--size", g_n, "graph size")->required();
    g_enum->add_option("--method", g_method, "filter or recursive")
        ->check(CLI::IsMember({"filter", "recursive"}));
    g_enum->add_option("--format", g_format, "jsonl (default), json, dot or table");
    g_enum->add_option("-o,--output", g_out.path, "output file (default stdout)");
    g_enum->callback([&] {
        action = [&] {
            EnumMethod m = g_method == "filter" ? EnumMethod::filter : EnumMethod::recursive;
            print_graphs(g_out, enumerate_graphs(g_n, m), g_format.empty() ? "jsonl" : g_format);
            return 0;
        };
    });

    auto* g_check = graphs->add_subcommand("check", "validate a graph against the axioms");
    g_check->add_option("-i,--input", g_in, "graph JSON file (default stdin)");
    g_check->callback([&] {
        action = [&] {
            LargenessGraph g = graph_from_json(read_json_input(g_in));
            auto report = validate_graph(g);
            if (!report.ok()) {
                json violations = json::array();
                for (const auto& v : report.violations) violations.push_back(v.describe());
                json err{{"error",
                          {{"type", "input"},
                           {"message", report.violations.front().describe()},
                           {"violations", violations}}}};
                std::cout << err.dump(2) << std::endl;
                return 2;
            }
            json verdict{{"valid", true},
                         {"n", g.size()},
                         {"packed", is_packed(g)},
                         {"normal", is_normal(g)},
                         {"adjacent_free", is_adjacent_free(g)}};
            std::cout << verdict.dump(2) << std::endl;
            return 0;
        };
    });

    for (const char* which : {"pack", "normalize"}) {
        auto* sub = graphs->add_subcommand(
            which, std::string(which) + " a valid graph within its equivalence class");
        sub->add_option("-i,--input", g_in, "graph JSON file (default stdin)");
        sub->add_option("--format", g_format, "json (default) or dot");
        sub->add_option("-o,--output", g_out.path, "output file (default stdout)");
        bool packing = std::string(which) == "pack";
        sub->callback([&, packing] {
            action = [&, packing] {
                LargenessGraph g = load_valid_graph(g_in);
                LargenessGraph result = packing ? pack(g) : normalize(g);
                std::ostream& os = g_out.stream();
                if (g_format == "dot")
                    os << graph_to_dot(result);
                else
                    os << graph_to_json(result).dump(2) << "\n";
                return 0;
            };
        });
    }

    auto* g_classes = graphs->add_subcommand("classes", "equivalence classes with representatives");
    g_classes->add_option("-n,--size", g_n, "graph size")->required();
    g_classes->add_option("--format", g_format, "json (default) or table");
    g_classes->add_option("-o,--output", g_out.path, "output file (default stdout)");
    g_classes->callback([&] {
        action = [&] {
            auto classes = graph_classes(g_n);
            std::ostream& os = g_out.stream();
            if (g_format == "table") {
                for (size_t i = 0; i < classes.size(); ++i)
                    os << "class " << i << ": " << classes[i].members.size()
                       << " members, packed " << classes[i].packed_rep.code().hex() << ", normal "
                       << classes[i].normal_rep.code().hex() << "\n";
            } else {
                json arr = json::array();
                for (const auto& cls : classes) {
                    json members = json::array();
                    for (const auto& g : cls.members) members.push_back(graph_to_json(g));
                    arr.push_back(json{{"packed", graph_to_json(cls.packed_rep)},
                                       {"normal", graph_to_json(cls.normal_rep)},
                                       {"members", members}});
                }
                os << arr.dump(2) << "\n";
            }
            return 0;
        };
    });

    // ---- color ----
    auto* color = app.add_subcommand("color", "evaluate a coloring over a finite domain");
    color->require_subcommand(1);
    std::string c_table;
    bool c_normalize = false;
    int c_arity = 2;
    int c_points = 0;
    std::string c_domain_list;
    std::string c_parts = "gap,largeness";
    int c_extra = 1;
    Sink c_out;
    auto add_color_common = [&](CLI::App* sub, bool with_arity) {
        sub->add_option("-g,--table", c_table, "approximation table JSON")->required();
        sub->add_flag("--normalize", c_normalize,
                      "run the normalization recipe instead of requiring the invariants");
        if (with_arity) sub->add_option("-n,--arity", c_arity, "tuple arity")->capture_default_str();
        sub->add_option("-D,--points", c_points, "domain 0..D-1");
        sub->add_option("--domain", c_domain_list, "explicit comma-separated domain")
            ->excludes(sub->get_option("-D"));
        sub->add_option("-o,--output", c_out.path, "output file (default stdout)");
    };

    auto* c_gap = color->add_subcommand("gap", "vector of interval classifications");
    add_color_common(c_gap, true);
    c_gap->callback([&] {
        action = [&] {
            ApproxTable t = load_table(c_table, c_normalize);
            write_coloring_jsonl(c_out.stream(),
                                 gap_coloring(c_arity, t, make_domain(c_points, c_domain_list)));
            return 0;
        };
    });

    auto* c_large = color->add_subcommand("largeness", "largeness graph of each tuple");
    add_color_common(c_large, true);
    c_large->callback([&] {
        action = [&] {
            ApproxTable t = load_table(c_table, c_normalize);
            write_coloring_jsonl(
                c_out.stream(), largeness_coloring(c_arity, t, make_domain(c_points, c_domain_list)));
            return 0;
        };
    });

    auto* c_gap3 = color->add_subcommand("gap3", "the five-color interval triple coloring");
    add_color_common(c_gap3, false);
    c_gap3->callback([&] {
        action = [&] {
            ApproxTable t = load_table(c_table, c_normalize);
            write_coloring_jsonl(c_out.stream(),
                                 gap3_coloring(t, make_domain(c_points, c_domain_list)));
            return 0;
        };
    });

    auto* c_tour = color->add_subcommand("tournament", "pair orientation by interval size");
    add_color_common(c_tour, false);
    c_tour->callback([&] {
        action = [&] {
            ApproxTable t = load_table(c_table, c_normalize);
            auto domain = make_domain(c_points, c_domain_list);
            auto tour = std::make_shared<Tournament>(tournament_from_g(t, domain));
            auto dom = std::make_shared<std::vector<int>>(domain);
            // color 0: the arc points upward, i.e. the interval is g-small
            Coloring f("tournament", 2, domain, std::make_shared<IntPalette>(2),
                       [tour, dom](std::span<const int> tu) {
                           auto ix = std::lower_bound(dom->begin(), dom->end(), tu[0]);
                           auto iy = std::lower_bound(dom->begin(), dom->end(), tu[1]);
                           return tour->arc(static_cast<int>(ix - dom->begin()),
                                            static_cast<int>(iy - dom->begin()))
                                      ? 0
                                      : 1;
                       });
            write_coloring_jsonl(c_out.stream(), f);
            return 0;
        };
    });

    auto* c_prod = color->add_subcommand("product", "componentwise product of base colorings");
    add_color_common(c_prod, true);
    c_prod->add_option("--parts", c_parts, "comma list drawn from gap, largeness, gap3")
        ->capture_default_str();
    c_prod->callback([&] {
        action = [&] {
            ApproxTable t = load_table(c_table, c_normalize);
            auto domain = make_domain(c_points, c_domain_list);
            std::vector<Coloring> parts;
            std::stringstream ss(c_parts);
            std::string part;
            while (std::getline(ss, part, ',')) {
                if (part == "gap")
                    parts.push_back(gap_coloring(c_arity, t, domain));
                else if (part == "largeness")
                    parts.push_back(largeness_coloring(c_arity, t, domain));
                else if (part == "gap3")
                    parts.push_back(gap3_coloring(t, domain));
                else
                    throw InputError("unknown product part '" + part + "'");
            }
            write_coloring_jsonl(c_out.stream(), product_coloring(parts));
            return 0;
        };
    });

    auto* c_lift = color->add_subcommand("lift", "stage family lifted into extra coordinates");
    add_color_common(c_lift, true);
    c_lift->add_option("--extra", c_extra, "number of absorbed stage coordinates")
        ->capture_default_str();
    c_lift->callback([&] {
        action = [&] {
            ApproxTable t = load_table(c_table, c_normalize);
            auto domain = make_domain(c_points, c_domain_list);
            StagedFamily family = gap_family(c_arity, t, domain);
            write_coloring_jsonl(c_out.stream(), limit_lift(family, c_extra));
            return 0;
        };
    });

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "search for witnesses");
    solve->require_subcommand(1);
    std::string s_coloring;
    int s_ell = 1, s_m = 3, s_n = 2, s_k = 2;
    long long s_nodes = 0;
    double s_seconds = 0.0;
    int s_workers = 1;
    std::string s_table;
    bool s_normalize = false;
    int s_points = 0;
    std::string s_domain_list;
    Sink s_out;
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--max-nodes", s_nodes, "node budget, 0 = unlimited")
            ->envname("THINSET_MAX_NODES");
        sub->add_option("--max-seconds", s_seconds, "time budget, 0 = unlimited")
            ->envname("THINSET_MAX_SECONDS");
        sub->add_option("--workers", s_workers, "parallel workers for the root split")
            ->envname("THINSET_WORKERS");
    };

    auto* s_thin = solve->add_subcommand("thin", "least thin set for a stored coloring");
    s_thin->add_option("-f,--coloring", s_coloring, "coloring JSONL file, '-' for stdin")
        ->required();
    s_thin->add_option("--ell", s_ell, "number of colors the set may use")->required();
    s_thin->add_option("-m,--size", s_m, "requested set size")->required();
    s_thin->add_option("-o,--output", s_out.path, "output file (default stdout)");
    add_budget(s_thin);
    s_thin->callback([&] {
        action = [&] {
            Coloring f = [&] {
                if (s_coloring == "-") return read_coloring_jsonl(std::cin);
                std::ifstream in(s_coloring);
                if (!in) throw InputError("cannot open coloring file '" + s_coloring + "'");
                return read_coloring_jsonl(in);
            }();
            auto w = find_thin_set(f, s_ell, s_m, make_budget(s_nodes, s_seconds, s_workers));
            if (!w) {
                json none{{"found", false}, {"ell", s_ell}, {"m", s_m}};
                std::cout << none.dump(2) << std::endl;
                return 3;
            }
            s_out.stream() << thin_witness_to_json(*w).dump(2) << "\n";
            return 0;
        };
    });

    auto* s_ext = solve->add_subcommand("extremal", "least domain size forcing a thin set");
    s_ext->add_option("-n,--arity", s_n, "tuple arity")->required();
    s_ext->add_option("-k,--colors", s_k, "palette size")->required();
    s_ext->add_option("--ell", s_ell, "thinness bound")->required();
    s_ext->add_option("-m,--size", s_m, "requested set size")->required();
    s_ext->add_option("-o,--output", s_out.path, "output file (default stdout)");
    add_budget(s_ext);
    s_ext->callback([&] {
        action = [&] {
            int value = extremal_number(s_n, s_k, s_ell, s_m, make_budget(s_nodes, s_seconds, s_workers));
            json j{{"n", s_n}, {"k", s_k}, {"ell", s_ell}, {"m", s_m}, {"extremal", value}};
            s_out.stream() << j.dump(2) << "\n";
            return 0;
        };
    });

    auto* s_tour = solve->add_subcommand("tournament", "largest transitive subtournament");
    s_tour->add_option("-g,--table", s_table, "approximation table JSON")->required();
    s_tour->add_flag("--normalize", s_normalize, "normalize the table on load");
    s_tour->add_option("-D,--points", s_points, "domain 0..D-1");
    s_tour->add_option("--domain", s_domain_list, "explicit comma-separated domain")
        ->excludes(s_tour->get_option("-D"));
    s_tour->add_option("-o,--output", s_out.path, "output file (default stdout)");
    s_tour->callback([&] {
        action = [&] {
            ApproxTable t = load_table(s_table, s_normalize);
            auto domain = make_domain(s_points, s_domain_list);
            Tournament tour = tournament_from_g(t, domain);
            std::vector<int> indexes = max_transitive_subtournament(tour);
            json set = json::array();
            for (int i : indexes) set.push_back(domain[i]);
            json j{{"domain", domain}, {"set", set}, {"size", indexes.size()}};
            s_out.stream() << j.dump(2) << "\n";
            return 0;
        };
    });

    // ---- extract ----
    auto* extract = app.add_subcommand("extract", "turn thin witnesses into certified objects");
    extract->require_subcommand(1);
    std::string e_witness, e_table, e_target;
    bool e_normalize = false;
    int e_arity = 2;
    Sink e_out;
    auto add_extract_common = [&](CLI::App* sub) {
        sub->add_option("-w,--witness", e_witness, "thin witness JSON")->required();
        sub->add_option("-g,--table", e_table, "approximation table JSON")->required();
        sub->add_flag("--normalize", e_normalize, "normalize the table on load");
        sub->add_option("-o,--output", e_out.path, "output file (default stdout)");
    };

    auto* e_trans = extract->add_subcommand("transitive", "transitive set from a triple witness");
    add_extract_common(e_trans);
    e_trans->callback([&] {
        action = [&] {
            ThinWitness w = thin_witness_from_json(read_json_input(e_witness));
            ApproxTable t = load_table(e_table, e_normalize);
            TransitiveWitness out = extract_transitive(w, t);
            e_out.stream() << transitive_witness_to_json(out).dump(2) << "\n";
            return 0;
        };
    });

    auto* e_gap = extract->add_subcommand("gap", "dominating function from a gap witness");
    add_extract_common(e_gap);
    e_gap->add_option("-n,--arity", e_arity, "witness coloring arity")->required();
    e_gap->callback([&] {
        action = [&] {
            ThinWitness w = thin_witness_from_json(read_json_input(e_witness));
            ApproxTable t = load_table(e_table, e_normalize);
            DominationWitness out = extract_dominator_gap(w, t, e_arity);
            e_out.stream() << domination_witness_to_json(out).dump(2) << "\n";
            return 0;
        };
    });

    auto* e_large = extract->add_subcommand("largeness", "dominating function from a graph witness");
    add_extract_common(e_large);
    e_large->add_option("-n,--arity", e_arity, "witness coloring arity")->required();
    e_large->add_option("--target", e_target, "force a specific avoided graph (JSON file)");
    e_large->callback([&] {
        action = [&] {
            ThinWitness w = thin_witness_from_json(read_json_input(e_witness));
            ApproxTable t = load_table(e_table, e_normalize);
            std::optional<LargenessGraph> target;
            if (!e_target.empty()) target = graph_from_json(read_json_input(e_target));
            DominationWitness out = extract_dominator_largeness(w, t, e_arity, target);
            e_out.stream() << domination_witness_to_json(out).dump(2) << "\n";
            return 0;
        };
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the acceptance suites");
    std::string v_suite = "all";
    unsigned long long v_seed = kDefaultVerifySeed;
    std::string v_format = "table";
    Sink v_out;
    verify->add_option("suite", v_suite, "all, counts, colorings or search")
        ->check(CLI::IsMember({"all", "counts", "colorings", "search"}));
    verify->add_option("--seed", v_seed, "seed for the randomized suites")->capture_default_str();
    verify->add_option("--format", v_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    verify->add_option("-o,--output", v_out.path, "output file (default stdout)");
    verify->callback([&] { action = [&] { return run_verify(v_suite, v_seed, v_format, v_out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        std::cerr << e.what() << "\n";
        json err{{"error", {{"type", "usage"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << std::endl;
        return 1;
    }

    auto fail = [](const char* type, const std::exception& e, int code) {
        json err{{"error", {{"type", type}, {"message", e.what()}}}};
        std::cout << err.dump(2) << std::endl;
        return code;
    };
    try {
        return action ? action() : 1;
    } catch (const BudgetExceededError& e) {
        return fail("budget-exceeded", e, 4);
    } catch (const InsufficientDataError& e) {
        return fail("insufficient-data", e, 5);
    } catch (const SizeGuardError& e) {
        return fail("size-guard", e, 2);
    } catch (const InputError& e) {
        return fail("input", e, 2);
    } catch (const std::exception& e) {
        return fail("internal", e, 2);
    }
}
