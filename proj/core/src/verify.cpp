#include "thinset/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "thinset/approx_table.hpp"
#include "thinset/coloring.hpp"
#include "thinset/errors.hpp"
#include "thinset/extract.hpp"
#include "thinset/largeness_graph.hpp"
#include "thinset/search.hpp"
#include "thinset/sequences.hpp"
#include "thinset/witness.hpp"

namespace thinset {

namespace {

// A table with every stage row equal to g(x) = a*x + c. Constant stages
// satisfy the invariants outright and make stage smallness coincide with
// truth smallness, which the witness constructions below rely on.
ApproxTable affine_table(std::int64_t a, std::int64_t c, int domain) {
    StagedTable t;
    t.stages = domain;
    t.domain = domain;
    t.stable_bound = domain;
    std::vector<std::int64_t> row(domain);
    for (int x = 0; x < domain; ++x) row[x] = a * x + c;
    t.values.assign(t.stages, row);
    return ApproxTable::checked(std::move(t));
}

void for_each_combination(int d, int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n > d) return;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == d - n + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
    }
}

// ---- criterion 1: enumeration counts and method agreement ----

CriterionResult c_enumeration() {
    CriterionResult r{1, "graph-enumeration-counts", true, "", 0.0};
    const std::vector<std::size_t> expected = {1, 1, 2, 5, 14, 42, 132};
    std::ostringstream detail;
    for (int n = 0; n <= 6 && r.passed; ++n) {
        const auto& filt = enumerate_graphs(n, EnumMethod::filter);
        const auto& rec = enumerate_graphs(n, EnumMethod::recursive);
        if (filt.size() != expected[n] || rec.size() != expected[n]) {
            r.passed = false;
            detail << "size " << n << ": got " << filt.size() << "/" << rec.size()
                   << ", expected " << expected[n];
            break;
        }
        for (std::size_t i = 0; i < filt.size(); ++i) {
            if (!(filt[i] == rec[i])) {
                r.passed = false;
                detail << "size " << n << ": methods disagree at position " << i;
                break;
            }
            if (i + 1 < rec.size() && !(rec[i].code() < rec[i + 1].code())) {
                r.passed = false;
                detail << "size " << n << ": canonical order broken at position " << i;
                break;
            }
        }
    }
    if (r.passed) detail << "counts 1,1,2,5,14,42,132 for sizes 0..6; both methods agree elementwise";
    r.detail = detail.str();
    return r;
}

// ---- criterion 2: the size-4 atlas ----

CriterionResult c_atlas() {
    CriterionResult r{2, "size-4-atlas", true, "", 0.0};
    std::ostringstream detail;
    const auto& graphs = enumerate_graphs(4);
    auto classes = graph_classes(4);
    std::size_t members = 0;
    for (const auto& cls : classes) members += cls.members.size();
    if (graphs.size() != 14 || classes.size() != 5 || members != 14) {
        r.passed = false;
        detail << "got " << graphs.size() << " graphs in " << classes.size() << " classes covering "
               << members << " members; expected 14 in 5";
    } else {
        for (const auto& cls : classes) {
            if (!is_adjacent_free(cls.packed_rep) || !is_normal(cls.normal_rep)) {
                r.passed = false;
                detail << "a class representative has the wrong shape";
                break;
            }
        }
    }
    if (r.passed) detail << "14 graphs of size 4 fall into 5 classes, matching the third Catalan number";
    r.detail = detail.str();
    return r;
}

// ---- criterion 3: the ell sequence collapses to Catalan ----

CriterionResult c_ell_identity() {
    CriterionResult r{3, "ell-catalan-identity", true, "", 0.0};
    std::ostringstream detail;
    auto cat = catalan_sequence(12);
    auto ell = ell_sequence(13);
    if (!(ell.at(1) == cat.at(0))) {
        r.passed = false;
        detail << "base case differs";
    }
    for (int n = 1; n <= 12 && r.passed; ++n) {
        if (!(ell.at(n + 1) == cat.at(n))) {
            r.passed = false;
            detail << "ell_" << n + 1 << " != d_" << n;
            break;
        }
        BigInt conv = 0;
        for (int i = 0; i < n; ++i) conv += ell.at(i + 1) * ell.at(n - i);
        if (!(conv == ell.at(n + 1))) {
            r.passed = false;
            detail << "convolution identity fails at n = " << n;
            break;
        }
    }
    if (r.passed)
        detail << "ell_{n+1} = d_n and the convolution identity hold for n = 1..12 (ell_13 = "
               << ell.at(13).str() << ")";
    r.detail = detail.str();
    return r;
}

// ---- criterion 4: decreasing sequences and the Schroder comparison ----

CriterionResult c_dec_schroder() {
    CriterionResult r{4, "dec-schroder-counts", true, "", 0.0};
    std::ostringstream detail;
    for (int n = 1; n <= 16 && r.passed; ++n) {
        std::size_t expected = (std::size_t{1} << (n - 1)) - 1;
        std::size_t got = dec_sequences(n).size();
        if (got != expected) {
            r.passed = false;
            detail << "|Dec_" << n << "| = " << got << ", expected " << expected;
        }
    }
    const std::vector<long long> s8 = {1, 2, 6, 22, 90, 394, 1806, 8558};
    auto sch = schroder_sequence(10);
    auto cat = catalan_sequence(10);
    for (int n = 0; n <= 7 && r.passed; ++n)
        if (!(sch.at(n) == BigInt(s8[n]))) {
            r.passed = false;
            detail << "Schroder value at " << n << " is off";
        }
    for (int n = 0; n <= 10 && r.passed; ++n)
        if (sch.at(n) < cat.at(n)) {
            r.passed = false;
            detail << "Schroder below Catalan at " << n;
        }
    if (r.passed)
        detail << "|Dec_n| = 2^{n-1}-1 for n <= 16; Schroder prefix 1,2,6,22,90,394,1806,8558 "
                  "dominates Catalan up to 10";
    r.detail = detail.str();
    return r;
}

// ---- criterion 5: pack / normalize round trips and class structure ----

CriterionResult c_round_trip() {
    CriterionResult r{5, "pack-normal-round-trip", true, "", 0.0};
    std::ostringstream detail;
    for (int n = 2; n <= 6 && r.passed; ++n) {
        for (const auto& g : enumerate_graphs(n)) {
            if (is_normal(g)) {
                LargenessGraph back = extend_graph(restrict_graph(g));
                if (!(back == g)) {
                    r.passed = false;
                    detail << "extend(restrict(.)) misses a normal graph of size " << n;
                    break;
                }
            }
            LargenessGraph up = extend_graph(g);
            if (!is_valid(up) || !is_normal(up) || !(restrict_graph(up) == g)) {
                r.passed = false;
                detail << "restrict(extend(.)) misses a graph of size " << n;
                break;
            }
        }
    }
    for (int n = 2; n <= 7 && r.passed; ++n) {
        auto classes = graph_classes(n);
        if (BigInt(classes.size()) != catalan(n - 1)) {
            r.passed = false;
            detail << "class count at size " << n << " is not Catalan";
            break;
        }
        for (const auto& cls : classes) {
            int free_members = 0, normal_members = 0;
            for (const auto& g : cls.members) {
                free_members += is_adjacent_free(g) ? 1 : 0;
                normal_members += is_normal(g) ? 1 : 0;
            }
            if (free_members != 1 || normal_members != 1) {
                r.passed = false;
                detail << "a size-" << n << " class has " << free_members << " adjacent-free and "
                       << normal_members << " normal members";
                break;
            }
        }
    }
    if (r.passed)
        detail << "round trips hold through size 6; every class up to size 7 has exactly one "
                  "adjacent-free and one normal member";
    r.detail = detail.str();
    return r;
}

// ---- criterion 6: fuzzed colorings only emit lawful values ----

CriterionResult c_fuzz(std::uint64_t seed) {
    CriterionResult r{6, "coloring-validity-fuzz", true, "", 0.0};
    std::ostringstream detail;
    std::mt19937_64 rng(seed);
    const int tables = 1000, tuples_per_arity = 200;
    long long graphs_checked = 0, triples_checked = 0;
    Gap3Palette g3;
    for (int it = 0; it < tables && r.passed; ++it) {
        int X = 6 + static_cast<int>(rng() % 7);
        int S = X + 2 + static_cast<int>(rng() % 5);
        StagedTable raw;
        raw.stages = S;
        raw.domain = X;
        raw.stable_bound = X;
        raw.values.assign(S, std::vector<std::int64_t>(X));
        std::uniform_int_distribution<std::int64_t> val(0, 3 * X);
        for (int s = 0; s + 1 < S; ++s)
            for (int x = 0; x < X; ++x) raw.values[s][x] = val(rng);
        raw.values[S - 1] = raw.values[S - 2];
        ApproxTable table = normalize_approximations(raw);

        for (int n = 2; n <= 5 && r.passed; ++n) {
            for (int rep = 0; rep < tuples_per_arity; ++rep) {
                std::set<int> picked;
                std::uniform_int_distribution<int> el(0, X - 1);
                while (static_cast<int>(picked.size()) < n) picked.insert(el(rng));
                std::vector<int> tuple(picked.begin(), picked.end());

                LargenessGraph g = largeness_graph_of(table, tuple);
                ++graphs_checked;
                auto report = validate_graph(g);
                if (!report.ok()) {
                    r.passed = false;
                    detail << "table " << it << ", tuple of arity " << n
                           << " produced an invalid graph: " << report.violations.front().describe();
                    break;
                }
                if (n == 3) {
                    int xy = table.is_g_large(tuple[0], tuple[1]) ? 1 : 0;
                    int yz = table.is_g_large(tuple[1], tuple[2]) ? 1 : 0;
                    int xz = table.is_g_large(tuple[0], tuple[2]) ? 1 : 0;
                    ++triples_checked;
                    if (g3.encode(xy, yz, xz) < 0) {
                        r.passed = false;
                        detail << "table " << it << " produced the infeasible triple " << xy << yz
                               << xz;
                        break;
                    }
                }
            }
        }
    }
    if (r.passed)
        detail << tables << " normalized random tables; " << graphs_checked
               << " largeness values all valid, " << triples_checked
               << " interval triples all feasible";
    r.detail = detail.str();
    return r;
}

// ---- criterion 7: solver versus oracle on random instances ----

bool same_witness(const std::optional<ThinWitness>& a, const std::optional<ThinWitness>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->set == b->set && a->used_colors == b->used_colors &&
           a->avoided_colors == b->avoided_colors && a->bound == b->bound;
}

CriterionResult c_solver_oracle(std::uint64_t seed) {
    CriterionResult r{7, "solver-oracle-agreement", true, "", 0.0};
    std::ostringstream detail;
    std::mt19937_64 rng(seed);
    const int instances = 200;
    int found = 0, none = 0;
    for (int it = 0; it < instances && r.passed; ++it) {
        int n = 1 + static_cast<int>(rng() % 3);
        int d = 4 + static_cast<int>(rng() % 7);
        int k = 2 + static_cast<int>(rng() % 5);
        int ell = 1 + static_cast<int>(rng() % k);
        int m = 1 + static_cast<int>(rng() % std::min(6, d));

        std::set<int> dom_set;
        std::uniform_int_distribution<int> el(0, 29);
        while (static_cast<int>(dom_set.size()) < d) dom_set.insert(el(rng));
        std::vector<int> domain(dom_set.begin(), dom_set.end());

        auto colors = std::make_shared<std::map<std::vector<int>, int>>();
        std::uniform_int_distribution<int> col(0, k - 1);
        for_each_combination(d, n, [&](const std::vector<int>& idx) {
            std::vector<int> t(n);
            for (int i = 0; i < n; ++i) t[i] = domain[idx[i]];
            (*colors)[t] = col(rng);
        });
        Coloring f("random", n, domain, std::make_shared<IntPalette>(k),
                   [colors](std::span<const int> t) {
                       return colors->at(std::vector<int>(t.begin(), t.end()));
                   });

        auto fast = find_thin_set(f, ell, m);
        auto slow = brute_thin_oracle(f, ell, m);
        auto parallel = find_thin_set(f, ell, m, SearchBudget{0, 0.0, 3});
        if (!same_witness(fast, slow) || !same_witness(fast, parallel)) {
            r.passed = false;
            detail << "instance " << it << " (n=" << n << ", |D|=" << d << ", k=" << k
                   << ", ell=" << ell << ", m=" << m << ") disagrees";
            break;
        }
        if (fast) {
            if (!verify_thin_witness(f, *fast)) {
                r.passed = false;
                detail << "instance " << it << " returned an unverifiable witness";
                break;
            }
            ++found;
        } else {
            ++none;
        }
    }
    if (r.passed)
        detail << instances << " random instances: " << found << " witnesses and " << none
               << " none-results, sequential, exhaustive and 3-worker runs all agree";
    r.detail = detail.str();
    return r;
}

// ---- criterion 8: extremal numbers ----

CriterionResult c_extremal() {
    CriterionResult r{8, "extremal-numbers", true, "", 0.0};
    std::ostringstream detail;
    struct Case {
        int n, k, ell, m, expected;
    };
    // The first two are pigeonhole rows, the third bridges to the classical
    // two-coloring Ramsey bound for triangles, the last two are the trivial
    // regime where the bound does not bite.
    const std::vector<Case> cases = {
        {1, 2, 1, 2, 3}, {1, 3, 1, 3, 7}, {2, 2, 1, 3, 6}, {2, 5, 5, 4, 4}, {3, 4, 4, 5, 5},
    };
    for (const auto& c : cases) {
        int got = extremal_number(c.n, c.k, c.ell, c.m);
        if (got != c.expected) {
            r.passed = false;
            detail << "extremal(" << c.n << "," << c.k << "," << c.ell << "," << c.m << ") = " << got
                   << ", expected " << c.expected;
            break;
        }
    }
    if (r.passed)
        detail << "extremal(1,2,1,2)=3, extremal(1,3,1,3)=7, extremal(2,2,1,3)=6 "
                  "(the triangle Ramsey bound), and the trivial regime returns m";
    r.detail = detail.str();
    return r;
}

// ---- criterion 9: constructed witnesses extract and verify ----

struct FamilyStats {
    int attempted = 0;
    int verified = 0;
    std::string first_failure;

    void fail(const std::string& msg) {
        if (first_failure.empty()) first_failure = msg;
    }
};

// Strictly increasing set whose adjacent intervals are all g-large:
// x_{j+1} = g(x_j) + jitter.
std::vector<int> sparse_set(std::mt19937_64& rng, std::int64_t a, std::int64_t c, int length) {
    std::vector<int> H;
    std::int64_t x = static_cast<std::int64_t>(rng() % 2);
    for (int i = 0; i < length; ++i) {
        H.push_back(static_cast<int>(x));
        x = a * x + c + static_cast<std::int64_t>(rng() % 2);
    }
    return H;
}

void run_gap_family(std::mt19937_64& rng, FamilyStats& stats) {
    for (int it = 0; it < 50; ++it) {
        ++stats.attempted;
        try {
            std::vector<int> H;
            std::int64_t a, c;
            int n;
            if (it % 2 == 0) {
                // All adjacent intervals large: the all-small vector is
                // avoided and the extraction reads off every n-th element.
                n = 2 + static_cast<int>(rng() % 3);
                a = 1 + static_cast<std::int64_t>(rng() % 2);
                c = 1 + static_cast<std::int64_t>(rng() % 3);
                H = sparse_set(rng, a, c, n + 1 + static_cast<int>(rng() % 4));
            } else {
                // A small cluster in front of an exactly-large tail: the
                // avoided color is large-then-small and the extraction
                // shifts past the threshold of its realized prefix.
                n = 3;
                a = 2;
                c = 2 + static_cast<std::int64_t>(rng() % 3);
                H = {0, 1, static_cast<int>(a + c - 1)};
                int len = 5 + static_cast<int>(rng() % 3);
                std::int64_t x = H.back();
                while (static_cast<int>(H.size()) < len) {
                    x = a * x + c + static_cast<std::int64_t>(rng() % 2);
                    H.push_back(static_cast<int>(x));
                }
            }
            ApproxTable table = affine_table(a, c, H.back() + 2);
            Coloring f = gap_coloring(n, table, H);
            ThinWitness w = make_thin_witness(f, H, (1 << (n - 1)) - 1);
            DominationWitness dom = extract_dominator_gap(w, table, n);
            if (dom.certificate.empty() || !verify_domination_witness(table, dom))
                stats.fail("gap certificate failed verification");
            else
                ++stats.verified;
        } catch (const std::exception& e) {
            stats.fail(std::string("gap family: ") + e.what());
        }
    }
}

void run_gap3_family(std::mt19937_64& rng, FamilyStats& stats) {
    for (int it = 0; it < 50; ++it) {
        ++stats.attempted;
        try {
            std::vector<int> H;
            std::int64_t a = 1, c;
            std::size_t min_size;
            TransitiveKind expected;
            switch (it % 4) {
            case 0: {
                // All intervals large; the small-large-large color is
                // avoided and H itself is the output.
                a = 1 + static_cast<std::int64_t>(rng() % 2);
                c = 1 + static_cast<std::int64_t>(rng() % 3);
                H = sparse_set(rng, a, c, 4 + static_cast<int>(rng() % 4));
                expected = TransitiveKind::all_large;
                min_size = H.size();
                break;
            }
            case 1: {
                // All pairs small: H is g-transitive as it stands.
                int len = 4 + static_cast<int>(rng() % 3);
                c = len + 2 + static_cast<std::int64_t>(rng() % 3);
                for (int i = 0; i < len; ++i) H.push_back(i);
                expected = TransitiveKind::transitive_with_small;
                min_size = H.size();
                break;
            }
            case 2: {
                // Wide cluster below a sparse tail: only large-then-small
                // is avoided, so the tail above the least large pair wins.
                c = 3 + static_cast<std::int64_t>(rng() % 3);
                H = {0, 1, 2, static_cast<int>(c) + 1};
                int tail = 2 + static_cast<int>(rng() % 3);
                std::int64_t x = H.back();
                for (int i = 0; i < tail; ++i) {
                    x = x + c + static_cast<std::int64_t>(rng() % 2);
                    H.push_back(static_cast<int>(x));
                }
                expected = TransitiveKind::all_large;
                min_size = static_cast<std::size_t>(tail);
                break;
            }
            default: {
                // Tight pair before an exactly-large chain: the all-small
                // color is avoided and the even-indexed elements survive.
                a = 2;
                c = 2 + static_cast<std::int64_t>(rng() % 2);
                H = {0, 1, static_cast<int>(c) + 1};
                std::int64_t x = H.back();
                while (H.size() < 6) {
                    x = a * x + c + static_cast<std::int64_t>(rng() % 2);
                    H.push_back(static_cast<int>(x));
                }
                expected = TransitiveKind::all_large;
                min_size = 3;
                break;
            }
            }
            ApproxTable table = affine_table(a, c, H.back() + 2);
            Coloring f = gap3_coloring(table, H);
            ThinWitness w = make_thin_witness(f, H, 4);
            TransitiveWitness t = extract_transitive(w, table);
            bool ok = t.kind == expected && t.set.size() >= min_size &&
                      t.set.size() >= (H.size() - 2) / 2 && is_g_transitive(t.set, table).ok;
            if (ok && t.kind == TransitiveKind::all_large)
                ok = all_intervals_large(t.set, table);
            if (!ok)
                stats.fail("transitive witness failed verification");
            else
                ++stats.verified;
        } catch (const std::exception& e) {
            stats.fail(std::string("triple family: ") + e.what());
        }
    }
}

void run_largeness_family(std::mt19937_64& rng, FamilyStats& stats) {
    for (int it = 0; it < 50; ++it) {
        ++stats.attempted;
        try {
            std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 2);
            std::int64_t c = 1 + static_cast<std::int64_t>(rng() % 3);
            int n;
            std::optional<LargenessGraph> target;
            switch (it % 3) {
            case 0:
                // Default choice: the empty graph is avoided and drives
                // the same-class tuple enumeration directly.
                n = 2 + static_cast<int>(rng() % 2);
                break;
            case 1:
                // An avoided graph with the adjacent edge {0,1}: its
                // singleton prefix is realized, the empty suffix is not,
                // and the extraction recurses on the tail.
                n = 3;
                target = LargenessGraph::from_edges(3, {{0, 1}});
                break;
            default:
                // Adjacent edge {1,2} with the forced chord {0,2}: the
                // empty prefix is unrealized, recursing at lower arity.
                n = 3;
                target = LargenessGraph::from_edges(3, {{1, 2}, {0, 2}});
                break;
            }
            std::vector<int> H = sparse_set(rng, a, c, n + 2 + static_cast<int>(rng() % 3));
            ApproxTable table = affine_table(a, c, H.back() + 2);
            Coloring f = largeness_coloring(n, table, H);
            ThinWitness w = make_thin_witness(f, H, f.palette().size() - 1);
            DominationWitness dom = extract_dominator_largeness(w, table, n, target);
            if (dom.certificate.empty() || !verify_domination_witness(table, dom))
                stats.fail("largeness certificate failed verification");
            else
                ++stats.verified;
        } catch (const std::exception& e) {
            stats.fail(std::string("largeness family: ") + e.what());
        }
    }
}

CriterionResult c_extraction(std::uint64_t seed) {
    CriterionResult r{9, "extraction-certificates", true, "", 0.0};
    std::ostringstream detail;
    std::mt19937_64 rng(seed);
    FamilyStats gap, triple, graph;
    run_gap_family(rng, gap);
    run_gap3_family(rng, triple);
    run_largeness_family(rng, graph);
    r.passed = gap.verified == 50 && triple.verified == 50 && graph.verified == 50;
    if (r.passed) {
        detail << "50 witnesses per family; every gap and largeness certificate dominates the "
                  "truth row pointwise, every transitive set checks out";
    } else {
        detail << "verified " << gap.verified << "/50 gap, " << triple.verified << "/50 triple, "
               << graph.verified << "/50 largeness";
        for (const auto* s : {&gap, &triple, &graph})
            if (!s->first_failure.empty()) {
                detail << "; first failure: " << s->first_failure;
                break;
            }
    }
    r.detail = detail.str();
    return r;
}

// ---- criterion 10: scope note ----

CriterionResult c_scope_note() {
    CriterionResult r{10, "infinite-scope-note", true, "", 0.0};
    r.detail =
        "the model-theoretic strength results have no finite instances and are out of scope "
        "here; suites 1-9 cover every claim this library makes";
    return r;
}

CriterionResult dispatch(int index, std::uint64_t seed) {
    std::uint64_t mixed = seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(index));
    switch (index) {
    case 1: return c_enumeration();
    case 2: return c_atlas();
    case 3: return c_ell_identity();
    case 4: return c_dec_schroder();
    case 5: return c_round_trip();
    case 6: return c_fuzz(mixed);
    case 7: return c_solver_oracle(mixed);
    case 8: return c_extremal();
    case 9: return c_extraction(mixed);
    case 10: return c_scope_note();
    default: throw InputError("no criterion " + std::to_string(index));
    }
}

} // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

CriterionResult run_criterion(int index, std::uint64_t seed) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = dispatch(index, seed);
    } catch (const std::exception& e) {
        r.index = index;
        r.name = "criterion-" + std::to_string(index);
        r.passed = false;
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

VerifyReport run_suite(const std::string& suite, std::uint64_t seed) {
    std::vector<int> indices;
    if (suite == "counts")
        indices = {1, 2, 3, 4, 5};
    else if (suite == "colorings")
        indices = {6};
    else if (suite == "search")
        indices = {7, 8, 9};
    else if (suite == "all")
        indices = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    else
        throw InputError("unknown suite '" + suite + "' (counts, colorings, search, all)");
    VerifyReport report;
    for (int i : indices) report.results.push_back(run_criterion(i, seed));
    return report;
}

} // namespace thinset
