#include "thinset/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "thinset/errors.hpp"

namespace thinset {

namespace {

int as_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> as_int_vector(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& e : j) out.push_back(as_int(e, what));
    return out;
}

} // namespace

nlohmann::json graph_to_json(const LargenessGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [i, j] : g.edges()) edges.push_back(nlohmann::json::array({i, j}));
    return {{"n", g.size()}, {"edges", edges}};
}

LargenessGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InputError("graph record needs fields n and edges");
    int n = as_int(j.at("n"), "n");
    if (n < 0 || n > 64) throw InputError("graph size out of range");
    LargenessGraph g(n);
    for (const auto& e : j.at("edges")) {
        auto pair = as_int_vector(e, "edge");
        if (pair.size() != 2) throw InputError("edge must be a pair");
        if (pair[0] < 0 || pair[1] >= n || pair[0] >= pair[1])
            throw InputError("edge {" + std::to_string(pair[0]) + "," +
                             std::to_string(pair[1]) + "} out of range");
        g.set_edge(pair[0], pair[1], true);
    }
    return g;
}

std::string graph_to_dot(const LargenessGraph& g) {
    std::ostringstream os;
    os << "graph largeness {\n";
    os << "  {rank=same";
    for (int v = 0; v < g.size(); ++v) os << "; " << v;
    os << "}\n";
    for (auto [i, j] : g.edges()) os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
    return os.str();
}

nlohmann::json staged_to_json(const StagedTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.values) rows.push_back(row);
    return {{"stages", t.stages},
            {"domain", t.domain},
            {"stable_bound", t.stable_bound},
            {"values", rows}};
}

StagedTable staged_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("table must be a JSON object");
    for (const char* key : {"stages", "domain", "stable_bound", "values"})
        if (!j.contains(key))
            throw InputError(std::string("table is missing the field ") + key);
    StagedTable t;
    t.stages = as_int(j.at("stages"), "stages");
    t.domain = as_int(j.at("domain"), "domain");
    t.stable_bound = as_int(j.at("stable_bound"), "stable_bound");
    if (!j.at("values").is_array()) throw InputError("values must be an array of rows");
    for (const auto& row : j.at("values")) {
        if (!row.is_array()) throw InputError("values must be an array of rows");
        std::vector<int64_t> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw InputError("table entries must be integers");
            r.push_back(v.get<int64_t>());
        }
        t.values.push_back(std::move(r));
    }
    return t;
}

nlohmann::json table_to_json(const ApproxTable& t) {
    return staged_to_json(t.data());
}

void write_sequence_csv(std::ostream& os, const SequenceTable& t) {
    os << "index,value\n";
    for (size_t i = 0; i < t.values.size(); ++i)
        os << (t.first_index + static_cast<int>(i)) << "," << t.values[i] << "\n";
}

void write_coloring_jsonl(std::ostream& os, const Coloring& f) {
    nlohmann::json header = {{"kind", f.kind()},
                             {"arity", f.arity()},
                             {"domain", f.domain()},
                             {"palette", f.palette().to_json()}};
    os << header.dump() << "\n";
    f.for_each_tuple([&](std::span<const int> t, int c) {
        nlohmann::json rec = {{"c", c}, {"t", std::vector<int>(t.begin(), t.end())}};
        os << rec.dump() << "\n";
    });
}

namespace {

/// Codec restored from a stored header; colors keep their stored
/// structured form.
class StoredPalette : public Palette {
public:
    StoredPalette(std::string kind, nlohmann::json colors)
        : kind_(std::move(kind)), colors_(std::move(colors)) {}
    int size() const override { return static_cast<int>(colors_.size()); }
    std::string kind() const override { return kind_; }
    nlohmann::json color_json(int code) const override {
        if (code < 0 || code >= size()) throw InputError("color code out of range");
        return colors_.at(code);
    }

private:
    std::string kind_;
    nlohmann::json colors_;
};

} // namespace

Coloring read_coloring_jsonl(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw InputError("coloring stream is empty");
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("bad coloring header: ") + e.what());
    }
    for (const char* key : {"kind", "arity", "domain", "palette"})
        if (!header.contains(key))
            throw InputError(std::string("coloring header is missing ") + key);
    int arity = as_int(header.at("arity"), "arity");
    std::vector<int> domain = as_int_vector(header.at("domain"), "domain");
    const auto& pal = header.at("palette");
    if (!pal.contains("kind") || !pal.contains("colors"))
        throw InputError("palette record needs kind and colors");
    auto palette = std::make_shared<StoredPalette>(pal.at("kind").get<std::string>(),
                                                   pal.at("colors"));

    auto table = std::make_shared<std::map<std::vector<int>, int>>();
    int line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw InputError("bad coloring record on line " + std::to_string(line_no) +
                             ": " + e.what());
        }
        if (!rec.contains("t") || !rec.contains("c"))
            throw InputError("coloring record on line " + std::to_string(line_no) +
                             " needs fields t and c");
        std::vector<int> t = as_int_vector(rec.at("t"), "t");
        int c = as_int(rec.at("c"), "c");
        if (c < 0 || c >= palette->size())
            throw InputError("color code out of palette range on line " +
                             std::to_string(line_no));
        (*table)[std::move(t)] = c;
    }
    auto eval = [table](std::span<const int> t) {
        auto it = table->find(std::vector<int>(t.begin(), t.end()));
        if (it == table->end())
            throw InputError("tuple is not present in the stored coloring");
        return it->second;
    };
    return Coloring(header.at("kind").get<std::string>(), arity, std::move(domain),
                    std::move(palette), std::move(eval));
}

nlohmann::json thin_witness_to_json(const ThinWitness& w) {
    return {{"H", w.set},
            {"used", w.used_colors},
            {"avoided", w.avoided_colors},
            {"kind", "thin"},
            {"bound", w.bound}};
}

ThinWitness thin_witness_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("H"))
        throw InputError("witness record needs the field H");
    ThinWitness w;
    w.set = as_int_vector(j.at("H"), "H");
    if (j.contains("used")) w.used_colors = as_int_vector(j.at("used"), "used");
    if (j.contains("avoided")) w.avoided_colors = as_int_vector(j.at("avoided"), "avoided");
    if (j.contains("bound")) w.bound = as_int(j.at("bound"), "bound");
    return w;
}

nlohmann::json transitive_witness_to_json(const TransitiveWitness& w) {
    return {{"H", w.set},
            {"kind", w.kind == TransitiveKind::all_large ? "all-large"
                                                         : "transitive-with-small"}};
}

nlohmann::json domination_witness_to_json(const DominationWitness& w) {
    nlohmann::json cert = nlohmann::json::array();
    for (const auto& e : w.certificate)
        cert.push_back(nlohmann::json::array({e.i, e.h, e.g}));
    return {{"kind", "domination"}, {"certificate", cert}};
}

nlohmann::json json_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

} // namespace thinset
