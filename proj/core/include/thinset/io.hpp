#ifndef THINSET_IO_HPP
#define THINSET_IO_HPP

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "thinset/approx_table.hpp"
#include "thinset/coloring.hpp"
#include "thinset/largeness_graph.hpp"
#include "thinset/sequences.hpp"
#include "thinset/witness.hpp"

namespace thinset {

/// {"n": size, "edges": [[i, j], ...]} with edges sorted.
nlohmann::json graph_to_json(const LargenessGraph& g);

/// Structural load only; axiom validation is a separate step so that
/// invalid graphs can be loaded for checking.
LargenessGraph graph_from_json(const nlohmann::json& j);

/// Undirected DOT with the vertices pinned onto one rank.
std::string graph_to_dot(const LargenessGraph& g);

/// {"stages": S, "domain": X, "stable_bound": B, "values": [[...], ...]}
nlohmann::json staged_to_json(const StagedTable& t);
StagedTable staged_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const ApproxTable& t);

/// index,value rows with a header.
void write_sequence_csv(std::ostream& os, const SequenceTable& t);

/// One header line carrying kind/arity/domain and the palette codec,
/// then one {"c": code, "t": [...]} line per tuple in lexicographic
/// order.
void write_coloring_jsonl(std::ostream& os, const Coloring& f);

/// Rebuilds a coloring from its stored records; evaluation looks tuples
/// up in the materialized map and rejects anything absent.
Coloring read_coloring_jsonl(std::istream& is);

nlohmann::json thin_witness_to_json(const ThinWitness& w);
ThinWitness thin_witness_from_json(const nlohmann::json& j);
nlohmann::json transitive_witness_to_json(const TransitiveWitness& w);
nlohmann::json domination_witness_to_json(const DominationWitness& w);

/// Parses a whole file, mapping parse failures to input errors.
nlohmann::json json_from_file(const std::string& path);

} // namespace thinset

#endif
