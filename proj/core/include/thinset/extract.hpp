#ifndef THINSET_EXTRACT_HPP
#define THINSET_EXTRACT_HPP

#include <optional>

#include "thinset/approx_table.hpp"
#include "thinset/largeness_graph.hpp"
#include "thinset/witness.hpp"

namespace thinset {

/// Turns a thin set for the five-color triple coloring into a
/// g-transitive set by the avoided-color case analysis. Avoided colors
/// are recomputed from the table; cases are tried from the one
/// returning the largest verified set downwards. The result passes
/// is_g_transitive and has at least floor((|H|-2)/2) elements.
TransitiveWitness extract_transitive(const ThinWitness& w, const ApproxTable& table);

/// Turns a thin set for the arity-n gap coloring into a finite
/// dominating function, recursing on the avoided color: an avoided
/// all-small vector reads off every n-th element; otherwise the
/// rightmost large coordinate splits the color into a prefix (recurse
/// when unrealized) or a threshold shift past the realizing tuple.
DominationWitness extract_dominator_gap(const ThinWitness& w, const ApproxTable& table, int n);

/// Turns a thin set for the arity-n largeness coloring into a finite
/// dominating function. An avoided adjacent-free graph drives the
/// enumeration of same-class tuples (each must contain a large
/// interval); an avoided graph with an adjacent edge splits into
/// prefix/suffix realization searches, recursing on whichever side is
/// unrealized. A target graph can be forced instead of the default
/// choice (least avoided code, adjacent-free preferred).
DominationWitness extract_dominator_largeness(const ThinWitness& w, const ApproxTable& table,
                                              int n,
                                              std::optional<LargenessGraph> target = std::nullopt);

} // namespace thinset

#endif
