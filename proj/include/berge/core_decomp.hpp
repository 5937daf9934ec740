#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berge/detect.hpp"
#include "berge/hypergraph.hpp"
#include "berge/pattern.hpp"

namespace berge {

// One peel step: low_set is an (r-1)-set whose codegree was in [1, alpha-1],
// removed lists every then-live edge containing it, kept is the retained one.
struct PeelStep {
    VertexSet low_set;
    std::vector<VertexSet> removed;
    VertexSet kept;
};

// core: the edges surviving the peel (every in-edge (r-1)-set has codegree 0
// or >= alpha there). witness: one retained edge per peel step.
struct CoreDecomposition {
    int alpha = 1;
    Hypergraph core;
    Hypergraph witness;
    std::vector<PeelStep> peel_log;
};

// Peel until no (r-1)-set has codegree in [1, alpha-1]. Deterministic: each
// step picks the lexicographically smallest qualifying set and keeps the
// lexicographically smallest removed edge. alpha=1 peels nothing.
CoreDecomposition alpha_core(const Hypergraph& h, int alpha);

struct CoreCheck {
    bool checked = false;
    bool pass = true;
    std::string note;
};

struct CoreReport {
    CoreCheck property_a;  // codegree floor on the core
    CoreCheck ratio;       // |witness| >= (|h| - |core|) / (alpha - 1)
    CoreCheck trace;       // |witness| <= sum of its part-deleted traces
    bool all_pass() const;
};

// Recomputes the decomposition's guarantees from scratch. A decomposition
// that does not replay against h raises StructureError. The trace check runs
// only when parts is given and h is r-partite under it.
CoreReport verify_core(const Hypergraph& h, const std::optional<Partition>& parts,
                       const CoreDecomposition& d);

// Given a copy of F in the 2-shadow of core (copy[i-1] = core vertex for
// F-vertex i), serve each F-edge by a core edge containing its image pair
// with minimum overlap with the whole image, smallest such edge on ties.
// With |V(F)| - 1 <= alpha the minimum is forced to be exactly the pair, so
// the result is an induced certificate; a larger minimum disproves the core
// property and raises CorePropertyError naming the offending (r-1)-set.
BergeCertificate embed_from_shadow(const Hypergraph& core, const PatternGraph& f,
                                   const std::vector<int>& copy, int alpha);

struct ExtendedPattern {
    PatternGraph pattern;
    BergeCertificate cert;
};

// Apex a new pattern vertex onto pattern edge {x,y} and extend the given
// induced certificate: the new vertex maps to the smallest non-base vertex
// of the edge serving {x,y}, then the enlarged copy is re-embedded.
// Needs r >= 3 and |V(F)| <= alpha.
ExtendedPattern extend_plus(const Hypergraph& core, const PatternGraph& f,
                            const BergeCertificate& cert, int x, int y, int alpha);

}  // namespace berge
