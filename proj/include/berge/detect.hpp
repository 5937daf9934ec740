#pragma once

#include <optional>
#include <span>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/pattern.hpp"

namespace berge {

enum class BergeMode { berge, induced };

// Witness for a (Berge / induced-Berge) copy of a pattern F in a host.
// base[i-1] is the host vertex playing F-vertex i; edges[j] is the index of
// the host edge serving the j-th pattern edge (canonical pattern-edge order).
struct BergeCertificate {
    BergeMode mode = BergeMode::berge;
    std::vector<int> base;
    std::vector<int> edges;
};

// Both finders normalize F via strip_isolated first; certificates refer to
// the stripped, relabelled pattern. Patterns without edges raise
// PatternError. Search order is deterministic: pattern vertices by
// descending degree (ties by ascending id), host candidates ascending.
std::optional<BergeCertificate> find_berge(const Hypergraph& host, const PatternGraph& f);
std::optional<BergeCertificate> find_induced_berge(const Hypergraph& host, const PatternGraph& f);

// Same searches, but the certificate must use the given host edge. Used for
// incremental freeness checks: a host that was free stays free after adding
// edge e iff no copy through e appears.
std::optional<BergeCertificate> find_berge_using(const Hypergraph& host, const PatternGraph& f,
                                                 int edge_index);
std::optional<BergeCertificate> find_induced_berge_using(const Hypergraph& host,
                                                         const PatternGraph& f, int edge_index);

// Pure check of every certificate invariant against host and f (as given,
// not re-stripped). Malformed data returns false, never throws.
bool verify_certificate(const Hypergraph& host, const PatternGraph& f,
                        const BergeCertificate& c);

namespace detail {
// Span-based entry used by the search kernels; the edge span need not be in
// canonical order, and certificate edge indices refer to the span positions.
std::optional<BergeCertificate> find_pattern(BergeMode mode, int r, int n,
                                             std::span<const VertexSet> edges,
                                             const PatternGraph& f,
                                             std::optional<int> required_edge);
}  // namespace detail

// Subfamily f_1..f_s (member indices) such that each f_i keeps a private
// vertex outside every other chosen member; reps[i] is the smallest one.
struct StronglyRepresentable {
    std::vector<int> members;
    std::vector<int> reps;
};

// First such subfamily in ascending index order, or nullopt. s < 1 raises
// ParameterError; s > family size is simply absent.
std::optional<StronglyRepresentable> find_strongly_representable(
    const std::vector<VertexSet>& family, int s);

}  // namespace berge
