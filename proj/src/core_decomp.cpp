#include "berge/core_decomp.hpp"

#include <algorithm>
#include <map>

#include "berge/gt_class.hpp"

namespace berge {

CoreDecomposition alpha_core(const Hypergraph& h, int alpha) {
    if (alpha < 1) throw ParameterError("alpha must be at least 1");
    if (h.r() < 2) throw UniformityError("core peeling needs uniformity at least 2");

    std::vector<char> alive(static_cast<size_t>(h.m()), 1);
    // codegrees of (r-1)-subsets of live edges; ordered map so the scan for
    // the smallest qualifying set is a plain walk
    std::map<VertexSet, int> cnt;
    for (const VertexSet& e : h.edges())
        for (VertexSet& s : subsets_of(e, h.r() - 1)) ++cnt[std::move(s)];

    std::vector<PeelStep> log;
    std::vector<VertexSet> kept;
    for (;;) {
        const VertexSet* low = nullptr;
        for (const auto& [s, c] : cnt)
            if (c >= 1 && c <= alpha - 1) {
                low = &s;
                break;
            }
        if (!low) break;
        PeelStep step;
        step.low_set = *low;
        for (int i = 0; i < h.m(); ++i) {
            if (!alive[static_cast<size_t>(i)]) continue;
            if (!step.low_set.subset_of(h.edge(i))) continue;
            step.removed.push_back(h.edge(i));
            alive[static_cast<size_t>(i)] = 0;
        }
        // canonical edge order is ascending, so the first removed edge is the
        // lexicographically smallest of the batch
        step.kept = step.removed.front();
        for (const VertexSet& e : step.removed)
            for (const VertexSet& s : subsets_of(e, h.r() - 1)) {
                auto it = cnt.find(s);
                if (--(it->second) == 0) cnt.erase(it);
            }
        kept.push_back(step.kept);
        log.push_back(std::move(step));
    }

    std::vector<VertexSet> core_edges;
    for (int i = 0; i < h.m(); ++i)
        if (alive[static_cast<size_t>(i)]) core_edges.push_back(h.edge(i));
    return CoreDecomposition{alpha, Hypergraph(h.r(), h.n(), std::move(core_edges)),
                             Hypergraph(h.r(), h.n(), std::move(kept)), std::move(log)};
}

bool CoreReport::all_pass() const {
    for (const CoreCheck* c : {&property_a, &ratio, &trace})
        if (c->checked && !c->pass) return false;
    return true;
}

CoreReport verify_core(const Hypergraph& h, const std::optional<Partition>& parts,
                       const CoreDecomposition& d) {
    if (d.alpha < 1) throw StructureError("decomposition has alpha < 1");
    if (d.core.r() != h.r() || d.core.n() != h.n() || d.witness.r() != h.r() ||
        d.witness.n() != h.n())
        throw StructureError("decomposition shape does not match the host");

    // replay the accounting: peel batches are disjoint, live in h, keep one
    // edge each, and together with the core exactly cover h
    std::vector<char> seen(static_cast<size_t>(h.m()), 0);
    size_t removed_total = 0;
    std::vector<VertexSet> kept;
    for (const PeelStep& step : d.peel_log) {
        if (static_cast<int>(step.low_set.size()) != h.r() - 1)
            throw StructureError("peel set " + step.low_set.str() + " has wrong arity");
        if (step.removed.empty()) throw StructureError("peel step removed nothing");
        if (static_cast<int>(step.removed.size()) > d.alpha - 1)
            throw StructureError("peel step removed " + std::to_string(step.removed.size()) +
                                 " edges, above alpha - 1");
        bool kept_in_batch = false;
        for (const VertexSet& e : step.removed) {
            int idx = h.edge_index(e);
            if (idx < 0) throw StructureError("peeled edge " + e.str() + " not in the host");
            if (seen[static_cast<size_t>(idx)])
                throw StructureError("edge " + e.str() + " peeled twice");
            seen[static_cast<size_t>(idx)] = 1;
            if (!step.low_set.subset_of(e))
                throw StructureError("peeled edge " + e.str() + " misses its peel set");
            if (e == step.kept) kept_in_batch = true;
        }
        if (!kept_in_batch) throw StructureError("kept edge not part of its peel batch");
        kept.push_back(step.kept);
        removed_total += step.removed.size();
    }
    for (const VertexSet& e : d.core.edges()) {
        int idx = h.edge_index(e);
        if (idx < 0) throw StructureError("core edge " + e.str() + " not in the host");
        if (seen[static_cast<size_t>(idx)])
            throw StructureError("core edge " + e.str() + " was also peeled");
    }
    if (static_cast<size_t>(d.core.m()) + removed_total != static_cast<size_t>(h.m()))
        throw StructureError("core and peel batches do not cover the host");
    std::sort(kept.begin(), kept.end());
    if (kept != d.witness.edges())
        throw StructureError("witness family differs from the kept edges");

    CoreReport rep;
    rep.property_a.checked = true;
    for (const VertexSet& e : d.core.edges()) {
        for (const VertexSet& s : subsets_of(e, h.r() - 1)) {
            int c = codegree(d.core, s);
            if (c < d.alpha) {
                rep.property_a.pass = false;
                rep.property_a.note = "set " + s.str() + " has codegree " + std::to_string(c);
                break;
            }
        }
        if (!rep.property_a.pass) break;
    }

    if (d.alpha >= 2) {
        rep.ratio.checked = true;
        long long peeled = h.m() - d.core.m();
        rep.ratio.pass = static_cast<long long>(d.witness.m()) * (d.alpha - 1) >= peeled;
        if (!rep.ratio.pass)
            rep.ratio.note = "witness too small: " + std::to_string(d.witness.m()) + " * " +
                             std::to_string(d.alpha - 1) + " < " + std::to_string(peeled);
    } else {
        rep.ratio.note = "alpha = 1 peels nothing, ratio not applicable";
    }

    if (parts) {
        if (parts->size() != h.n()) throw StructureError("partition size does not match the host");
        if (is_r_partite(h, *parts)) {
            rep.trace.checked = true;
            long long sum = 0;
            for (int s = 1; s <= parts->k; ++s)
                sum += trace_minus_part(d.witness, *parts, s).m();
            rep.trace.pass = static_cast<long long>(d.witness.m()) <= sum;
            if (!rep.trace.pass)
                rep.trace.note = "witness count " + std::to_string(d.witness.m()) +
                                 " above its trace sum " + std::to_string(sum);
        } else {
            rep.trace.note = "host is not r-partite under the given partition";
        }
    } else {
        rep.trace.note = "no partition given";
    }
    return rep;
}

BergeCertificate embed_from_shadow(const Hypergraph& core, const PatternGraph& f,
                                   const std::vector<int>& copy, int alpha) {
    if (alpha < 1) throw ParameterError("alpha must be at least 1");
    if (f.t() - 1 > alpha)
        throw ParameterError("pattern has " + std::to_string(f.t()) +
                             " vertices; needs |V| - 1 <= alpha = " + std::to_string(alpha));
    if (static_cast<int>(copy.size()) != f.t())
        throw ParameterError("copy must map every pattern vertex");
    std::vector<char> used(static_cast<size_t>(core.n()) + 1, 0);
    for (int w : copy) {
        if (w < 1 || w > core.n())
            throw ParameterError("copy image " + std::to_string(w) + " out of range");
        if (used[static_cast<size_t>(w)])
            throw ParameterError("copy is not injective at vertex " + std::to_string(w));
        used[static_cast<size_t>(w)] = 1;
    }
    VertexSet image{std::vector<int>(copy.begin(), copy.end())};

    std::vector<int> assign;
    for (auto [a, b] : f.edge_pairs()) {
        int x = copy[static_cast<size_t>(a) - 1];
        int y = copy[static_cast<size_t>(b) - 1];
        int best = -1, best_overlap = 0;
        for (int i = 0; i < core.m(); ++i) {
            const VertexSet& e = core.edge(i);
            if (!e.contains(x) || !e.contains(y)) continue;
            int overlap = e.intersection_size(image);
            if (best == -1 || overlap < best_overlap) {
                best = i;
                best_overlap = overlap;
            }
        }
        if (best == -1)
            throw ParameterError("pair {" + std::to_string(x) + "," + std::to_string(y) +
                                 "} is not in the 2-shadow of the core");
        if (best_overlap > 2) {
            // a minimal serving edge still meets the image beyond the pair:
            // in a genuine core every replacement of z keeps codegree >= alpha,
            // and with |V(F)|-1 <= alpha some replacement would leave the
            // image, beating minimality; so this set must break the floor
            const VertexSet& e = core.edge(best);
            int z = 0;
            for (int v : e.vertices())
                if (v != x && v != y && image.contains(v)) {
                    z = v;
                    break;
                }
            VertexSet s = e.without(z);
            int c = codegree(core, s);
            throw CorePropertyError("set " + s.str() + " has codegree " + std::to_string(c) +
                                        ", below alpha = " + std::to_string(alpha),
                                    s.vertices());
        }
        assign.push_back(best);
    }

    BergeCertificate cert;
    cert.mode = BergeMode::induced;
    cert.base = copy;
    cert.edges = std::move(assign);
    return cert;
}

ExtendedPattern extend_plus(const Hypergraph& core, const PatternGraph& f,
                            const BergeCertificate& cert, int x, int y, int alpha) {
    if (core.r() < 3) throw UniformityError("extension needs uniformity at least 3");
    if (f.t() > alpha)
        throw ParameterError("pattern has " + std::to_string(f.t()) +
                             " vertices; needs |V| <= alpha = " + std::to_string(alpha));
    if (cert.mode != BergeMode::induced || !verify_certificate(core, f, cert))
        throw ParameterError("certificate is not a valid induced certificate for the pattern");

    const auto& fedges = f.edge_pairs();
    int fe = -1;
    for (size_t j = 0; j < fedges.size(); ++j)
        if (fedges[j] == std::make_pair(std::min(x, y), std::max(x, y))) {
            fe = static_cast<int>(j);
            break;
        }
    if (fe < 0)
        throw ParameterError("{" + std::to_string(x) + "," + std::to_string(y) +
                             "} is not a pattern edge");

    const VertexSet& serving = core.edge(cert.edges[static_cast<size_t>(fe)]);
    // the certificate is induced, so every vertex of the serving edge other
    // than the two images lies outside the base; take the smallest
    int wx = cert.base[static_cast<size_t>(x) - 1];
    int wy = cert.base[static_cast<size_t>(y) - 1];
    int fresh = 0;
    for (int v : serving.vertices())
        if (v != wx && v != wy) {
            fresh = v;
            break;
        }

    ExtendedPattern out{f_plus(f, x, y), BergeCertificate{}};
    std::vector<int> copy = cert.base;
    copy.push_back(fresh);
    out.cert = embed_from_shadow(core, out.pattern, copy, alpha);
    return out;
}

}  // namespace berge
