#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "berge/core_decomp.hpp"
#include "berge/detect.hpp"
#include "berge/gt_class.hpp"
#include "berge/hypergraph.hpp"
#include "berge/search.hpp"

namespace berge {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "berge-report/1";

// .hg format: first content line "r n m", then m lines of r 1-based vertex
// ids; '#' lines are comments, blank lines ignored. Edges are canonicalized
// on input; duplicates are rejected.
Hypergraph parse_hypergraph(const std::string& text);
std::string emit_hypergraph(const Hypergraph& h);

// partition format: "k n" header, then n part ids (vertex 1..n in order).
Partition parse_partition(const std::string& text);

json config_json(const Config& cfg);
json hypergraph_json(const Hypergraph& h);
json certificate_json(const BergeCertificate& c, const Hypergraph& host);
BergeCertificate certificate_from_json(const json& j, const Hypergraph& host);

json report_envelope(const std::string& kind, const Config& cfg);
json detect_report(const Hypergraph& host, const PatternGraph& f, BergeMode mode,
                   const std::optional<BergeCertificate>& cert, bool pattern_stripped,
                   const Config& cfg);
json core_report(const Hypergraph& host, const CoreDecomposition& d, const CoreReport& checks,
                 const Config& cfg);
json gt_list_report(int t, const std::vector<GTMember>& members, const Config& cfg);
json gt_member_report(const PatternGraph& g, const std::optional<GTWitness>& w,
                      const Config& cfg);
json search_report(const SearchResult& res, const PatternGraph& f, BergeMode mode,
                   const Config& cfg, bool include_timing);
json chain_report(const BoundReport& rep, const PatternGraph& f, const Config& cfg);

// readers used by the round-trip tests
Rational rational_from_string(const std::string& s);
std::vector<BoundEntry> chain_entries_from_json(const json& j);

namespace cli {
// Full command dispatch; returns the process exit status (0 ok, 1 negative
// verdict, 2 usage or input error). args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
}  // namespace cli

}  // namespace berge
