#pragma once

// Text formats: metric descriptions (flag and JSON), profile / trace /
// point-map / sequence CSV, comparison and verification reports, error
// objects. Every writer is deterministic.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bijective/analysis.hpp"
#include "bijective/ordered_bijection.hpp"
#include "bijective/verify.hpp"

namespace bijective {

/// "path:6", "cycle:6:1/2", "spider:3x1,3x1,3x1", "weighted_star:1,1/2,2".
/// Inverse of MetricSpace::id(). Throws std::invalid_argument.
MetricDescription parse_metric_flag(const std::string& text);

/// {"kind":"cycle","m":6,"delta":"1"}, {"kind":"spider","rays":[[3,"1"]]},
/// {"kind":"weighted_star","weights":["1","2"]}. Throws std::invalid_argument.
MetricDescription parse_metric_json(const std::string& text);
std::string metric_to_json(const MetricDescription& description);

/// Header "rank,cost_num,cost_den", one row per sequence in ascending cost.
void write_profile_csv(std::ostream& out, const CostProfile& profile);
/// Reads the format above; the unit becomes the largest length dividing every cost.
CostProfile read_profile_csv(std::istream& in);

/// Header "seq_id,step,request,server,cost"; server is the origin of the
/// server that ended on the request (-1 if none), cost an exact rational.
void write_trace_csv_header(std::ostream& out);
void write_trace_csv(std::ostream& out, std::uint64_t seq_id, const Trace& trace);

/// Header "rank,point_C1,dmin_C1,point_C2,dmin_C2".
void write_point_map_csv(std::ostream& out, const PointOrdering& o1, const PointOrdering& o2);

/// Header "seq_id,step,request".
void write_sequence_csv(std::ostream& out, std::uint64_t seq_id, std::span<const PointId> sequence, bool header);

std::string comparison_json(const ComparisonReport& report, const ProfileInfo& a, const ProfileInfo& b);
std::string verify_json(const std::string& suite, const std::vector<VerifyRow>& rows);
std::string error_json(const std::string& kind, const std::string& message);

}  // namespace bijective
