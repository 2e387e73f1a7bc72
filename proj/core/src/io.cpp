#include "bijective/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bijective {

using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
  return v;
}

Rational json_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("lengths must be integers or rational strings");
}

Json ratio_json(const Ratio& r) {
  if (r.infinite) return "inf";
  return to_string(r.value);
}

Json optional_json(const std::optional<Rational>& v) { return v ? Json(to_string(*v)) : Json(nullptr); }

Json info_json(const ProfileInfo& info) {
  Json j;
  j["algorithm"] = info.algorithm;
  j["metric"] = info.metric;
  j["c0"] = info.c0;
  j["n"] = info.n;
  j["tie"] = info.tie;
  j["approximate"] = info.approximate;
  if (info.approximate) j["seed"] = info.seed;
  return j;
}

}  // namespace

MetricDescription parse_metric_flag(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("metric must look like kind:m[:delta], got '" + text + "'");
  const MetricKind kind = parse_metric_kind(text.substr(0, colon));
  const std::string rest = text.substr(colon + 1);
  switch (kind) {
    case MetricKind::path:
    case MetricKind::cycle: {
      const auto parts = split(rest, ':');
      if (parts.empty() || parts.size() > 2) throw std::invalid_argument("metric must look like kind:m[:delta]");
      const int m = parse_int(parts[0], "point count");
      const Rational delta = parts.size() == 2 ? parse_rational(parts[1]) : Rational(1);
      return kind == MetricKind::path ? MetricDescription::path(m, delta) : MetricDescription::cycle(m, delta);
    }
    case MetricKind::spider: {
      std::vector<RaySpec> rays;
      for (const std::string& ray : split(rest, ',')) {
        const auto x = ray.find('x');
        if (x == std::string::npos) throw std::invalid_argument("spider rays look like <points>x<edge>, got '" + ray + "'");
        rays.push_back({parse_int(ray.substr(0, x), "ray size"), parse_rational(ray.substr(x + 1))});
      }
      return MetricDescription::spider(std::move(rays));
    }
    case MetricKind::weighted_star: {
      std::vector<Rational> weights;
      for (const std::string& w : split(rest, ',')) weights.push_back(parse_rational(w));
      return MetricDescription::weighted_star(weights);
    }
  }
  throw std::invalid_argument("unknown metric '" + text + "'");
}

MetricDescription parse_metric_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("metric JSON: ") + e.what());
  }
  try {
    const MetricKind kind = parse_metric_kind(j.at("kind").get<std::string>());
    switch (kind) {
      case MetricKind::path:
      case MetricKind::cycle: {
        const int m = j.at("m").get<int>();
        const Rational delta = j.contains("delta") ? json_rational(j["delta"]) : Rational(1);
        return kind == MetricKind::path ? MetricDescription::path(m, delta) : MetricDescription::cycle(m, delta);
      }
      case MetricKind::spider: {
        std::vector<RaySpec> rays;
        for (const Json& r : j.at("rays")) rays.push_back({r.at(0).get<int>(), json_rational(r.at(1))});
        return MetricDescription::spider(std::move(rays));
      }
      case MetricKind::weighted_star: {
        std::vector<Rational> weights;
        for (const Json& w : j.at("weights")) weights.push_back(json_rational(w));
        return MetricDescription::weighted_star(weights);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("metric JSON: ") + e.what());
  }
  throw std::invalid_argument("metric JSON: unknown kind");
}

std::string metric_to_json(const MetricDescription& d) {
  Json j;
  j["kind"] = to_string(d.kind);
  switch (d.kind) {
    case MetricKind::path:
    case MetricKind::cycle:
      j["m"] = d.m;
      j["delta"] = to_string(d.delta);
      break;
    case MetricKind::spider:
      j["rays"] = Json::array();
      for (const RaySpec& r : d.rays) j["rays"].push_back(Json::array({r.points, to_string(r.edge_length)}));
      break;
    case MetricKind::weighted_star:
      j["weights"] = Json::array();
      for (const RaySpec& r : d.rays) j["weights"].push_back(to_string(r.edge_length));
      break;
  }
  return j.dump();
}

void write_profile_csv(std::ostream& out, const CostProfile& profile) {
  out << "rank,cost_num,cost_den\n";
  std::uint64_t rank = 0;
  for (const auto& run : profile.runs()) {
    const Rational c = ticks_to_length(run.cost, profile.unit());
    const std::string num = numerator(c).str();
    const std::string den = denominator(c).str();
    for (std::uint64_t i = 0; i < run.count; ++i) out << rank++ << ',' << num << ',' << den << '\n';
  }
}

CostProfile read_profile_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "rank,cost_num,cost_den") {
    throw std::invalid_argument("profile CSV must start with 'rank,cost_num,cost_den'");
  }
  std::vector<Rational> costs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 3) throw std::invalid_argument("profile CSV row needs 3 fields: '" + line + "'");
    const BigInt num(f[1]);
    const BigInt den(f[2]);
    if (den <= 0) throw std::invalid_argument("profile CSV denominator must be positive");
    costs.emplace_back(num, den);
  }
  Rational unit(1);
  bool any = false;
  for (const Rational& c : costs) {
    if (c == 0) continue;
    unit = any ? common_unit(unit, abs(c)) : Rational(abs(c));
    any = true;
  }
  std::vector<Ticks> ticks;
  ticks.reserve(costs.size());
  for (const Rational& c : costs) {
    const Rational t = c / unit;
    ticks.push_back(static_cast<Ticks>(numerator(t)));
  }
  return CostProfile::from_costs(unit, std::move(ticks));
}

void write_trace_csv_header(std::ostream& out) { out << "seq_id,step,request,server,cost\n"; }

void write_trace_csv(std::ostream& out, std::uint64_t seq_id, const Trace& trace) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    out << seq_id << ',' << i + 1 << ',' << s.request << ',' << s.from << ','
        << to_string(ticks_to_length(s.cost, trace.unit)) << '\n';
  }
}

void write_point_map_csv(std::ostream& out, const PointOrdering& o1, const PointOrdering& o2) {
  if (o1.points.size() != o2.points.size()) throw std::invalid_argument("orderings differ in length");
  out << "rank,point_C1,dmin_C1,point_C2,dmin_C2\n";
  for (std::size_t i = 0; i < o1.points.size(); ++i) {
    out << i << ',' << o1.points[i] << ',' << to_string(o1.dval(i)) << ',' << o2.points[i] << ','
        << to_string(o2.dval(i)) << '\n';
  }
}

void write_sequence_csv(std::ostream& out, std::uint64_t seq_id, std::span<const PointId> sequence, bool header) {
  if (header) out << "seq_id,step,request\n";
  for (std::size_t i = 0; i < sequence.size(); ++i) out << seq_id << ',' << i + 1 << ',' << sequence[i] << '\n';
}

std::string comparison_json(const ComparisonReport& report, const ProfileInfo& a, const ProfileInfo& b) {
  Json j;
  j["a"] = info_json(a);
  j["b"] = info_json(b);
  j["size"] = report.size;
  j["strict_rho"] = ratio_json(report.strict_rho);
  j["witness_rank"] = report.witness_index;
  j["asymptotic_curve"] = Json::array();
  for (const CurvePoint& p : report.asymptotic_curve) {
    j["asymptotic_curve"].push_back(Json{{"rho", to_string(p.rho)}, {"c", to_string(p.c)}});
  }
  j["dominance"] = to_string(report.dominance);
  j["maxmax"] = optional_json(report.maxmax);
  j["average"] = optional_json(report.average);
  return j.dump(2) + "\n";
}

std::string verify_json(const std::string& suite, const std::vector<VerifyRow>& rows) {
  Json j;
  j["suite"] = suite;
  j["pass"] = all_pass(rows);
  j["rows"] = Json::array();
  for (const VerifyRow& r : rows) {
    j["rows"].push_back(Json{{"theorem", r.theorem},
                             {"instance", r.instance},
                             {"bound", r.bound},
                             {"measured", r.measured},
                             {"verdict", r.pass ? "pass" : "fail"}});
  }
  return j.dump(2) + "\n";
}

std::string error_json(const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  return j.dump() + "\n";
}

}  // namespace bijective
