#include "rkit/report_io.hpp"

#include <cstdio>

namespace rkit {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i];
  }
  return s;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, std::span<const VerificationReport> reports) {
  out << kCsvHeader << '\n';
  for (const auto& r : reports) {
    out << to_string(r.id) << ',' << format_number(r.domain_lo) << ','
        << format_number(r.domain_hi) << ',' << csv_field(join(r.counterexamples, ';')) << ','
        << format_number(r.min_margin) << ',' << format_number(r.elapsed_s) << '\n';
  }
}

nlohmann::json to_json(const VerificationReport& r) {
  const auto& c = inequality_case(r.id);
  nlohmann::json probes = nlohmann::json::array();
  for (const auto& p : r.probes) {
    probes.push_back({{"at", p.at}, {"holds", p.holds}, {"margin", p.margin}, {"note", p.note}});
  }
  return {
      {"case", std::string(to_string(r.id))},
      {"statement", std::string(c.statement)},
      {"variable", std::string(c.variable)},
      {"threshold", c.threshold},
      {"domain_lo", r.domain_lo},
      {"domain_hi", r.domain_hi},
      {"grid_step", r.grid_step},
      {"strict", r.strict},
      {"sampled", r.sampled},
      {"points_checked", r.points_checked},
      {"counterexamples", r.counterexamples},
      {"counterexample_count", r.counterexample_count},
      {"min_margin", r.min_margin},
      {"elapsed_s", r.elapsed_s},
      {"probes", probes},
      {"notes", r.notes},
  };
}

nlohmann::json to_json(std::span<const VerificationReport> reports) {
  nlohmann::json all = nlohmann::json::array();
  for (const auto& r : reports) all.push_back(to_json(r));
  return all;
}

nlohmann::json to_json(const GrowthReport& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : g.rows) {
    rows.push_back(
        {{"n", row.n}, {"threshold", row.threshold}, {"certified", row.certified}, {"f", row.f}});
  }
  return {{"c", std::to_string(g.c_num) + "/" + std::to_string(g.c_den)},
          {"x_max", g.x_max},
          {"rows", rows},
          {"check", to_json(g.check)}};
}

nlohmann::json to_json(const RatioTrendReport& t) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : t.blocks) {
    blocks.push_back({{"n_lo", b.n_lo}, {"n_hi", b.n_hi}, {"mean_abs_deviation",
                                                            b.mean_abs_deviation}});
  }
  return {{"blocks", blocks}, {"decreasing", t.decreasing},
          {"decreasing_from", t.decreasing_from}};
}

}  // namespace rkit
