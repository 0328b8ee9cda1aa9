#include <matchlab/report.hpp>

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace matchlab {

namespace {

using nlohmann::json;

std::string iso_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

json record_to_json(const CheckRecord& c) {
  return json{{"name", c.name},
              {"params", c.params},
              {"expected", c.expected},
              {"got", c.got},
              {"pass", c.pass}};
}

json report_to_json(const Report& r, bool with_timing) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(record_to_json(c));
  json out{{"suite", r.suite},
           {"params", r.params},
           {"seed", r.seed},
           {"tool_version", r.tool_version},
           {"all_pass", r.all_pass()},
           {"checks", checks}};
  if (with_timing) {
    out["timestamp"] = iso_now();
    out["wall_seconds"] = r.wall_seconds;
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_rows(const Report& r, std::ostringstream& out) {
  for (const auto& c : r.checks) {
    std::string params;
    for (const auto& [k, v] : c.params) {
      if (!params.empty()) params += ";";
      params += k + "=" + v;
    }
    out << csv_quote(r.suite) << "," << csv_quote(c.name) << ","
        << csv_quote(params) << "," << csv_quote(c.expected) << ","
        << csv_quote(c.got) << "," << (c.pass ? "1" : "0") << "\n";
  }
}

}  // namespace

std::string to_json_string(const Report& r, bool with_timing) {
  return report_to_json(r, with_timing).dump(2);
}

std::string to_json_string(const std::vector<Report>& rs, bool with_timing) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r, with_timing));
  return arr.dump(2);
}

static const char* kCsvHeader = "suite,check,params,expected,got,pass\n";

std::string to_csv_string(const Report& r) {
  std::ostringstream out;
  out << kCsvHeader;
  csv_rows(r, out);
  return out.str();
}

std::string to_csv_string(const std::vector<Report>& rs) {
  std::ostringstream out;
  out << kCsvHeader;
  for (const auto& r : rs) csv_rows(r, out);
  return out.str();
}

}  // namespace matchlab
