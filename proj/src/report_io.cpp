#include "mixedmeans/report_io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace mixedmeans {

namespace {

using nlohmann::json;

json number_or_null(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string optional_field(std::optional<double> v) { return v ? format_number(*v) : std::string(); }

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_means_csv(std::ostream& os, std::span<const MeansRow> rows) {
  os << "r,phi_A,phi_L,mean_A,mean_L,err_A,err_L\n";
  for (const MeansRow& row : rows) {
    os << format_number(row.r) << ',' << format_number(row.phi_area) << ','
       << optional_field(row.phi_length) << ',' << format_number(row.mean_area) << ','
       << optional_field(row.mean_length) << ',' << format_number(row.err_area) << ','
       << optional_field(row.err_length) << '\n';
  }
}

void write_means_json(std::ostream& os, std::span<const MeansRow> rows) {
  json arr = json::array();
  for (const MeansRow& row : rows) {
    arr.push_back({{"r", row.r},
                   {"phi_A", row.phi_area},
                   {"phi_L", number_or_null(row.phi_length)},
                   {"mean_A", row.mean_area},
                   {"mean_L", number_or_null(row.mean_length)},
                   {"err_A", row.err_area},
                   {"err_L", number_or_null(row.err_length)}});
  }
  os << json{{"rows", arr}}.dump(2) << '\n';
}

void write_scan_csv(std::ostream& os, const ConvexityReport& report) {
  os << "x,indicator,certified_sign\n";
  for (const GridSample& s : report.grid) {
    os << format_number(s.x) << ',' << format_number(s.indicator) << ',' << s.certified_sign << '\n';
  }
  os << "# verdict: " << to_string(report.verdict) << '\n';
}

void write_scan_json(std::ostream& os, const ConvexityReport& report) {
  json grid = json::array();
  for (const GridSample& s : report.grid) {
    grid.push_back({{"x", s.x}, {"indicator", s.indicator}, {"certified_sign", s.certified_sign}});
  }
  os << json{{"grid", grid}, {"verdict", to_string(report.verdict)}}.dump(2) << '\n';
}

void write_reports_csv(std::ostream& os, std::span<const CheckReport> reports) {
  os << "check_id,status,witnesses,violated,notes\n";
  for (const CheckReport& r : reports) {
    int violated = 0;
    for (const Witness& w : r.witnesses) violated += w.violated() ? 1 : 0;
    os << csv_field(r.check_id) << ',' << to_string(r.status) << ',' << r.witnesses.size() << ','
       << violated << ',' << csv_field(r.notes) << '\n';
  }
}

void write_reports_json(std::ostream& os, std::span<const CheckReport> reports,
                        const std::string& command) {
  json arr = json::array();
  std::size_t failed = 0;
  for (const CheckReport& r : reports) {
    json ws = json::array();
    for (const Witness& w : r.witnesses) {
      ws.push_back({{"input", w.input},
                    {"expected", w.expected},
                    {"got", w.got},
                    {"tolerance", w.tolerance},
                    {"relation", to_string(w.relation)},
                    {"violated", w.violated()}});
    }
    if (r.failed()) ++failed;
    arr.push_back({{"check_id", r.check_id},
                   {"status", to_string(r.status)},
                   {"witnesses", ws},
                   {"notes", r.notes}});
  }
  const json doc{{"command", command},
                 {"total", reports.size()},
                 {"failed", failed},
                 {"reports", arr}};
  os << doc.dump(2) << '\n';
}

}  // namespace mixedmeans
