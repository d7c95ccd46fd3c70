#include "report.hpp"

#include <fstream>
#include <sstream>

#include "talbot/errors.hpp"

namespace talbot::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::ReportOnly: return "report-only";
  }
  return "report-only";
}

nlohmann::json ReportEnvelope::to_json() const {
  return {{"command", command},
          {"version", TALBOT_VERSION},
          {"parameters", parameters},
          {"results", results},
          {"status", to_string(status)}};
}

nlohmann::json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json matrix_json(const ComplexMatrix& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json pairs_json(const std::vector<IndexPair>& pairs) {
  auto out = nlohmann::json::array();
  for (const auto& p : pairs) out.push_back({p.i + 1, p.j + 1});
  return out;
}

std::string pair_string(const IndexPair& p) {
  return "{" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + "}";
}

std::string pairs_string(const std::vector<IndexPair>& pairs) {
  if (pairs.empty()) return "none";
  std::string out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) out += " ";
    out += pair_string(pairs[k]);
  }
  return out;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) os << ',';
    os << csv_field(fields[k]);
  }
  os << "\r\n";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open '" + path + "' for writing");
  f << contents;
  if (!f) throw InvalidArgument("failed writing '" + path + "'");
}

}  // namespace talbot::cli
