#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "talbot/chambers.hpp"
#include "talbot/hermrep.hpp"

namespace talbot::cli {

enum class Status { Pass, Fail, ReportOnly };

std::string to_string(Status s);

/// Common wrapper for every JSON report.
struct ReportEnvelope {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  Status status = Status::ReportOnly;

  nlohmann::json to_json() const;
};

nlohmann::json complex_json(std::complex<double> z);
nlohmann::json matrix_json(const ComplexMatrix& m);
nlohmann::json pairs_json(const std::vector<IndexPair>& pairs);  // 1-based

/// "{1,2}" style, 1-based.
std::string pair_string(const IndexPair& p);
std::string pairs_string(const std::vector<IndexPair>& pairs);

/// RFC 4180 field quoting: fields holding a comma, quote, CR or LF are
/// wrapped in double quotes with embedded quotes doubled.
std::string csv_field(const std::string& field);
void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

void write_file(const std::string& path, const std::string& contents);

}  // namespace talbot::cli
