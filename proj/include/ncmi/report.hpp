#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncmi/dual.hpp"

namespace ncmi {

struct ReportRow {
    int k = 0;
    cplx value;
    cplx eps;
    std::optional<double> std_error;
    std::optional<cplx> prediction;
    std::optional<double> gap;
};

/// Run record serialized deterministically: fixed key order, every float
/// rendered with 17 significant digits so values survive a parse/format
/// round trip.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;  // key -> rendered JSON
    std::vector<ReportRow> rows;
    bool pass = true;
};

std::string json_number(double x);
std::string json_complex(cplx z);
std::string json_string(const std::string& s);
std::string json_int(long long v);

std::string to_json(const RunReport& r);
std::string to_csv(const RunReport& r);

}  // namespace ncmi
