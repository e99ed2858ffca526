#include "ncmi/report.hpp"

#include <cmath>
#include <cstdio>

namespace ncmi {

std::string json_number(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string json_complex(cplx z) {
    return "[" + json_number(z.real()) + "," + json_number(z.imag()) + "]";
}

std::string json_int(long long v) { return std::to_string(v); }

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

std::string to_json(const RunReport& r) {
    std::string out = "{\"command\":" + json_string(r.command) + ",\"params\":{";
    bool first = true;
    for (const auto& [key, rendered] : r.params) {
        if (!first) out += ',';
        first = false;
        out += json_string(key) + ":" + rendered;
    }
    out += "},\"rows\":[";
    first = true;
    for (const ReportRow& row : r.rows) {
        if (!first) out += ',';
        first = false;
        out += "{\"k\":" + json_int(row.k);
        out += ",\"value\":" + json_complex(row.value);
        out += ",\"eps\":" + json_complex(row.eps);
        if (row.std_error) out += ",\"std_error\":" + json_number(*row.std_error);
        if (row.prediction) out += ",\"prediction\":" + json_complex(*row.prediction);
        if (row.gap) out += ",\"gap\":" + json_number(*row.gap);
        out += '}';
    }
    out += "],\"pass\":";
    out += r.pass ? "true" : "false";
    out += '}';
    return out;
}

std::string to_csv(const RunReport& r) {
    std::string out = "k,value_re,value_im,eps_re,eps_im,std_error,prediction_re,prediction_im,gap";
    for (const ReportRow& row : r.rows) {
        out += '\n';
        out += json_int(row.k);
        out += ',' + json_number(row.value.real()) + ',' + json_number(row.value.imag());
        out += ',' + json_number(row.eps.real()) + ',' + json_number(row.eps.imag());
        out += ',';
        if (row.std_error) out += json_number(*row.std_error);
        out += ',';
        if (row.prediction) out += json_number(row.prediction->real());
        out += ',';
        if (row.prediction) out += json_number(row.prediction->imag());
        out += ',';
        if (row.gap) out += json_number(*row.gap);
    }
    return out;
}

}  // namespace ncmi
