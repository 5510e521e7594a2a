#include "qcv/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace qcv {

VerificationReport &VerificationReport::param(const std::string &key, const std::string &value) {
    params.emplace_back(key, value);
    return *this;
}

VerificationReport &VerificationReport::param(const std::string &key, long value) {
    return param(key, std::to_string(value));
}

VerificationReport &VerificationReport::param(const std::string &key, double value) {
    std::ostringstream os;
    os << std::setprecision(15) << value;
    return param(key, os.str());
}

void VerificationReport::fail(Mismatch m) {
    passed = false;
    if (!mismatch) mismatch = std::move(m);
}

void VerificationReport::fail(const std::string &location, const std::string &expected, const std::string &actual) {
    fail(Mismatch{location, expected, actual});
}

std::string to_text(const VerificationReport &r, const ReportFormat &fmt) {
    std::ostringstream os;
    os << r.status() << "  " << r.check << "  [" << r.eq_tag << "]";
    if (!r.params.empty()) {
        os << "  (";
        for (std::size_t k = 0; k < r.params.size(); ++k)
            os << (k ? ", " : "") << r.params[k].first << "=" << r.params[k].second;
        os << ")";
    }
    if (fmt.include_timing) os << "  " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms";
    os << "\n";
    if (r.mismatch) {
        os << "    first mismatch at " << r.mismatch->location << "\n";
        os << "      expected: " << r.mismatch->expected << "\n";
        os << "      actual:   " << r.mismatch->actual << "\n";
    }
    for (const auto &n : r.notes) os << "    " << n << "\n";
    return os.str();
}

std::string to_text(const std::vector<VerificationReport> &rs, const ReportFormat &fmt) {
    std::string s;
    for (const auto &r : rs) s += to_text(r, fmt);
    return s;
}

std::string to_json(const std::vector<VerificationReport> &rs, const ReportFormat &fmt) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &r : rs) {
        nlohmann::ordered_json j;
        j["check"] = r.check;
        j["eq_tag"] = r.eq_tag;
        nlohmann::ordered_json p = nlohmann::ordered_json::object();
        for (const auto &[k, v] : r.params) p[k] = v;
        j["params"] = p;
        j["status"] = r.status();
        if (r.mismatch)
            j["mismatch"] = {{"location", r.mismatch->location},
                             {"expected", r.mismatch->expected},
                             {"actual", r.mismatch->actual}};
        if (!r.notes.empty()) j["notes"] = r.notes;
        if (fmt.include_timing) j["elapsed_ms"] = r.elapsed_ms;
        arr.push_back(std::move(j));
    }
    return arr.dump(fmt.indent);
}

std::vector<VerificationReport> reports_from_json(const std::string &text) {
    auto arr = nlohmann::ordered_json::parse(text);
    std::vector<VerificationReport> rs;
    for (const auto &j : arr) {
        VerificationReport r;
        r.check = j.at("check").get<std::string>();
        r.eq_tag = j.at("eq_tag").get<std::string>();
        for (const auto &[k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
        r.passed = j.at("status").get<std::string>() == "PASS";
        if (j.contains("mismatch")) {
            const auto &m = j.at("mismatch");
            r.mismatch = Mismatch{m.at("location").get<std::string>(), m.at("expected").get<std::string>(),
                                  m.at("actual").get<std::string>()};
        }
        if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
        if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
        rs.push_back(std::move(r));
    }
    return rs;
}

std::vector<VerificationReport> merge_reports(std::vector<VerificationReport> rs) {
    std::stable_sort(rs.begin(), rs.end(),
                     [](const VerificationReport &a, const VerificationReport &b) { return a.check < b.check; });
    return rs;
}

bool all_passed(const std::vector<VerificationReport> &rs) {
    return std::all_of(rs.begin(), rs.end(), [](const VerificationReport &r) { return r.passed; });
}

} // namespace qcv
