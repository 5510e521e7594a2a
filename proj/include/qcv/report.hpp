#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcv {

struct Mismatch {
    std::string location;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string check;
    // Name of the identity being checked, e.g. "coproduct-equals-tensor-square".
    std::string eq_tag;
    // Insertion-ordered so serialization is stable.
    std::vector<std::pair<std::string, std::string>> params;
    bool passed = true;
    std::optional<Mismatch> mismatch;
    std::vector<std::string> notes;
    double elapsed_ms = 0;

    const char *status() const { return passed ? "PASS" : "FAIL"; }
    VerificationReport &param(const std::string &key, const std::string &value);
    VerificationReport &param(const std::string &key, long value);
    VerificationReport &param(const std::string &key, double value);
    // Records the first mismatch only; later calls keep the first one.
    void fail(Mismatch m);
    void fail(const std::string &location, const std::string &expected, const std::string &actual);
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct ReportFormat {
    // Timing is the only nondeterministic field; leaving it out makes
    // repeated runs byte-identical.
    bool include_timing = true;
    int indent = 2;
};

std::string to_text(const VerificationReport &r, const ReportFormat &fmt = {});
std::string to_text(const std::vector<VerificationReport> &rs, const ReportFormat &fmt = {});
std::string to_json(const std::vector<VerificationReport> &rs, const ReportFormat &fmt = {});
std::vector<VerificationReport> reports_from_json(const std::string &text);

// Stable sort by check name, so concurrently produced reports merge in a
// fixed order.
std::vector<VerificationReport> merge_reports(std::vector<VerificationReport> rs);

bool all_passed(const std::vector<VerificationReport> &rs);

} // namespace qcv
