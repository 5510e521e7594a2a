#include "qcv/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <string>

#include <omp.h>

namespace qcv {

int configured_threads() {
    if (const char *s = std::getenv("QCV_THREADS")) {
        try {
            const int n = std::stoi(s);
            if (n > 0) return n;
        } catch (const std::exception &) {
        }
    }
    return omp_get_max_threads();
}

int apply_thread_limit() {
    const int n = configured_threads();
    omp_set_num_threads(n);
    return n;
}

std::vector<VerificationReport> run_checks(const std::vector<CheckFn> &checks, int threads) {
    std::vector<VerificationReport> out(checks.size());
    std::exception_ptr err;
    const int n = static_cast<int>(checks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : 1)
    for (int i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = checks[static_cast<std::size_t>(i)]();
        } catch (...) {
#pragma omp critical(qcv_run_checks_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return merge_reports(std::move(out));
}

std::vector<VerificationReport> run_checks_serial(const std::vector<CheckFn> &checks) {
    std::vector<VerificationReport> out;
    out.reserve(checks.size());
    for (const auto &c : checks) out.push_back(c());
    return merge_reports(std::move(out));
}

} // namespace qcv
