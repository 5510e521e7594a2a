#pragma once

#include "qcv/report.hpp"

#include <functional>
#include <vector>

namespace qcv {

// Thread count from QCV_THREADS when it holds a positive integer, otherwise
// the OpenMP default.
int configured_threads();

// Applies configured_threads() to the OpenMP runtime and returns it.
int apply_thread_limit();

using CheckFn = std::function<VerificationReport()>;

// Runs the checks on up to `threads` threads (nested kernels then run
// serially) and returns the reports merged by check name. The first exception
// thrown by a check is rethrown after all checks finish.
std::vector<VerificationReport> run_checks(const std::vector<CheckFn> &checks, int threads);

// One check after another on the calling thread; same merge.
std::vector<VerificationReport> run_checks_serial(const std::vector<CheckFn> &checks);

} // namespace qcv
