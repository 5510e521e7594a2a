#include "printers.hpp"

#include "qcv/parallel.hpp"
#include "qcv/verify.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace qcv;

namespace {

std::vector<CheckFn> small_checks() {
    return {
        [] { return verify_defining_equation(1, fundamental_rep(2)); },
        [] { return verify_mutation(symmetric_rep_sl2(2)); },
        [] { return verify_apow(3); },
        [] { return check_qexp_factorization(5); },
        [] { return verify_mv_fg_equivalence(2, fundamental_rep(3)); },
    };
}

} // namespace

TEST(Report, JsonRoundTrip) {
    VerificationReport a;
    a.check = "example";
    a.eq_tag = "example-identity";
    a.param("n", 3L).param("rep", "sym:2").param("tol", 1e-9);
    a.fail("entry (1,2)", "v^2", "1");
    a.fail("entry (2,2)", "0", "1");
    a.notes.push_back("first note");
    VerificationReport b;
    b.check = "other";
    const auto back = reports_from_json(to_json({a, b}));
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0].check, "example");
    EXPECT_FALSE(back[0].passed);
    ASSERT_TRUE(back[0].mismatch.has_value());
    EXPECT_EQ(back[0].mismatch->location, "entry (1,2)");
    EXPECT_EQ(back[0].params, a.params);
    EXPECT_EQ(back[0].notes, a.notes);
    EXPECT_TRUE(back[1].passed);
    EXPECT_FALSE(all_passed(back));
}

TEST(Report, OutputIsDeterministicWithoutTiming) {
    ReportFormat fmt;
    fmt.include_timing = false;
    const auto first = to_json(run_checks_serial(small_checks()), fmt);
    const auto second = to_json(run_checks_serial(small_checks()), fmt);
    EXPECT_EQ(first, second);
    EXPECT_EQ(first.find("elapsed"), std::string::npos);
}

TEST(Parallel, SameReportsAsSerial) {
    ReportFormat fmt;
    fmt.include_timing = false;
    const auto serial = run_checks_serial(small_checks());
    for (int threads : {1, 2, 4}) EXPECT_EQ(to_json(run_checks(small_checks(), threads), fmt), to_json(serial, fmt));
    EXPECT_TRUE(all_passed(serial));
}

TEST(Parallel, ExceptionsPropagate) {
    std::vector<CheckFn> checks = small_checks();
    checks.push_back([]() -> VerificationReport { throw std::runtime_error("boom"); });
    EXPECT_THROW(run_checks(checks, 2), std::runtime_error);
}

TEST(Parallel, ThreadCountFromEnvironment) {
    ::setenv("QCV_THREADS", "3", 1);
    EXPECT_EQ(configured_threads(), 3);
    ::setenv("QCV_THREADS", "zero", 1);
    EXPECT_GE(configured_threads(), 1);
    ::unsetenv("QCV_THREADS");
    EXPECT_GE(configured_threads(), 1);
}
