#pragma once

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

// Minimal check runner: one [PASS]/[FAIL] line per check, summary at exit.
struct TestKit {
    int passed = 0;
    int failed = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) {
            ++passed;
            std::printf("[PASS] %s%s%s\n", name.c_str(), detail.empty() ? "" : " — ",
                        detail.c_str());
        } else {
            ++failed;
            std::printf("[FAIL] %s%s%s\n", name.c_str(), detail.empty() ? "" : " — ",
                        detail.c_str());
        }
    }

    void check_near(const std::string& name, double actual, double expected, double tol) {
        const double err = std::abs(actual - expected);
        char buf[160];
        std::snprintf(buf, sizeof(buf), "got %.17g, want %.17g (err %.3g, tol %.3g)", actual,
                      expected, err, tol);
        check(name, err <= tol, buf);
    }

    void check_below(const std::string& name, double value, double bound) {
        char buf[120];
        std::snprintf(buf, sizeof(buf), "measured %.3g, bound %.3g", value, bound);
        check(name, value < bound, buf);
    }

    void check_throws(const std::string& name, const std::function<void()>& fn) {
        bool threw = false;
        try {
            fn();
        } catch (const std::exception&) {
            threw = true;
        }
        check(name, threw, threw ? "rejected as required" : "no exception raised");
    }

    int summary(const char* suite) const {
        std::printf("%s: %d passed, %d failed\n", suite, passed, failed);
        return failed == 0 ? 0 : 1;
    }
};
