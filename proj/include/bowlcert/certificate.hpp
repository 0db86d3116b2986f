#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace bowlcert {

/// A machine-checkable verdict: a named inequality on a stated domain,
/// the method that established it, and the smallest certified slack.
struct Certificate {
    std::string name;
    std::string inequality;
    std::string domain;
    std::string method;  // interval-recursion | interval-bracketing | closed-form-tail | grid-oracle
    double margin = 0.0;
    bool pass = false;

    const char* verdict() const { return pass ? "pass" : "fail"; }
};

struct IdentityReport {
    std::string name;
    int samples = 0;
    double max_residual = 0.0;
    std::map<std::string, double> fitted_constants;
    bool pass = false;

    double tolerance = 0.0;   // residual gate used for the verdict
    std::uint64_t seed = 0;   // echoed in the aggregate config for reruns

    const char* verdict() const { return pass ? "pass" : "fail"; }
};

}  // namespace bowlcert
