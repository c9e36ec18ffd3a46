#pragma once

#include "klsw/matrix.hpp"
#include "klsw/project.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klsw {
namespace suites {

/// Conjecture-style normalizer: D(M) is the element of Q(u), unique up to
/// sign, with D(M) M having bar-invariant entries in A = Z[u,u^-1] of
/// collective content gcd 1.
struct GcdNormalizer {
    RatFn normalizer;   // the sign choice with positive leading coefficient
    QMatrix normalized; // normalizer * M
};
GcdNormalizer normalize_gcd(const QMatrix& m);

enum class CheckStatus { Pass, Fail, Reported };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;  // value or counterexample description
};

struct VerificationReport {
    std::string suite;
    std::map<std::string, std::string> params;
    std::vector<CheckResult> checks;
    double seconds = 0;
    bool hard_failure() const {
        for (auto& c : checks)
            if (c.status == CheckStatus::Fail) return true;
        return false;
    }
};

/// Named suites: theorem suites hard-fail on violation, conjecture suites
/// only report. Bounds follow the defaults unless overridden by max_r.
VerificationReport run_suite(const std::string& name, int max_r);
std::vector<std::string> suite_names();

/// Conventions adopted where the source material leaves a choice; included
/// in machine-readable reports.
std::map<std::string, std::string> conventions();

std::string report_to_json(const VerificationReport& rep, bool with_timestamp);
std::string report_to_text(const VerificationReport& rep);

}  // namespace suites
}  // namespace klsw
