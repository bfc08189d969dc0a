#pragma once

#include "balword/cf.hpp"
#include "balword/dfao.hpp"
#include "balword/numeric.hpp"
#include "balword/repetitions.hpp"

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace balword::cli {

inline constexpr std::string_view kVersion = "1.0.0";

enum ExitCode : int { exit_pass = 0, exit_failure = 1, exit_usage = 2, exit_exhausted = 3 };

struct RunManifest {
    std::string command;
    nlohmann::json params;
    std::string version{kVersion};
    double elapsed_ms = 0;
    nlohmann::json summary;
    friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

void to_json(nlohmann::json& j, const RunManifest& m);
void from_json(const nlohmann::json& j, RunManifest& m);

// Closed-form target for the critical exponent of x_k: 2 + sqrt(2)/2, 1 + phi/2, (k-2)/(k-3).
QuadraticNumber claim_target(unsigned k);
// Lower end of the closeness window: 27/10, 9/5, target - 1/50.
QuadraticNumber claim_window_floor(unsigned k);

struct ClaimOptions {
    std::size_t length = 100000;
    std::size_t p_max = 1000;
    std::size_t balance_window = 200;
    // accept estimate == target (the strict comparison is the default)
    bool inclusive = false;
    unsigned threads = 1;
};

struct ClaimCheck {
    std::string name;
    bool passed;
    std::string detail;
    friend bool operator==(const ClaimCheck&, const ClaimCheck&) = default;
};

struct ClaimReport {
    unsigned k = 0;
    std::size_t length = 0;
    std::size_t p_max = 0;
    CriticalExponent estimate;
    QuadraticNumber target;
    QuadraticNumber window_floor;
    std::vector<ClaimCheck> checks;

    bool passed() const;
    friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

void to_json(nlohmann::json& j, const ClaimCheck& c);
void from_json(const nlohmann::json& j, ClaimCheck& c);
void to_json(nlohmann::json& j, const ClaimReport& r);
void from_json(const nlohmann::json& j, ClaimReport& r);

// Balance, estimate-versus-target and (k = 3, 4) closed-form period checks for x_k.
// Throws UnsupportedK outside [3, 10].
ClaimReport verify_claims(unsigned k, const ClaimOptions& options);
// Throws ClaimFailed naming the first failing check.
void require_pass(const ClaimReport& report);

// Entry point shared by the executable and the tests; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace balword::cli
