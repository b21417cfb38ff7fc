// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace rok {

// Structured record of one checked inequality or identity.  Pass/fail checks
// assert observed ratios against a claimed band (with 1e-9 slack); checks
// whose constants the source never quantifies are marked report_only and
// their `pass` reflects a stability assertion instead.
struct VerificationReport {
    std::string check;
    std::string params;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    double band_low = 0.0;
    double band_high = 0.0;
    double max_deviation = 0.0;
    bool report_only = false;
    bool pass = false;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
    std::string inputs_digest;
    std::string note;

    static constexpr double kBandSlack = 1e-9;
    bool within_band(double r) const {
        return r >= band_low - kBandSlack && r <= band_high + kBandSlack;
    }
};

// FNV-1a over a string rendering of the inputs; stable across runs
std::string digest(const std::string& data);

}  // namespace rok
