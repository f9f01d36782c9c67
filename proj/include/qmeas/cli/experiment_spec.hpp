// Copyright 2026 The qmeas Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * JSON experiment configuration.
 *
 * Angles are given in degrees and kept in degrees here; they are converted to
 * radians once, when the physical objects are built. Example configs:
 *
 *     {"kind": "whichway", "gamma": 0.5, "theta_deg": 0, "theta_prime_deg": 45, "state": "H"}
 *
 *     {"kind": "bell", "state": "singlet",
 *      "arm1": {"gamma": 0.5, "theta_deg": 0, "theta_prime_deg": 45},
 *      "arm2": {"gamma": 0.5, "theta_deg": 22.5, "theta_prime_deg": 67.5}}
 *
 *     {"kind": "aspect", "state": "singlet",
 *      "arm1": {"theta_deg": 0, "theta_prime_deg": 45},
 *      "arm2": {"theta_deg": 22.5, "theta_prime_deg": 67.5}}
 *
 *     {"kind": "sweep-martens", "gamma_grid": {"start": 0, "stop": 1, "count": 101},
 *      "delta_deg": 45}
 *
 *     {"kind": "sample", "target": "whichway", "gamma": 0.5, "theta_deg": 0,
 *      "theta_prime_deg": 45, "state": "H", "n_events": 1000000, "seed": 42,
 *      "output": "events.log"}
 *
 * A state is a name ("H", "V", "diag", "singlet", "HH", "HV", "VH", "VV",
 * "mixed") or a list of amplitudes, each a number or a [re, im] pair.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qmeas::cli {

enum class ExperimentKind { WhichWay, Bell, Aspect, MartensSweep, Sample };

std::string to_string(ExperimentKind kind);
ExperimentKind parse_kind(const std::string &text);

struct ArmSpec {
    std::optional<double> gamma;
    double theta_deg = 0.0;
    double theta_prime_deg = 0.0;
    friend bool operator==(const ArmSpec &, const ArmSpec &) = default;
};

struct StateSpec {
    std::string name; ///< empty when amplitudes are given
    std::vector<std::complex<double>> amplitudes;
    friend bool operator==(const StateSpec &, const StateSpec &) = default;
};

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::WhichWay;
    ArmSpec arm;  ///< whichway, and sample with target "whichway"
    ArmSpec arm1; ///< bell, aspect, and sample with target "bell"
    ArmSpec arm2;
    StateSpec state;
    std::vector<double> gammas; ///< sweep-martens
    double sweep_theta_deg = 0.0;
    double delta_deg = 0.0;
    std::string target; ///< sample: "whichway" or "bell"
    std::optional<std::uint64_t> n_events; ///< sample; required before running
    std::optional<std::uint64_t> seed;
    std::string output;
    std::string format = "csv";

    friend bool operator==(const ExperimentSpec &, const ExperimentSpec &) = default;
};

/// Parses and validates a config; throws ConfigError naming the field path.
ExperimentSpec spec_from_json(const nlohmann::json &j);

/// Canonical JSON for `spec`; spec_from_json(spec_to_json(s)) == s.
nlohmann::json spec_to_json(const ExperimentSpec &spec);

ExperimentSpec load_spec(const std::string &path);

/// Completeness and range checks; called by spec_from_json and again after
/// command-line overrides.
void validate_spec(const ExperimentSpec &spec);

/// FNV-1a 64 of the canonical JSON with "output" and "format" removed,
/// formatted as "fnv1a64:<16 hex digits>".
std::string config_hash(const ExperimentSpec &spec);

} // namespace qmeas::cli
