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
 * Seeded Monte Carlo realization of measurement statistics. Each event is
 * one outcome label drawn from the Born distribution by inverse-CDF lookup
 * over the fixed effect order, using std::mt19937_64 with 53-bit uniform
 * doubles. Identical (povm, state, n, seed) reproduce identical logs on any
 * conforming standard library.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmeas/bell.hpp"
#include "qmeas/measurement.hpp"

namespace qmeas {

inline constexpr const char *kGeneratorName = "mt19937_64";

struct EventLog {
    std::string config_descriptor;
    std::string generator = kGeneratorName;
    std::uint64_t seed = 0;
    std::vector<std::string> label_set;
    std::vector<std::uint32_t> events; ///< indices into label_set

    [[nodiscard]] std::size_t count() const noexcept { return events.size(); }
    [[nodiscard]] const std::string &event(std::size_t i) const { return label_set[events[i]]; }
};

/// Uniform double in [0, 1) from the top 53 bits of one generator output.
double uniform_from_bits(std::uint64_t bits) noexcept;

/// n i.i.d. draws from `dist`; zero-probability outcomes are never drawn.
EventLog sample_distribution(const OutcomeDistribution<double> &dist, std::uint64_t n,
                             std::uint64_t seed, std::string config_descriptor = {});

/// n i.i.d. measurement outcomes of `povm` on `state`.
EventLog sample(const Povm<double> &povm, const StateDescriptor<double> &state, std::uint64_t n,
                std::uint64_t seed, std::string config_descriptor = {});

/// Relative frequencies over the log's label set. An empty log yields all zeros.
OutcomeDistribution<double> empirical_distribution(const EventLog &log);

/// CHSH value of a single quadrivariate log. Every event carries a click
/// value for all four detectors, so the four correlations share one joint
/// empirical distribution. Throws DomainError unless the label set is the
/// quadruple label set.
ChshReport<double> empirical_chsh(const EventLog &log);

} // namespace qmeas
