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

#include "qmeas/sampler.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace qmeas {

double uniform_from_bits(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

EventLog sample_distribution(const OutcomeDistribution<double> &dist, std::uint64_t n,
                             std::uint64_t seed, std::string config_descriptor) {
    if (dist.size() == 0) {
        throw DomainError("cannot sample from an empty distribution");
    }
    std::vector<double> cdf(dist.size());
    double acc = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t k = 0; k < dist.size(); ++k) {
        acc += dist.probs[k];
        cdf[k] = acc;
        if (dist.probs[k] > 0.0) {
            last_nonzero = k;
        }
    }

    EventLog log;
    log.config_descriptor = std::move(config_descriptor);
    log.seed = seed;
    log.label_set = dist.labels;
    log.events.reserve(n);

    std::mt19937_64 gen(seed);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double u = uniform_from_bits(gen());
        // First k with u < cdf[k]; a zero-probability cell never wins because
        // its predecessor has the same cumulative value.
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t k =
            it == cdf.end() ? last_nonzero : static_cast<std::size_t>(it - cdf.begin());
        log.events.push_back(static_cast<std::uint32_t>(k));
    }
    return log;
}

EventLog sample(const Povm<double> &povm, const StateDescriptor<double> &state, std::uint64_t n,
                std::uint64_t seed, std::string config_descriptor) {
    return sample_distribution(born_probabilities(state, povm), n, seed,
                               std::move(config_descriptor));
}

OutcomeDistribution<double> empirical_distribution(const EventLog &log) {
    OutcomeDistribution<double> out;
    out.labels = log.label_set;
    std::vector<std::uint64_t> counts(log.label_set.size(), 0);
    for (const auto k : log.events) {
        ++counts[k];
    }
    out.probs.resize(counts.size(), 0.0);
    if (log.count() > 0) {
        const double n = static_cast<double>(log.count());
        for (std::size_t k = 0; k < counts.size(); ++k) {
            out.probs[k] = static_cast<double>(counts[k]) / n;
        }
    }
    return out;
}

ChshReport<double> empirical_chsh(const EventLog &log) {
    if (log.label_set != quad_labels()) {
        throw DomainError("empirical_chsh needs a log of quadrivariate Bell outcomes");
    }
    if (log.count() == 0) {
        throw DomainError("empirical_chsh needs at least one event");
    }
    return chsh_from_distribution(empirical_distribution(log));
}

} // namespace qmeas
