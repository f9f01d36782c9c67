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

#pragma once

#include <ostream>
#include <string>

#include "qmeas/bell.hpp"
#include "qmeas/cli/experiment_spec.hpp"
#include "qmeas/cli/table.hpp"
#include "qmeas/sampler.hpp"

namespace qmeas::cli {

StateDescriptord make_state(const StateSpec &spec, Eigen::Index dim);
WhichWayConfig<double> make_whichway_config(const ArmSpec &arm);
BellConfig<double> make_bell_config(const ExperimentSpec &spec);

/// One row: joint distribution, both marginals, nonideality matrices,
/// Martens report and the certainty sum over p_{m-}.
Table run_whichway(const ExperimentSpec &spec);

/// Columns gamma, j_lambda, j_mu, bound, slack; one row per gamma in order.
Table run_martens_sweep(const ExperimentSpec &spec);

/// kind "bell": single-run distribution, correlations and CHSH.
/// kind "aspect": the four corner correlations and their CHSH combination.
Table run_bell(const ExperimentSpec &spec);

struct SampleResult {
    EventLog log;
    Table summary;
    std::string summary_path;
};

/// Writes the event log to spec.output and the empirical summary next to
/// it as <output>.summary.<format>.
SampleResult run_sample(const ExperimentSpec &spec);

/// Table for any kind; for "sample" this also writes the files.
Table run_experiment(const ExperimentSpec &spec);

void write_table(std::ostream &os, const Table &table, const ExperimentSpec &spec);

} // namespace qmeas::cli
