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

#include "qmeas/cli/runners.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "qmeas/cli/event_log_io.hpp"
#include "qmeas/infometrics.hpp"

namespace qmeas::cli {

namespace {

using Angle = PolarizationAngled;

void append_distribution(std::vector<std::string> &columns, std::vector<Cell> &row,
                         const std::string &prefix, const OutcomeDistribution<double> &dist) {
    for (std::size_t k = 0; k < dist.size(); ++k) {
        columns.push_back(prefix + label_token(dist.labels[k]));
        row.emplace_back(dist.probs[k]);
    }
}

void append_chsh(std::vector<std::string> &columns, std::vector<Cell> &row,
                 const std::string &suffix, const ChshReport<double> &r) {
    static const std::array<std::string, 4> names{"E_D1_D2", "E_D1_D2p", "E_D1p_D2",
                                                  "E_D1p_D2p"};
    for (std::size_t k = 0; k < 4; ++k) {
        columns.push_back(names[k] + suffix);
        row.emplace_back(r.correlations[k]);
    }
    columns.push_back("S" + suffix);
    row.emplace_back(r.s_value);
    columns.push_back("max_abs_S" + suffix);
    row.emplace_back(r.max_abs_s);
    columns.push_back("violates" + suffix);
    row.emplace_back(r.violates);
}

void append_arm(std::vector<std::string> &columns, std::vector<Cell> &row,
                const std::string &suffix, const ArmSpec &arm) {
    if (arm.gamma) {
        columns.push_back("gamma" + suffix);
        row.emplace_back(*arm.gamma);
    }
    columns.push_back("theta" + suffix + "_deg");
    row.emplace_back(arm.theta_deg);
    columns.push_back("theta" + suffix + "_prime_deg");
    row.emplace_back(arm.theta_prime_deg);
}

Table single_row(std::vector<std::string> columns, std::vector<Cell> row) {
    Table t;
    t.columns = std::move(columns);
    t.add_row(std::move(row));
    return t;
}

void require_kind(const ExperimentSpec &spec, std::initializer_list<ExperimentKind> kinds,
                  const char *runner) {
    if (std::find(kinds.begin(), kinds.end(), spec.kind) == kinds.end()) {
        throw ConfigError("kind", std::string(runner) + " cannot run kind '" +
                                      to_string(spec.kind) + "'");
    }
}

} // namespace

StateDescriptord make_state(const StateSpec &spec, Eigen::Index dim) {
    if (spec.name.empty()) {
        if (static_cast<Eigen::Index>(spec.amplitudes.size()) != dim) {
            throw ConfigError("state", "expected " + std::to_string(dim) + " amplitudes");
        }
        ComplexVectord v(dim);
        for (Eigen::Index k = 0; k < dim; ++k) {
            v(k) = spec.amplitudes[static_cast<std::size_t>(k)];
        }
        try {
            return StateDescriptord::normalized(std::move(v));
        } catch (const DomainError &e) {
            throw ConfigError("state", e.what());
        }
    }
    const std::string &n = spec.name;
    if (n == "mixed") {
        return states::maximally_mixed(dim);
    }
    if (dim == 2) {
        if (n == "H") {
            return states::horizontal();
        }
        if (n == "V") {
            return states::vertical();
        }
        if (n == "diag") {
            return states::diagonal();
        }
    } else if (dim == 4) {
        if (n == "singlet") {
            return states::singlet();
        }
        if (n.size() == 2 && (n[0] == 'H' || n[0] == 'V') && (n[1] == 'H' || n[1] == 'V')) {
            const auto one = [](char c) {
                return c == 'H' ? states::horizontal() : states::vertical();
            };
            return states::product(one(n[0]), one(n[1]));
        }
    }
    throw ConfigError("state",
                      "unknown state '" + n + "' for dimension " + std::to_string(dim));
}

WhichWayConfig<double> make_whichway_config(const ArmSpec &arm) {
    return {arm.gamma.value_or(0.0), Angle::from_degrees(arm.theta_deg),
            Angle::from_degrees(arm.theta_prime_deg)};
}

BellConfig<double> make_bell_config(const ExperimentSpec &spec) {
    return {make_whichway_config(spec.arm1), make_whichway_config(spec.arm2),
            make_state(spec.state, 4)};
}

Table run_whichway(const ExperimentSpec &spec) {
    require_kind(spec, {ExperimentKind::WhichWay}, "whichway");
    validate_spec(spec);
    const auto ww = build_whichway(make_whichway_config(spec.arm));
    const auto state = make_state(spec.state, 2);
    const auto joint = joint_distribution(ww, state);
    const auto nonideal = marginals_and_nonideality(ww);
    const auto martens = martens_check(ww);

    std::vector<std::string> cols;
    std::vector<Cell> row;
    append_arm(cols, row, "", spec.arm);
    append_distribution(cols, row, "p_", joint);
    const auto md = marginal_d(joint);
    const auto mdp = marginal_d_prime(joint);
    cols.insert(cols.end(), {"d_plus", "d_minus", "dprime_plus", "dprime_minus"});
    row.insert(row.end(), {md(0), md(1), mdp(0), mdp(1)});
    for (const auto &[name, m] : {std::pair{"lambda_", &nonideal.lambda}, {"mu_", &nonideal.mu}}) {
        for (Eigen::Index i = 0; i < 2; ++i) {
            for (Eigen::Index j = 0; j < 2; ++j) {
                cols.push_back(name + std::to_string(i) + std::to_string(j));
                row.emplace_back((*m)(i, j));
            }
        }
    }
    cols.insert(cols.end(), {"j_lambda", "j_mu", "bound", "slack", "satisfied", "certainty"});
    row.insert(row.end(), {martens.j_lambda.value, martens.j_mu.value, martens.bound, martens.slack,
                           martens.satisfied, certainty_check(ww, state)});
    return single_row(std::move(cols), std::move(row));
}

Table run_martens_sweep(const ExperimentSpec &spec) {
    require_kind(spec, {ExperimentKind::MartensSweep}, "martens-sweep");
    validate_spec(spec);
    const Angle theta = Angle::from_degrees(spec.sweep_theta_deg);
    const Angle theta_prime = Angle::from_degrees(spec.sweep_theta_deg + spec.delta_deg);
    Table t;
    t.columns = {"gamma", "j_lambda", "j_mu", "bound", "slack"};
    // Rows are independent; kept sequential so the output order is the grid order.
    for (const double gamma : spec.gammas) {
        const auto r = martens_check(build_whichway(WhichWayConfig<double>{gamma, theta, theta_prime}));
        t.add_row({gamma, r.j_lambda.value, r.j_mu.value, r.bound, r.slack});
    }
    return t;
}

Table run_bell(const ExperimentSpec &spec) {
    require_kind(spec, {ExperimentKind::Bell, ExperimentKind::Aspect}, "bell");
    validate_spec(spec);
    std::vector<std::string> cols;
    std::vector<Cell> row;
    append_arm(cols, row, "1", spec.arm1);
    append_arm(cols, row, "2", spec.arm2);

    if (spec.kind == ExperimentKind::Bell) {
        const auto bell = build_bell(make_bell_config(spec));
        const auto dist = quad_distribution(bell);
        append_distribution(cols, row, "p_", dist);
        append_chsh(cols, row, "", chsh_from_distribution(dist));
        return single_row(std::move(cols), std::move(row));
    }

    const auto state = make_state(spec.state, 4);
    const auto corners = aspect_corners(state, Angle::from_degrees(spec.arm1.theta_deg),
                                        Angle::from_degrees(spec.arm1.theta_prime_deg),
                                        Angle::from_degrees(spec.arm2.theta_deg),
                                        Angle::from_degrees(spec.arm2.theta_prime_deg));
    std::array<double, 4> e{};
    for (std::size_t k = 0; k < 4; ++k) {
        const auto &c = corners[k];
        const std::string tag = "g" + std::to_string(static_cast<int>(c.gamma1)) +
                                std::to_string(static_cast<int>(c.gamma2));
        append_distribution(cols, row, "p" + tag + "_", c.distribution);
        e[k] = c.correlation;
    }
    append_chsh(cols, row, "", make_chsh_report(e));
    return single_row(std::move(cols), std::move(row));
}

SampleResult run_sample(const ExperimentSpec &spec) {
    require_kind(spec, {ExperimentKind::Sample}, "sample");
    validate_spec(spec);
    if (!spec.n_events) {
        throw ConfigError("n_events", "missing required field");
    }
    if (!spec.seed) {
        throw ConfigError("seed", "missing required field");
    }
    if (spec.output.empty()) {
        throw ConfigError("output", "sample needs an output path for the event log");
    }

    SampleResult result;
    OutcomeDistribution<double> analytic;
    std::optional<ChshReport<double>> analytic_chsh;
    if (spec.target == "whichway") {
        const auto ww = build_whichway(make_whichway_config(spec.arm));
        analytic = joint_distribution(ww, make_state(spec.state, 2));
    } else {
        const auto bell = build_bell(make_bell_config(spec));
        analytic = quad_distribution(bell);
        analytic_chsh = chsh_from_distribution(analytic);
    }
    result.log = sample_distribution(analytic, *spec.n_events, *spec.seed, config_hash(spec));
    write_event_log_file(spec.output, result.log);

    const auto freq = empirical_distribution(result.log);
    std::vector<std::string> cols{"n_events", "seed"};
    std::vector<Cell> row{static_cast<std::int64_t>(result.log.count()),
                          std::to_string(result.log.seed)};
    append_distribution(cols, row, "freq_", freq);
    append_distribution(cols, row, "p_", analytic);
    double max_dev = 0.0;
    if (result.log.count() > 0) {
        for (std::size_t k = 0; k < freq.size(); ++k) {
            max_dev = std::max(max_dev, std::abs(freq.probs[k] - analytic.probs[k]));
        }
    }
    cols.push_back("max_abs_freq_dev");
    row.emplace_back(max_dev);
    if (analytic_chsh && result.log.count() > 0) {
        const auto empirical = empirical_chsh(result.log);
        append_chsh(cols, row, "_empirical", empirical);
        cols.push_back("S_analytic");
        row.emplace_back(analytic_chsh->s_value);
        cols.push_back("S_abs_diff");
        row.emplace_back(std::abs(empirical.s_value - analytic_chsh->s_value));
    }
    result.summary = single_row(std::move(cols), std::move(row));

    result.summary_path = spec.output + ".summary." + spec.format;
    std::ofstream out(result.summary_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + result.summary_path + "' for writing");
    }
    write_table(out, result.summary, spec);
    if (!out) {
        throw IoError("failed writing '" + result.summary_path + "'");
    }
    return result;
}

Table run_experiment(const ExperimentSpec &spec) {
    switch (spec.kind) {
    case ExperimentKind::WhichWay:
        return run_whichway(spec);
    case ExperimentKind::MartensSweep:
        return run_martens_sweep(spec);
    case ExperimentKind::Bell:
    case ExperimentKind::Aspect:
        return run_bell(spec);
    case ExperimentKind::Sample:
        return run_sample(spec).summary;
    }
    throw ConfigError("kind", "unsupported experiment kind");
}

void write_table(std::ostream &os, const Table &table, const ExperimentSpec &spec) {
    if (spec.format == "json") {
        os << table_to_json(table, spec_to_json(spec)).dump(2) << '\n';
    } else {
        write_csv(os, table);
    }
}

} // namespace qmeas::cli
