// Copyright 2026 The nlcnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nlcnot/cli/report.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nlc::cli {

namespace {

Json pair_json(const double v[2]) {
    return Json::array({json_real(v[0]), json_real(v[1])});
}

Json optional_real(const std::optional<double> &v) {
    return v ? json_real(*v) : Json(nullptr);
}

Json stats_json(const Stats &s) {
    Json j;
    j["trials"] = s.trials;
    j["successes"] = s.successes;
    j["rate"] = json_real(s.rate);
    j["expected"] = json_real(s.expected);
    j["sigma"] = json_real(s.sigma);
    j["z_score"] = optional_real(s.z_score);
    j["exact_match"] = s.exact_match;
    j["suspicious"] = s.suspicious;
    return j;
}

Json bits_json(const std::vector<int> &bits) {
    Json j = Json::array();
    for (int b : bits) {
        j.push_back(b);
    }
    return j;
}

std::string bits_text(const std::vector<int> &bits) {
    std::string s;
    for (int b : bits) {
        s += static_cast<char>('0' + b);
    }
    return s;
}

std::string csv_real(const std::optional<double> &v) {
    return v ? format_real(*v) : std::string();
}

const char *kTrialHeader = "trial,attempts,succeeded,m_bits,fidelity\n";

std::string trial_csv(const std::vector<TrialRow> &rows) {
    std::ostringstream out;
    out << kTrialHeader;
    for (const auto &r : rows) {
        out << r.trial << ',' << r.attempts << ',' << (r.succeeded ? 1 : 0) << ',' << bits_text(r.es_outcome_bits)
            << ',' << csv_real(r.fidelity) << '\n';
    }
    return out.str();
}

Json validation_json(const ValidationReport &v) {
    Json j;
    j["completeness_residual"] = json_real(v.completeness_residual);
    j["min_eigen_success"] = json_real(v.min_eigen_success);
    j["max_eigen_success"] = json_real(v.max_eigen_success);
    j["min_eigen_failure"] = json_real(v.min_eigen_failure);
    j["max_eigen_failure"] = json_real(v.max_eigen_failure);
    j["is_physical"] = v.is_physical;
    j["notes"] = v.notes;
    return j;
}

std::string finish(const Json &j) {
    return j.dump() + "\n";
}

}  // namespace

Json config_json(const RunConfig &config) {
    ChannelSpec spec = config.channel();
    Json j;
    j["mode"] = to_string(config.mode);
    j["control"] = pair_json(config.control);
    j["target"] = pair_json(config.target);
    j["alpha"] = json_real(spec.alpha());
    j["beta"] = json_real(spec.beta());
    j["theta"] = json_real(spec.theta());
    j["corrector"] = to_string(config.corrector);
    j["trials"] = config.trials;
    j["seed"] = config.seed;
    j["max_attempts"] = config.max_attempts;
    j["format"] = to_string(config.format);
    j["trace"] = config.trace_path ? Json(*config.trace_path) : Json(nullptr);
    return j;
}

Json ledger_json(const ResourceLedger &ledger) {
    Json j;
    j["ebits"] = ledger.ebits_consumed;
    j["bits_a_to_b"] = ledger.classical_bits_a_to_b;
    j["bits_b_to_a"] = ledger.classical_bits_b_to_a;
    j["ancilla_qubits"] = ledger.ancilla_qubits;
    j["measurements"] = ledger.measurements;
    j["memory_bits"] = ledger.memory_bits;
    return j;
}

Json state_json(const StateVector &state) {
    Json labels = Json::array();
    for (const auto &l : state.labels()) {
        labels.push_back(l.name);
    }
    Json amps = Json::array();
    for (const auto &a : state.amplitudes()) {
        amps.push_back(Json::array({json_real(a.real()), json_real(a.imag())}));
    }
    Json j;
    j["labels"] = std::move(labels);
    j["amplitudes"] = std::move(amps);
    return j;
}

ValidationSummary run_validation(const ChannelSpec &spec) {
    ValidationSummary s{};
    for (int m = 0; m < 2; m++) {
        s.pairs[m] = validate_povm(povm_pair(m, spec));
    }
    s.u0_residual = unitarity_residual(corrector_unitary(0, spec.theta()).matrix());
    s.u1_residual = unitarity_residual(corrector_unitary(1, spec.theta()).matrix());
    s.u1_literal_residual = unitarity_residual(corrector_unitary_literal(1, spec.theta()));
    return s;
}

ExactSummary run_exact(const RunConfig &config) {
    ExactSummary s{};
    ChannelSpec spec = config.channel();
    GateConfig g = config.gate_config();
    s.analytic = outcome_distribution(config.control[0], config.control[1], spec);
    double total = 0;
    for (int m = 0; m < 2; m++) {
        s.analytic_conditional[m] =
            conditional_success_probability(config.control[0], config.control[1], spec, config.corrector, m);
    }
    total = exact_success_probability(spec, config.corrector);
    s.analytic_total = total;
    s.engine = propagate_branches(g);

    double pm[2] = {s.analytic.p0, s.analytic.p1};
    double worst = std::abs(s.engine.total_success - total);
    for (int m = 0; m < 2; m++) {
        const BranchReport &br = s.engine.branches[m];
        if (!br.reachable) {
            continue;
        }
        worst = std::max(worst, std::abs(br.es_probability - pm[m]));
        if (s.analytic_conditional[m]) {
            worst = std::max(worst, std::abs(br.conditional_success - *s.analytic_conditional[m]));
        }
    }
    s.max_discrepancy = worst;
    return s;
}

std::string emit_report(const RunConfig &config, const RunResult &result) {
    std::optional<double> fid;
    if (result.final_state) {
        GateConfig g = config.gate_config();
        fid = fidelity(*result.final_state, direct_cnot(g.control, g.target));
    }
    if (config.format == Format::Csv) {
        TrialRow row{0, result.attempts, result.succeeded, result.es_outcome_bits, fid, std::nullopt};
        return trial_csv({row});
    }
    Json j;
    j["config"] = config_json(config);
    j["succeeded"] = result.succeeded;
    j["attempts"] = result.attempts;
    j["es_outcome_bits"] = bits_json(result.es_outcome_bits);
    Json attempts = Json::array();
    for (const auto &a : result.attempt_records) {
        Json aj;
        aj["es_outcome"] = a.es_outcome;
        aj["es_probability"] = json_real(a.es_probability);
        aj["corrector_succeeded"] = a.corrector_succeeded ? Json(*a.corrector_succeeded) : Json(nullptr);
        aj["corrector_probability"] = optional_real(a.corrector_probability);
        aj["ledger"] = ledger_json(a.ledger);
        attempts.push_back(std::move(aj));
    }
    j["attempt_records"] = std::move(attempts);
    j["final_state"] = result.final_state ? state_json(*result.final_state) : Json(nullptr);
    j["fidelity"] = optional_real(fid);
    j["ledger"] = ledger_json(result.ledger);
    j["cross_party_gate_events"] = count_cross_party_gates(result.trace);
    return finish(j);
}

std::string emit_report(const RunConfig &config, const MonteCarloReport &report) {
    if (config.format == Format::Csv) {
        return trial_csv(report.rows);
    }
    Json j;
    j["config"] = config_json(config);
    j["expected_rate"] = json_real(report.expected_rate);
    j["stats"] = stats_json(report.stats);
    j["mean_attempts"] = json_real(report.mean_attempts);
    j["min_fidelity"] = json_real(report.min_fidelity);
    j["cross_party_gate_events"] = report.cross_party_gate_events;
    j["ledger"] = ledger_json(report.ledger);
    return finish(j);
}

std::string emit_report(const RunConfig &config, const PurificationReport &report) {
    if (config.format == Format::Csv) {
        return trial_csv(report.rows);
    }
    Json j;
    j["config"] = config_json(config);
    j["attempts_per_trial"] = 1;
    j["expected_rate"] = json_real(report.expected_rate);
    j["stats"] = stats_json(report.stats);
    j["mean_fidelity"] = json_real(report.mean_fidelity);
    j["min_fidelity"] = json_real(report.min_fidelity);
    j["mean_entropy_bits"] = json_real(report.mean_entropy);
    j["min_entropy_bits"] = json_real(report.min_entropy);
    j["max_entropy_bits"] = json_real(report.max_entropy);
    j["cross_party_gate_events"] = report.cross_party_gate_events;
    j["ledger"] = ledger_json(report.ledger);
    return finish(j);
}

std::string emit_report(const RunConfig &config, const ValidationSummary &summary) {
    if (config.format == Format::Csv) {
        std::ostringstream out;
        out << "m,completeness_residual,min_eigen_success,max_eigen_success,min_eigen_failure,is_physical\n";
        for (int m = 0; m < 2; m++) {
            const auto &v = summary.pairs[m];
            out << m << ',' << format_real(v.completeness_residual) << ',' << format_real(v.min_eigen_success) << ','
                << format_real(v.max_eigen_success) << ',' << format_real(v.min_eigen_failure) << ','
                << (v.is_physical ? 1 : 0) << '\n';
        }
        return out.str();
    }
    const auto &p = summary.pairs;
    Json j;
    j["config"] = config_json(config);
    j["is_physical"] = p[0].is_physical && p[1].is_physical;
    j["max_eigen_success"] = json_real(std::max(p[0].max_eigen_success, p[1].max_eigen_success));
    j["min_eigen_failure"] = json_real(std::min(p[0].min_eigen_failure, p[1].min_eigen_failure));
    j["completeness_residual"] = json_real(std::max(p[0].completeness_residual, p[1].completeness_residual));
    Json pairs = Json::array();
    for (int m = 0; m < 2; m++) {
        Json pj;
        pj["m"] = m;
        pj.update(validation_json(p[m]));
        pairs.push_back(std::move(pj));
    }
    j["pairs"] = std::move(pairs);
    Json u;
    u["u0_residual"] = json_real(summary.u0_residual);
    u["u1_residual"] = json_real(summary.u1_residual);
    u["u1_literal_residual"] = json_real(summary.u1_literal_residual);
    u["u1_literal_is_unitary"] = summary.u1_literal_residual <= kIdentityTol;
    j["unitarity"] = std::move(u);
    return finish(j);
}

std::string emit_report(const RunConfig &config, const ExactSummary &summary) {
    double pm[2] = {summary.analytic.p0, summary.analytic.p1};
    if (config.format == Format::Csv) {
        std::ostringstream out;
        out << "m,p_m,conditional_success,engine_p_m,engine_conditional_success,engine_joint_success\n";
        for (int m = 0; m < 2; m++) {
            const BranchReport &br = summary.engine.branches[m];
            out << m << ',' << format_real(pm[m]) << ',' << csv_real(summary.analytic_conditional[m]) << ','
                << format_real(br.es_probability) << ',' << format_real(br.conditional_success) << ','
                << format_real(br.joint_success) << '\n';
        }
        return out.str();
    }
    Json j;
    j["config"] = config_json(config);
    j["p0"] = json_real(summary.analytic.p0);
    j["p1"] = json_real(summary.analytic.p1);
    j["expected_rate"] = json_real(summary.analytic_total);
    j["engine_total_success"] = json_real(summary.engine.total_success);
    j["max_discrepancy"] = json_real(summary.max_discrepancy);
    Json branches = Json::array();
    for (int m = 0; m < 2; m++) {
        const BranchReport &br = summary.engine.branches[m];
        Json bj;
        bj["m"] = m;
        bj["reachable"] = br.reachable;
        bj["p_m"] = json_real(pm[m]);
        bj["conditional_success"] = optional_real(summary.analytic_conditional[m]);
        bj["engine_p_m"] = json_real(br.es_probability);
        bj["engine_conditional_success"] = json_real(br.conditional_success);
        bj["engine_joint_success"] = json_real(br.joint_success);
        bj["control_ebit_fidelity"] = json_real(br.control_ebit_fidelity);
        bj["gate_fidelity"] = json_real(br.gate_fidelity);
        branches.push_back(std::move(bj));
    }
    j["branches"] = std::move(branches);
    return finish(j);
}

}  // namespace nlc::cli
