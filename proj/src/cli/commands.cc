// Copyright 2026 The qinvariant Authors
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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qinv/cli.h"
#include "qinv/commutant.h"
#include "qinv/qasm.h"

namespace qinv::cli {

namespace {

/// Residual tolerance for generator sweeps over constructed subspaces.
constexpr double kResidualTolerance = 1e-10;

std::string join_ints(const std::vector<int> &v) {
    std::string s;
    for (size_t k = 0; k < v.size(); k++) {
        s += (k ? "," : "") + std::to_string(v[k]);
    }
    return s;
}

struct Checker {
    CheckResult result;
    Json items = Json::array();

    void add(const std::string &name, bool ok, const std::string &detail, Json data = Json::object()) {
        result.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + name + ": " + detail);
        result.passed = result.passed && ok;
        data["name"] = name;
        data["passed"] = ok;
        data["detail"] = detail;
        items.push_back(data);
    }
};

}  // namespace

CheckResult run_checks(const CheckOptions &opts) {
    if (opts.n_max < 2 || opts.n_max > 4) {
        throw std::invalid_argument("check: n-max must be in [2, 4]");
    }
    if (opts.swap_n_max < 2 || opts.swap_n_max > 8) {
        throw std::invalid_argument("check: swap-n-max must be in [2, 8]");
    }
    if (opts.dimension_n_max < 2 || opts.dimension_n_max > size_limits().max_dense_qubits) {
        throw std::invalid_argument("check: dimension-n-max out of range");
    }
    if (opts.commutant_n_max < 2 || opts.commutant_n_max > 8) {
        throw std::invalid_argument("check: commutant-n-max must be in [2, 8]");
    }
    Checker c;

    for (int n = 2; n <= opts.n_max; n++) {
        auto cp = enumerate_cp_elements(n).elements.size();
        c.add("orders.cp n=" + std::to_string(n), BigInt(cp) == cp_group_order(n),
              "enumerated " + std::to_string(cp) + ", formula " + cp_group_order(n).str());
        auto cnot = enumerate_family(GateFamily::CNOT, n).elements.size();
        c.add("orders.cnot n=" + std::to_string(n), BigInt(cnot) == cnot_group_order(n),
              "enumerated " + std::to_string(cnot) + ", formula " + cnot_group_order(n).str());
    }
    for (int n = 2; n <= opts.swap_n_max; n++) {
        auto sw = enumerate_family(GateFamily::SWAP, n).elements.size();
        c.add("orders.swap n=" + std::to_string(n), BigInt(sw) == swap_group_order(n),
              "enumerated " + std::to_string(sw) + ", formula " + swap_group_order(n).str());
    }

    for (int n = 2; n <= opts.n_max; n++) {
        auto iso = check_cnot_isomorphism(n);
        std::string detail = "GL(" + std::to_string(n) + ",2) order " + iso.expected_order.str() + ", unitary closure " +
                             std::to_string(iso.unitary_closure_size) + ", F2 closure " +
                             std::to_string(iso.f2_closure_size) + ", <M1,M2> " +
                             std::to_string(iso.m1_m2_closure_size);
        for (const auto &f : iso.failures) {
            detail += "; " + f;
        }
        c.add("isomorphism n=" + std::to_string(n), iso.passed(), detail, to_json(iso));
    }

    for (int n = 2; n <= opts.n_max; n++) {
        auto tr = check_double_transitivity(n);
        c.add("double-transitivity n=" + std::to_string(n), tr.passed,
              "orbit " + std::to_string(tr.orbit_size) + ", expected " + std::to_string(tr.expected_size),
              to_json(tr));
    }

    for (int n = 2; n <= opts.dimension_n_max; n++) {
        auto dec = swap_irreducible_decomposition(n);
        auto table = dimension_table(n);
        auto diffs = compare_with_table(dec, table);
        bool ok = diffs.empty() && dec.total_dimension() == (uint64_t{1} << n) &&
                  dec.subspaces.size() == table.total_count;
        std::string detail = std::to_string(dec.subspaces.size()) + " subspaces, total dimension " +
                             std::to_string(dec.total_dimension()) + ", predicted count " +
                             std::to_string(table.total_count);
        for (const auto &d : diffs) {
            detail += "; " + d;
        }
        c.add("dimensions n=" + std::to_string(n), ok, detail);
    }

    for (int n = 2; n <= opts.commutant_n_max; n++) {
        for (GateFamily fam : {GateFamily::CP, GateFamily::CNOT, GateFamily::SWAP}) {
            auto dec = decomposition_for(fam, n);
            auto gens = family_generators(fam, n);
            double worst = 0;
            for (const auto &sub : dec.subspaces) {
                worst = std::max(worst, invariance_residual(sub, gens));
            }
            std::ostringstream detail;
            detail << "max residual " << worst;
            c.add("invariance." + std::string(family_name(fam)) + " n=" + std::to_string(n),
                  worst < kResidualTolerance, detail.str());
        }
        for (GateFamily fam : {GateFamily::CNOT, GateFamily::SWAP}) {
            auto dec = decomposition_for(fam, n);
            auto gens = family_generators(fam, n);
            std::vector<int> dims;
            bool ok = true;
            for (const auto &sub : dec.subspaces) {
                int d = commutant_dimension(sub, gens);
                dims.push_back(d);
                ok = ok && d == 1;
            }
            c.add("irreducibility." + std::string(family_name(fam)) + " n=" + std::to_string(n), ok,
                  "commutant dimensions " + join_ints(dims));
        }
    }

    c.result.report["schema"] = kSchemaCheck;
    c.result.report["passed"] = c.result.passed;
    c.result.report["items"] = c.items;
    return c.result;
}

namespace {

std::filesystem::path resolve_out(const std::string &flag) {
    if (!flag.empty()) {
        return flag;
    }
    if (const char *env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
        return env;
    }
    return kDefaultOutputDir;
}

GateFamily family_or_throw(const std::string &text) {
    auto fam = parse_family(text);
    if (!fam) {
        throw CLI::ValidationError("--family", "unknown family '" + text + "' (cp, cnot, swap, swap-alpha)");
    }
    return *fam;
}

struct OrdersArgs {
    int n_min = 2;
    int n_max = 6;
    std::string format = "text";
};

int cmd_orders(const OrdersArgs &a, OutputSink &sink, std::ostream &out) {
    if (a.n_min < 1 || a.n_max < a.n_min || a.n_max > 16) {
        throw std::invalid_argument("orders: need 1 <= n-min <= n-max <= 16");
    }
    std::vector<OrderRow> rows;
    for (int n = a.n_min; n <= a.n_max; n++) {
        rows.push_back(order_row(n));
    }
    std::string text = orders_to_text(rows);
    std::string json = orders_to_json(rows).dump(2) + "\n";
    sink.write("orders.txt", text);
    sink.write("orders.json", json);
    sink.write_manifest("orders", {{"n_min", a.n_min}, {"n_max", a.n_max}}, 0);
    out << (a.format == "json" ? json : text);
    return kOk;
}

struct SubspacesArgs {
    std::string family;
    int n = 4;
    std::string format = "json";
    bool no_basis = false;
};

int cmd_subspaces(const SubspacesArgs &a, OutputSink &sink, std::ostream &out) {
    GateFamily fam = family_or_throw(a.family);
    if (a.n < 1 || a.n > size_limits().max_dense_qubits) {
        throw std::invalid_argument("subspaces: n must be in [1, " + std::to_string(size_limits().max_dense_qubits) +
                                    "]");
    }
    if (fam != GateFamily::SWAP && fam != GateFamily::SWAP_ALPHA && a.n < 2) {
        throw std::invalid_argument("subspaces: n must be >= 2 for this family");
    }
    auto dec = decomposition_for(fam, a.n);
    if (a.format == "json" || a.format == "both") {
        sink.write("decomposition.json", to_json(dec, !a.no_basis).dump(1) + "\n");
    }
    if (a.format == "csv" || a.format == "both") {
        sink.write("decomposition.csv", decomposition_csv(dec));
    }
    bool ok = true;
    if (dec.family == GateFamily::SWAP) {
        auto table = dimension_table(a.n);
        sink.write("dimension_table.json", to_json(table).dump(2) + "\n");
        for (const auto &d : compare_with_table(dec, table)) {
            out << "dimension mismatch: " << d << "\n";
            ok = false;
        }
    }
    double worst = 0;
    if (a.n >= 2) {
        auto gens = family_generators(fam, a.n);
        for (const auto &sub : dec.subspaces) {
            worst = std::max(worst, invariance_residual(sub, gens));
        }
    }
    ok = ok && worst < kResidualTolerance;
    out << "family " << family_name(fam) << " n=" << a.n << ": " << dec.subspaces.size() << " subspaces, dims";
    for (const auto &sub : dec.subspaces) {
        out << " " << sub.dim();
    }
    out << "\nmax invariance residual " << worst << (ok ? " (ok)" : " (FAIL)") << "\n";
    sink.write_manifest("subspaces", {{"family", family_name(fam)}, {"n", a.n}, {"format", a.format}}, 0);
    return ok ? kOk : kCheckFailed;
}

struct BlockdiagArgs {
    std::string family;
    int n = 8;
    BlockDiagonalOptions opts;
};

int cmd_blockdiag(const BlockdiagArgs &a, OutputSink &sink, std::ostream &out) {
    GateFamily fam = family_or_throw(a.family);
    if (a.n < 2 || a.n > kMaxBlockDiagonalQubits) {
        throw std::invalid_argument("blockdiag: n must be in [2, " + std::to_string(kMaxBlockDiagonalQubits) + "]");
    }
    if (a.opts.samples < 1 || a.opts.max_word_length < 1) {
        throw std::invalid_argument("blockdiag: samples and max-word-length must be >= 1");
    }
    auto dec = decomposition_for(fam, a.n);
    auto report = block_diagonal_check(dec, fam, a.opts);
    sink.write("blockdiag.pgm", heatmap_pgm(report.summed_abs));
    sink.write("blockdiag.csv", matrix_csv(report.summed_abs));
    sink.write("blockdiag.json", to_json(report).dump(2) + "\n");
    sink.write_manifest("blockdiag",
                        {{"family", family_name(fam)},
                         {"n", a.n},
                         {"samples", a.opts.samples},
                         {"max_word_length", a.opts.max_word_length},
                         {"alpha", a.opts.alpha}},
                        a.opts.seed);
    std::vector<int> sizes;
    for (const auto &b : report.blocks) {
        sizes.push_back(b.size);
    }
    out << report.blocks.size() << " blocks, sizes " << join_ints(sizes) << "\n";
    out << "max off-block mass " << report.max_off_block_mass << (report.passed ? " (ok)" : " (FAIL)") << "\n";
    return report.passed ? kOk : kCheckFailed;
}

struct VerifyArgs {
    std::string config_file;
    std::string family;
    int n = -1;
    std::vector<std::string> labels;
    int length = -1;
    int trials = -1;
    int64_t seed = -1;
    std::string noise;
    int record_every = -1;
    std::vector<double> alphas;
    int threads = -1;
};

ProtocolConfig build_config(const VerifyArgs &a) {
    ProtocolConfig cfg;
    Json overrides = Json::object();
    if (!a.config_file.empty()) {
        std::ifstream f(a.config_file);
        if (!f) {
            throw std::invalid_argument("cannot read config file " + a.config_file);
        }
        try {
            overrides = Json::parse(f);
        } catch (const nlohmann::json::exception &e) {
            throw std::invalid_argument("config file " + a.config_file + ": " + e.what());
        }
    }
    if (!a.family.empty()) {
        overrides["family"] = a.family;
    }
    if (a.n >= 0) {
        overrides["n"] = a.n;
    }
    if (!a.labels.empty()) {
        overrides["start_labels"] = a.labels;
    }
    if (a.length >= 0) {
        overrides["length"] = a.length;
    }
    if (a.trials >= 0) {
        overrides["trials"] = a.trials;
    }
    if (a.seed >= 0) {
        overrides["seed"] = static_cast<uint64_t>(a.seed);
    }
    if (!a.noise.empty()) {
        overrides["noise"] = a.noise;
    }
    if (a.record_every >= 0) {
        overrides["record_every"] = a.record_every;
    }
    if (!a.alphas.empty()) {
        overrides["alphas"] = a.alphas;
    }
    if (a.threads >= 0) {
        overrides["threads"] = a.threads;
    }
    cfg = protocol_config_from_json(overrides, cfg);
    validate_config(cfg);
    return cfg;
}

int cmd_verify(const VerifyArgs &a, OutputSink &sink, std::ostream &out) {
    ProtocolConfig cfg = build_config(a);
    auto report = run_protocol(cfg);
    std::string json = to_json(report).dump(2) + "\n";
    sink.write("leakage_report.json", json);
    sink.write("leakage_curves.csv", curves_csv(report));
    sink.write_manifest("verify", to_json(cfg), cfg.seed);
    out << json;
    bool complete = report.max_completeness_defect < 1e-9;
    bool ok = complete && (cfg.noise.kind != NoiseKind::NONE || report.confined());
    return ok ? kOk : kCheckFailed;
}

struct QasmArgs {
    std::string family;
    int n = 3;
    int length = 5;
    int trials = 1;
    uint64_t seed = 1;
    std::vector<double> alphas = {0.5};
};

int cmd_export_qasm(const QasmArgs &a, OutputSink &sink, std::ostream &out) {
    GateFamily fam = family_or_throw(a.family);
    if (a.n < 2 || a.n > size_limits().max_state_qubits) {
        throw std::invalid_argument("export-qasm: n out of range");
    }
    if (a.length < 1 || a.trials < 1) {
        throw std::invalid_argument("export-qasm: length and trials must be >= 1");
    }
    bool ok = true;
    for (int t = 0; t < a.trials; t++) {
        // Stream 2 is reserved for exported circuits.
        std::mt19937_64 rng(derive_seed(a.seed, static_cast<uint64_t>(t), 2));
        auto gates = random_gate_sequence(fam, a.n, a.length, rng, a.alphas);
        char name[32];
        std::snprintf(name, sizeof name, "circuit_%03d.qasm", t);
        std::string text = to_qasm(gates, a.n,
                                   std::string(family_name(fam)) + " trial " + std::to_string(t) + " seed " +
                                       std::to_string(a.seed));
        auto program = parse_qasm_strict(text);
        std::string status = "parsed";
        if (a.n <= kMaxBlockDiagonalQubits) {
            double defect = qasm_equivalence_defect(program, gates, a.n);
            bool match = defect < 1e-9;
            ok = ok && match;
            std::ostringstream s;
            s << "parsed, equivalence defect " << defect << (match ? "" : " (FAIL)");
            status = s.str();
        }
        sink.write(name, text);
        out << name << ": " << gates.size() << " gates, " << status << "\n";
    }
    sink.write_manifest("export-qasm",
                        {{"family", family_name(fam)},
                         {"n", a.n},
                         {"length", a.length},
                         {"trials", a.trials},
                         {"alphas", a.alphas}},
                        a.seed);
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qinv: invariant subspaces of two-qubit gate groups"};
    app.require_subcommand(1);
    std::string out_dir;
    app.add_option("--out", out_dir, std::string("Output directory (default $") + kOutputDirEnv + " or " +
                                         kDefaultOutputDir + ")");

    OrdersArgs orders;
    auto *s_orders = app.add_subcommand("orders", "Exact group orders for CP, CNOT and SWAP");
    s_orders->add_option("--n-min", orders.n_min, "Smallest n")->capture_default_str();
    s_orders->add_option("--n-max", orders.n_max, "Largest n")->capture_default_str();
    s_orders->add_option("--format", orders.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    SubspacesArgs subs;
    auto *s_subs = app.add_subcommand("subspaces", "Export the invariant-subspace decomposition");
    s_subs->add_option("--family", subs.family, "cp, cnot, swap or swap-alpha")->required();
    s_subs->add_option("--n", subs.n, "Number of qubits")->capture_default_str();
    s_subs->add_option("--format", subs.format, "json, csv or both")
        ->check(CLI::IsMember({"json", "csv", "both"}))
        ->capture_default_str();
    s_subs->add_flag("--no-basis", subs.no_basis, "Leave basis vectors out of the JSON");

    BlockdiagArgs bd;
    auto *s_bd = app.add_subcommand("blockdiag", "Block-diagonal heatmap of conjugated random words");
    s_bd->add_option("--family", bd.family, "cp, cnot, swap or swap-alpha")->required();
    s_bd->add_option("--n", bd.n, "Number of qubits")->capture_default_str();
    s_bd->add_option("--samples", bd.opts.samples, "Random words")->capture_default_str();
    s_bd->add_option("--seed", bd.opts.seed, "Seed")->capture_default_str();
    s_bd->add_option("--max-word-length", bd.opts.max_word_length, "Longest word")->capture_default_str();
    s_bd->add_option("--alpha", bd.opts.alpha, "Alpha for swap-alpha words")->capture_default_str();

    VerifyArgs va;
    auto *s_verify = app.add_subcommand("verify", "Leakage protocol under a noise model");
    s_verify->add_option("--config", va.config_file, "JSON config file; flags override its fields");
    s_verify->add_option("--family", va.family, "cp, cnot, swap or swap-alpha");
    s_verify->add_option("--n", va.n, "Number of qubits");
    s_verify->add_option("--label", va.labels, "Start subspace label (repeatable)");
    s_verify->add_option("--length", va.length, "Gates per trial");
    s_verify->add_option("--trials", va.trials, "Trials");
    s_verify->add_option("--seed", va.seed, "Seed")->check(CLI::NonNegativeNumber);
    s_verify->add_option("--noise", va.noise, "none, alpha:<eps>, phase:<eps>, depolarizing:<p>");
    s_verify->add_option("--record-every", va.record_every, "Snapshot stride (0: final only)");
    s_verify->add_option("--alpha", va.alphas, "Alpha set for swap-alpha (repeatable)");
    s_verify->add_option("--threads", va.threads, "Worker threads");

    auto *s_check = app.add_subcommand("check", "Run the oracle suite");
    CheckOptions copts;
    s_check->add_option("--n-max", copts.n_max, "Largest n for enumeration items (<= 4)")->capture_default_str();
    s_check->add_option("--swap-n-max", copts.swap_n_max, "Largest n for SWAP enumeration")->capture_default_str();
    s_check->add_option("--dimension-n-max", copts.dimension_n_max, "Largest n for dimension tables")
        ->capture_default_str();
    s_check->add_option("--commutant-n-max", copts.commutant_n_max, "Largest n for irreducibility")
        ->capture_default_str();

    QasmArgs qa;
    auto *s_qasm = app.add_subcommand("export-qasm", "Random gate sequences as OpenQASM 2.0");
    s_qasm->add_option("--family", qa.family, "cp, cnot, swap or swap-alpha")->required();
    s_qasm->add_option("--n", qa.n, "Number of qubits")->capture_default_str();
    s_qasm->add_option("--length", qa.length, "Gates per circuit")->capture_default_str();
    s_qasm->add_option("--trials", qa.trials, "Circuits")->capture_default_str();
    s_qasm->add_option("--seed", qa.seed, "Seed")->capture_default_str();
    s_qasm->add_option("--alpha", qa.alphas, "Alpha set for swap-alpha (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        OutputSink sink(resolve_out(out_dir));
        if (s_orders->parsed()) {
            return cmd_orders(orders, sink, out);
        }
        if (s_subs->parsed()) {
            return cmd_subspaces(subs, sink, out);
        }
        if (s_bd->parsed()) {
            return cmd_blockdiag(bd, sink, out);
        }
        if (s_verify->parsed()) {
            return cmd_verify(va, sink, out);
        }
        if (s_check->parsed()) {
            auto result = run_checks(copts);
            for (const auto &line : result.lines) {
                out << line << "\n";
            }
            sink.write("check.json", result.report.dump(2) + "\n");
            sink.write_manifest("check",
                                {{"n_max", copts.n_max},
                                 {"swap_n_max", copts.swap_n_max},
                                 {"dimension_n_max", copts.dimension_n_max},
                                 {"commutant_n_max", copts.commutant_n_max}},
                                0);
            out << (result.passed ? "all checks passed" : "some checks FAILED") << "\n";
            return result.passed ? kOk : kCheckFailed;
        }
        if (s_qasm->parsed()) {
            return cmd_export_qasm(qa, sink, out);
        }
    } catch (const CLI::ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsageError;
}

}  // namespace qinv::cli
