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

#include "qinv/export.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qinv {

OrderRow order_row(int n) {
    return {n, cp_group_order(n), cnot_group_order(n), swap_group_order(n), cnot_order_ratio(n)};
}

Json orders_to_json(const std::vector<OrderRow> &rows) {
    Json j;
    j["schema"] = kSchemaOrders;
    Json arr = Json::array();
    for (const auto &r : rows) {
        arr.push_back({{"n", r.n},
                       {"cp", r.cp.str()},
                       {"cnot", r.cnot.str()},
                       {"swap", r.swap.str()},
                       {"cnot_ratio", r.cnot_ratio}});
    }
    j["rows"] = arr;
    return j;
}

std::string orders_to_text(const std::vector<OrderRow> &rows) {
    // Columns are sized to the widest entry plus two spaces.
    size_t w_cp = 2, w_cnot = 4, w_swap = 4;
    for (const auto &r : rows) {
        w_cp = std::max(w_cp, r.cp.str().size());
        w_cnot = std::max(w_cnot, r.cnot.str().size());
        w_swap = std::max(w_swap, r.swap.str().size());
    }
    auto col = [](size_t w) { return static_cast<int>(w + 2); };
    std::ostringstream out;
    out << std::left << std::setw(4) << "n" << std::setw(col(w_cp)) << "cp" << std::setw(col(w_cnot)) << "cnot"
        << std::setw(col(w_swap)) << "swap"
        << "cnot_ratio\n";
    for (const auto &r : rows) {
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.17g", r.cnot_ratio);
        out << std::left << std::setw(4) << r.n << std::setw(col(w_cp)) << r.cp.str() << std::setw(col(w_cnot))
            << r.cnot.str() << std::setw(col(w_swap)) << r.swap.str() << ratio << "\n";
    }
    return out.str();
}

namespace {

Json label_json(const SubspaceLabel &label) {
    Json j;
    j["label"] = label.str();
    switch (label.kind) {
        case LabelKind::CP_BASIS:
            j["kind"] = "cp";
            j["index"] = label.index;
            break;
        case LabelKind::CNOT:
            j["kind"] = "cnot";
            j["index"] = label.index;
            break;
        case LabelKind::SWAP_IRREP:
            j["kind"] = "swap";
            j["i"] = label.index;
            j["j"] = label.j;
            break;
        case LabelKind::SWAP_WEIGHT:
            j["kind"] = "weight";
            j["i"] = label.index;
            break;
    }
    return j;
}

}  // namespace

Json to_json(const Decomposition &dec, bool include_basis) {
    Json j;
    j["schema"] = kSchemaDecomposition;
    j["n"] = dec.n;
    j["family"] = family_name(dec.family);
    j["count"] = dec.subspaces.size();
    j["total_dimension"] = dec.total_dimension();
    Json subs = Json::array();
    for (const auto &sub : dec.subspaces) {
        Json s = label_json(sub.label());
        s["dim"] = sub.dim();
        s["predicted_dim"] = predicted_dimension(sub.label(), dec.n);
        if (include_basis) {
            s["support"] = sub.support();
            Json vectors = Json::array();
            for (int k = 0; k < sub.dim(); k++) {
                std::vector<double> col(sub.coeffs().col(k).data(), sub.coeffs().col(k).data() + sub.coeffs().rows());
                vectors.push_back(col);
            }
            s["vectors"] = vectors;
        }
        subs.push_back(s);
    }
    j["subspaces"] = subs;
    return j;
}

Json to_json(const DimensionTable &table) {
    Json j;
    j["schema"] = kSchemaDimensionTable;
    j["n"] = table.n;
    j["total_count"] = table.total_count;
    j["multiplicity"] = table.multiplicity;
    Json irreps = Json::array();
    for (size_t jj = 0; jj < table.multiplicity.size(); jj++) {
        irreps.push_back(table.irrep_dimension(static_cast<int>(jj)));
    }
    j["irrep_dimension"] = irreps;
    Json entries = Json::array();
    for (const auto &e : table.entries) {
        entries.push_back({{"i", e.i}, {"j", e.j}, {"dim", e.dim}});
    }
    j["entries"] = entries;
    return j;
}

Json to_json(const BlockReport &report) {
    Json j;
    j["schema"] = kSchemaBlockReport;
    j["n"] = report.n;
    j["family"] = family_name(report.family);
    j["samples"] = report.options.samples;
    j["seed"] = report.options.seed;
    j["tolerance"] = report.options.tolerance;
    j["max_word_length"] = report.options.max_word_length;
    j["block_count"] = report.blocks.size();
    Json blocks = Json::array();
    for (const auto &b : report.blocks) {
        Json e = label_json(b.label);
        e["offset"] = b.offset;
        e["size"] = b.size;
        blocks.push_back(e);
    }
    j["blocks"] = blocks;
    j["off_block_mass"] = report.off_block_mass;
    j["max_off_block_mass"] = report.max_off_block_mass;
    j["passed"] = report.passed;
    return j;
}

Json to_json(const ProtocolConfig &config) {
    Json j;
    j["schema"] = kSchemaProtocolConfig;
    j["n"] = config.n;
    j["family"] = family_name(config.family);
    Json labels = Json::array();
    for (const auto &l : config.start_labels) {
        labels.push_back(l.str());
    }
    j["start_labels"] = labels;
    j["length"] = config.length;
    j["trials"] = config.trials;
    j["seed"] = config.seed;
    j["noise"] = config.noise.str();
    j["record_every"] = config.record_every;
    j["alphas"] = config.alphas;
    j["threads"] = config.threads;
    return j;
}

Json to_json(const LeakageReport &report, bool include_wall_time) {
    Json j;
    j["schema"] = kSchemaLeakageReport;
    j["config"] = to_json(report.config);
    Json snaps = Json::array();
    for (const auto &s : report.snapshots) {
        snaps.push_back({{"gates", s.gates}, {"mean", s.mean}, {"stddev", s.stddev}, {"max", s.max}});
    }
    j["snapshots"] = snaps;
    Json hist = Json::array();
    double sum = 0;
    for (size_t k = 0; k < report.histogram.size(); k++) {
        hist.push_back({{"label", report.histogram_labels[k].str()}, {"mean_projection", report.histogram[k]}});
        sum += report.histogram[k];
    }
    j["histogram"] = hist;
    j["histogram_sum"] = sum;
    j["max_leakage"] = report.max_leakage;
    j["max_completeness_defect"] = report.max_completeness_defect;
    j["confined"] = report.confined();
    if (include_wall_time) {
        j["wall_time_seconds"] = report.wall_time_seconds;
    }
    j["notes"] = report.notes;
    return j;
}

Json to_json(const IsomorphismReport &report) {
    return {{"n", report.n},
            {"expected_order", report.expected_order.str()},
            {"unitary_closure_size", report.unitary_closure_size},
            {"f2_closure_size", report.f2_closure_size},
            {"exhaustive_words_checked", report.exhaustive_words_checked},
            {"random_words_checked", report.random_words_checked},
            {"m1_in_image", report.m1_in_image},
            {"m2_in_image", report.m2_in_image},
            {"m1_m2_closure_size", report.m1_m2_closure_size},
            {"swap_identity_holds", report.swap_identity_holds},
            {"failures", report.failures},
            {"notes", report.notes},
            {"passed", report.passed()}};
}

Json to_json(const TransitivityReport &report) {
    return {{"n", report.n},
            {"start", {report.start_first, report.start_second}},
            {"orbit_size", report.orbit_size},
            {"expected_size", report.expected_size},
            {"passed", report.passed}};
}

ProtocolConfig protocol_config_from_json(const Json &j, ProtocolConfig base) {
    if (!j.is_object()) {
        throw std::invalid_argument("protocol config must be a JSON object");
    }
    try {
        if (j.contains("family")) {
            auto fam = parse_family(j.at("family").get<std::string>());
            if (!fam) {
                throw std::invalid_argument("unknown family '" + j.at("family").get<std::string>() + "'");
            }
            base.family = *fam;
        }
        if (j.contains("n")) {
            base.n = j.at("n").get<int>();
        }
        if (j.contains("start_labels")) {
            base.start_labels.clear();
            for (const auto &t : j.at("start_labels")) {
                auto label = parse_label(t.get<std::string>(), base.family);
                if (!label) {
                    throw std::invalid_argument("bad label '" + t.get<std::string>() + "'");
                }
                base.start_labels.push_back(*label);
            }
        }
        if (j.contains("length")) {
            base.length = j.at("length").get<int>();
        }
        if (j.contains("trials")) {
            base.trials = j.at("trials").get<int>();
        }
        if (j.contains("seed")) {
            base.seed = j.at("seed").get<uint64_t>();
        }
        if (j.contains("noise")) {
            auto noise = parse_noise(j.at("noise").get<std::string>());
            if (!noise) {
                throw std::invalid_argument("bad noise '" + j.at("noise").get<std::string>() + "'");
            }
            base.noise = *noise;
        }
        if (j.contains("record_every")) {
            base.record_every = j.at("record_every").get<int>();
        }
        if (j.contains("alphas")) {
            base.alphas = j.at("alphas").get<std::vector<double>>();
        }
        if (j.contains("threads")) {
            base.threads = j.at("threads").get<int>();
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("protocol config: ") + e.what());
    }
    return base;
}

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string decomposition_csv(const Decomposition &dec) {
    std::ostringstream out;
    out << "# schema: " << kSchemaDecomposition << "\n";
    out << "label,k,index,ket,re,im\n";
    for (const auto &sub : dec.subspaces) {
        const auto &c = sub.coeffs();
        for (int k = 0; k < sub.dim(); k++) {
            for (Eigen::Index s = 0; s < c.rows(); s++) {
                if (c(s, k) == 0.0) {
                    continue;
                }
                out << '"' << sub.label().str() << "\"," << k << "," << sub.support()[s] << ","
                    << ket_string(sub.support()[s], dec.n) << "," << fmt(c(s, k)) << ",0\n";
            }
        }
    }
    return out.str();
}

std::string matrix_csv(const Eigen::MatrixXd &m) {
    std::ostringstream out;
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            if (c > 0) {
                out << ",";
            }
            out << fmt(m(r, c));
        }
        out << "\n";
    }
    return out.str();
}

std::string curves_csv(const LeakageReport &report) {
    std::ostringstream out;
    out << "# schema: " << kSchemaLeakageReport << "\n";
    out << "gates,mean,stddev,max\n";
    for (const auto &s : report.snapshots) {
        out << s.gates << "," << fmt(s.mean) << "," << fmt(s.stddev) << "," << fmt(s.max) << "\n";
    }
    return out.str();
}

std::string heatmap_pgm(const Eigen::MatrixXd &m) {
    std::ostringstream out;
    out << "P2\n# qinv heatmap log(1+|x|)\n" << m.cols() << " " << m.rows() << "\n255\n";
    Eigen::MatrixXd scaled = m.cwiseAbs().unaryExpr([](double x) { return std::log1p(x); });
    double top = scaled.size() > 0 ? scaled.maxCoeff() : 0.0;
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            int v = top > 0 ? static_cast<int>(std::lround(255.0 * scaled(r, c) / top)) : 0;
            // Plain PGM lines stay under 70 characters.
            bool line_end = c + 1 == m.cols() || (c + 1) % 16 == 0;
            out << std::clamp(v, 0, 255) << (line_end ? "\n" : " ");
        }
    }
    return out.str();
}

}  // namespace qinv
