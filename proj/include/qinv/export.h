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

#ifndef QINV_EXPORT_H
#define QINV_EXPORT_H

#include <json.hpp>
#include <string>

#include "qinv/block_diagonal.h"
#include "qinv/group.h"
#include "qinv/isomorphism.h"
#include "qinv/protocol.h"
#include "qinv/subspaces.h"

namespace qinv {

using Json = nlohmann::ordered_json;

inline constexpr const char *kArtifactVersion = "1.0.0";

// Every JSON document carries a "schema" field naming one of these.
inline constexpr const char *kSchemaDecomposition = "qinv.decomposition/1";
inline constexpr const char *kSchemaDimensionTable = "qinv.dimension_table/1";
inline constexpr const char *kSchemaBlockReport = "qinv.block_report/1";
inline constexpr const char *kSchemaLeakageReport = "qinv.leakage_report/1";
inline constexpr const char *kSchemaProtocolConfig = "qinv.protocol_config/1";
inline constexpr const char *kSchemaOrders = "qinv.orders/1";
inline constexpr const char *kSchemaCheck = "qinv.check/1";
inline constexpr const char *kSchemaManifest = "qinv.manifest/1";

struct OrderRow {
    int n;
    BigInt cp;
    BigInt cnot;
    BigInt swap;
    /// |CNOT^(n)| / 2^(n^2).
    double cnot_ratio;
};

OrderRow order_row(int n);

/// Orders are emitted as decimal strings (they overflow 64 bits quickly).
Json orders_to_json(const std::vector<OrderRow> &rows);
/// Whitespace-aligned table with the same fields as orders_to_json.
std::string orders_to_text(const std::vector<OrderRow> &rows);

/// With include_basis, each subspace carries its support (basis-state indices) and one real
/// coefficient list per basis vector, aligned with the support.
Json to_json(const Decomposition &dec, bool include_basis = true);
Json to_json(const DimensionTable &table);
Json to_json(const BlockReport &report);
Json to_json(const ProtocolConfig &config);
/// Wall time is left out unless requested so that equal runs give equal bytes.
Json to_json(const LeakageReport &report, bool include_wall_time = false);
Json to_json(const IsomorphismReport &report);
Json to_json(const TransitivityReport &report);

/// Reads the fields present in `j` over `base`. Throws std::invalid_argument on bad values.
ProtocolConfig protocol_config_from_json(const Json &j, ProtocolConfig base = {});

/// label,k,index,ket,re,im rows for every nonzero basis coefficient.
std::string decomposition_csv(const Decomposition &dec);
/// Dense matrix, one row per line.
std::string matrix_csv(const Eigen::MatrixXd &m);
/// gates,mean,stddev,max rows.
std::string curves_csv(const LeakageReport &report);

/// Plain (P2) grayscale PGM of log(1+|x|) scaled to [0, 255], brightest = largest entry.
std::string heatmap_pgm(const Eigen::MatrixXd &m);

}  // namespace qinv

#endif
