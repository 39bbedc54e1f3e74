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

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <stdexcept>

#include "qinv/cli.h"

namespace qinv::cli {

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int k = 0; k < len; k++) {
        out += kHex[digest[k] >> 4];
        out += kHex[digest[k] & 0xf];
    }
    return out;
}

OutputSink::OutputSink(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path OutputSink::write(const std::string &name, const std::string &content) {
    auto path = dir_ / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) {
        throw std::runtime_error("write failed for " + path.string());
    }
    entries_.push_back({name, sha256_hex(content), content.size()});
    return path;
}

std::filesystem::path OutputSink::write_manifest(const std::string &command, const Json &config, uint64_t seed) {
    Json j;
    j["schema"] = kSchemaManifest;
    j["command"] = command;
    j["artifact_version"] = kArtifactVersion;
    j["seed"] = seed;
    j["config"] = config;
    Json files = Json::array();
    for (const auto &e : entries_) {
        files.push_back({{"path", e.name}, {"sha256", e.sha256}, {"bytes", e.bytes}});
    }
    j["files"] = files;
    auto path = dir_ / "manifest.json";
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << j.dump(2) << "\n";
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return path;
}

}  // namespace qinv::cli
