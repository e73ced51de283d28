// audio/manifest.cc

// Copyright 2026  Daptain Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "audio/manifest.h"

#include <filesystem>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "util/error.h"

namespace daptain {

namespace fs = std::filesystem;
using nlohmann::json;

std::string Manifest::Resolve(const std::string& rel) const {
  fs::path p(rel);
  if (p.is_absolute()) return rel;
  return (fs::path(dir) / p).string();
}

std::vector<MixtureRecord> Manifest::Split(const std::string& split) const {
  std::vector<MixtureRecord> out;
  for (const MixtureRecord& r : records) {
    if (r.split == split) out.push_back(r);
  }
  return out;
}

Manifest ReadManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest: " + path);

  static const std::set<std::string> kKeys = {
      "id",         "clean_path", "noise_path", "mixture_path",
      "noise_name", "snr_db",     "split",      "domain"};

  Manifest m;
  m.dir = fs::path(path).parent_path().string();
  if (m.dir.empty()) m.dir = ".";

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw IoError("manifest " + path + " line " + std::to_string(line_no) +
                    ": " + e.what());
    }
    if (!j.is_object()) {
      throw IoError("manifest " + path + " line " + std::to_string(line_no) +
                    ": expected an object");
    }
    for (const auto& item : j.items()) {
      if (kKeys.count(item.key()) == 0) {
        throw IoError("manifest " + path + " line " + std::to_string(line_no) +
                      ": unknown key '" + item.key() + "'");
      }
    }
    for (const std::string& k : kKeys) {
      if (!j.contains(k)) {
        throw IoError("manifest " + path + " line " + std::to_string(line_no) +
                      ": missing key '" + k + "'");
      }
    }
    MixtureRecord r;
    try {
      r.id = j.at("id").get<std::string>();
      r.clean_path = j.at("clean_path").get<std::string>();
      r.noise_path = j.at("noise_path").get<std::string>();
      r.mixture_path = j.at("mixture_path").get<std::string>();
      r.noise_name = j.at("noise_name").get<std::string>();
      r.snr_db = j.at("snr_db").get<double>();
      r.split = j.at("split").get<std::string>();
      r.domain = j.at("domain").get<std::string>();
    } catch (const json::exception& e) {
      throw IoError("manifest " + path + " line " + std::to_string(line_no) +
                    ": " + e.what());
    }
    m.records.push_back(std::move(r));
  }
  return m;
}

void WriteManifest(const std::string& path, const Manifest& manifest) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open manifest for writing: " + path);
  for (const MixtureRecord& r : manifest.records) {
    json j;
    j["id"] = r.id;
    j["clean_path"] = r.clean_path;
    j["noise_path"] = r.noise_path;
    j["mixture_path"] = r.mixture_path;
    j["noise_name"] = r.noise_name;
    j["snr_db"] = r.snr_db;
    j["split"] = r.split;
    j["domain"] = r.domain;
    out << j.dump() << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace daptain
