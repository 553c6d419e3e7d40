/*
 * Copyright 2026 The pfrlab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "json_report.h"

#include <string>

namespace pfrlab::cli {
namespace {

std::vector<BitVec> ParseBitArray(const Json& j, const char* key,
                                  std::size_t n) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw Error(ErrorCode::kParse,
                std::string("certificate lacks an array '") + key + "'");
  }
  std::vector<BitVec> out;
  for (const auto& item : j[key]) {
    if (!item.is_string()) {
      throw Error(ErrorCode::kParse,
                  std::string("'") + key + "' must hold bit strings");
    }
    const std::string s = item.get<std::string>();
    if (s.size() != n) {
      throw Error(ErrorCode::kParse, std::string("'") + key +
                                         "' entry has length " +
                                         std::to_string(s.size()) +
                                         ", expected " + std::to_string(n));
    }
    out.push_back(BitVec::FromString(s));
  }
  return out;
}

}  // namespace

Json BitStrings(const std::vector<BitVec>& vectors) {
  Json out = Json::array();
  for (const BitVec& v : vectors) out.push_back(v.ToString());
  return out;
}

Json MatrixRows(const BitMat& m) {
  Json out = Json::array();
  for (const BitVec& row : m.row_vectors()) out.push_back(row.ToString());
  return out;
}

Json ReportJson(const PipelineReport& r) {
  Json j;
  j["n"] = r.n;
  j["K"] = r.k;
  j["m"] = r.m;
  j["dimU"] = r.dim_u;
  j["dimV"] = r.dim_v;
  j["cover_size"] = r.certificate.cover_size;
  j["covered"] = r.certificate.covered;
  j["success"] = r.success;
  j["samples"] = r.samples;
  j["membership_queries"] = r.membership_queries;
  j["restarts"] = r.restarts;
  j["seed"] = r.seed;
  if (r.stage_ms) {
    j["stage_ms"] = {{"localize", r.stage_ms->localize},
                     {"model", r.stage_ms->model},
                     {"fit", r.stage_ms->fit},
                     {"extract", r.stage_ms->extract},
                     {"cover", r.stage_ms->cover}};
  } else {
    j["stage_ms"] = nullptr;
  }
  j["set_size"] = r.set_size;
  j["t"] = r.t;
  j["agreement"] = r.agreement;
  j["model_attempts"] = r.model_attempts;
  j["queries_accounted"] = r.accounting_ok;
  j["ruzsa_size"] = r.ruzsa_size;
  j["cover_bound"] = r.cover_bound;
  j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
  j["basis"] = BitStrings(r.certificate.subspace.basis());
  j["reps"] = BitStrings(r.certificate.reps);
  return j;
}

Json CoverSidecar(const PlantedInstance& inst, uint64_t seed) {
  Json j;
  j["kind"] = "cover";
  j["n"] = inst.n;
  j["dimV"] = inst.dim_v;
  j["cosets"] = inst.cosets;
  j["basis"] = BitStrings(inst.hidden_v.basis());
  j["reps"] = BitStrings(inst.hidden_reps);
  j["noise"] = inst.noise;
  j["replaced"] = inst.replaced;
  j["seed"] = seed;
  j["doubling"] = inst.doubling;
  return j;
}

Json AffineSidecar(const AffineInstance& inst, uint64_t seed) {
  Json j;
  j["kind"] = "affine";
  j["m"] = inst.f.domain_dim();
  j["n"] = inst.f.codomain_dim();
  j["rho"] = inst.rho;
  j["planted"] = inst.planted;
  j["M"] = MatrixRows(inst.m);
  j["v"] = inst.v.ToString();
  j["seed"] = seed;
  return j;
}

Json SmallImageSidecar(const SmallImageInstance& inst, uint64_t seed) {
  Json j;
  j["kind"] = "smallimage";
  j["m"] = inst.f.domain_dim();
  j["n"] = inst.f.codomain_dim();
  j["imgk"] = inst.imgk;
  j["M"] = MatrixRows(inst.m);
  j["image_basis"] = BitStrings(inst.w.basis());
  j["seed"] = seed;
  return j;
}

Subspace BasisFromJson(const Json& j, std::size_t n) {
  const std::vector<BitVec> rows = ParseBitArray(j, "basis", n);
  return Subspace::Span(rows, n);
}

std::vector<BitVec> RepsFromJson(const Json& j, std::size_t n) {
  return ParseBitArray(j, "reps", n);
}

}  // namespace pfrlab::cli
