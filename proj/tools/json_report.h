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

#ifndef PFRLAB_TOOLS_JSON_REPORT_H_
#define PFRLAB_TOOLS_JSON_REPORT_H_

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "pfrlab/pfrlab.h"

namespace pfrlab::cli {

using Json = nlohmann::ordered_json;

Json BitStrings(const std::vector<BitVec>& vectors);
// Rows of the matrix as bit strings, row 0 first.
Json MatrixRows(const BitMat& m);

Json ReportJson(const PipelineReport& r);
Json CoverSidecar(const PlantedInstance& inst, uint64_t seed);
Json AffineSidecar(const AffineInstance& inst, uint64_t seed);
Json SmallImageSidecar(const SmallImageInstance& inst, uint64_t seed);

// Parses "basis" and "reps" arrays of bit strings out of a certificate-like
// object (a sidecar or a pipeline report). Throws Error(kParse).
Subspace BasisFromJson(const Json& j, std::size_t n);
std::vector<BitVec> RepsFromJson(const Json& j, std::size_t n);

}  // namespace pfrlab::cli

#endif  // PFRLAB_TOOLS_JSON_REPORT_H_
