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

#ifndef PFRLAB_PFR_H_
#define PFRLAB_PFR_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfrlab/access.h"
#include "pfrlab/bitmat.h"
#include "pfrlab/bitvec.h"
#include "pfrlab/linear_map.h"
#include "pfrlab/point_set.h"
#include "pfrlab/quadfit.h"
#include "pfrlab/rng.h"
#include "pfrlab/setops.h"
#include "pfrlab/subspace.h"

namespace pfrlab {

// ceil(log2 x) for x >= 1.
std::size_t CeilLog2(uint64_t x);
// ceil(28 log2 |A|) + 56 K.
std::size_t DefaultSampleCount(std::size_t set_size, uint64_t k);
// ceil(log2 |A|) + ceil(4 log2 K) + slack.
std::size_t DefaultModelDim(std::size_t set_size, uint64_t k,
                            std::size_t slack);
// ceil(2 d / eps) * ceil(log2(1 / delta)) samples keep at least (1 - eps)|A|
// inside their span with probability 1 - delta, where d = dim span(A).
std::size_t LocalizationSampleCount(std::size_t span_dim, double eps,
                                    double delta);
// Samples for estimating `candidates` means within eps simultaneously with
// the given confidence (two-sided Hoeffding plus a union bound).
std::size_t HoeffdingSampleCount(double eps, double confidence,
                                 std::size_t candidates);

// Span of t samples drawn from the oracle. Throws kParameterRange for t = 0
// and kEmptyInput for an empty set.
Subspace Localize(MembershipOracle& oracle, std::size_t t, Rng& rng);

// The members of the oracle's set inside U, found with 2^{dim U} queries.
// Throws kCapExceeded if dim U > cap.
PointSet EnumerateMembers(const Subspace& u, MembershipAccess& oracle,
                          std::size_t cap = kDefaultEnumerationCap);

struct DenseModelParams {
  std::size_t restarts = 10;
  std::size_t kernel_cap = kDefaultKernelCap;
};

struct DenseModel {
  std::unique_ptr<SFAccess> sf;
  std::size_t attempts = 0;
  // Whether the isomorphism was certified against an explicit A'.
  bool exact_checked = false;
};

// Draws random maps pi: U -> F_2^m until one is accepted, at most
// 1 + restarts times. With `aprime_explicit` a map is accepted only if it is
// a Freiman isomorphism on it; otherwise the first map whose kernel fits the
// cap is taken and violations surface later as kIsoViolation. Throws
// kModelFailure when every attempt is rejected.
DenseModel BuildDenseModel(const Subspace& u, MembershipAccess& aprime,
                           std::size_t m, Rng& rng,
                           const DenseModelParams& params,
                           const PointSet* aprime_explicit = nullptr);

enum class QuadBackend {
  kAuto,  // exhaustive when the target has m + n <= 6, bilinear otherwise
  kExhaustive,
  kBilinear,
};

struct HomFitConfig {
  QuadBackend backend = QuadBackend::kAuto;
  BilinearFitConfig bilinear;
  // Offset candidates f(x) + M x gathered from points of S.
  std::size_t offset_draws = 64;
  // Draw limit when looking for points of S; 0 means 64 * offset_draws.
  std::size_t draw_cap = 0;
  double estimator_eps = 1.0 / 16;
  double estimator_confidence = 0.9;
  // 0 means HoeffdingSampleCount(eps, confidence, #candidates).
  std::size_t estimator_samples = 0;
};

struct HomFitResult {
  BitMat m;  // n x domain_dim
  BitVec v;
  // Exact #{x in S : f(x) = M x + v}.
  uint64_t agreement = 0;
  std::size_t domain_dim = 0;
  // Dimension of the space the fit was tabulated over.
  std::size_t fit_dim = 0;
  std::size_t candidates = 0;
  std::size_t estimator_samples = 0;
  bool exact_estimates = false;
  QuadBackend backend = QuadBackend::kBilinear;
  // Correlation of the fitted quadratic with g, as the backend reported it.
  double quad_correlation = 0.0;
};

// Finds an affine map agreeing with f on many points of its domain S: fits a
// quadratic to g(x, y) = 1_S(x)(-1)^{f(x).y}, reads the linear part M off its
// bilinear form, collects offsets f(x) + M x at sampled x in S, and keeps the
// offset with the best estimated agreement. If `support` is given it must
// contain S and the fit is tabulated over it instead of all of F_2^m.
// Throws kDensificationFailure if no point of S is drawn, and propagates
// AmbiguityError.
HomFitResult RestrictedHomFit(PartialFunction& f, const HomFitConfig& config,
                              Rng& rng, const Subspace* support = nullptr);

// A subspace of Im(M) with at most `cap` elements: Im(M) itself when it is
// small enough, else its echelon basis with the trailing (lowest-pivot) rows
// dropped. The offset does not affect the result.
Subspace ExtractSubspace(const BitMat& m, const BitVec& offset,
                         std::size_t cap);

struct PipelineConfig {
  uint64_t k = 1;
  std::optional<std::size_t> t_override;
  std::size_t m_slack = 10;
  std::optional<std::size_t> m_override;
  // Known |A| or an upper bound; the explicit set size when absent.
  std::optional<std::size_t> set_size;
  // Global restarts after a retriable stage failure; also the per-call
  // restart budget of the dense model.
  std::size_t restarts = 10;
  std::size_t kernel_cap = kDefaultKernelCap;
  // A' is enumerated through the oracle to certify pi when dim U <= this.
  std::size_t iso_enum_dim_cap = 16;
  HomFitConfig fit;
  // Success additionally requires cover_size <= max_cover when set.
  std::optional<std::size_t> max_cover;
  uint64_t seed = 1;
  bool timings = false;
};

struct StageTimes {
  double localize = 0;
  double model = 0;
  double fit = 0;
  double extract = 0;
  double cover = 0;
};

struct PipelineReport {
  std::size_t n = 0;
  uint64_t k = 0;
  std::size_t m = 0;
  std::size_t t = 0;
  std::size_t set_size = 0;
  std::size_t dim_u = 0;
  std::size_t dim_v = 0;
  std::size_t dim_image = 0;
  CoverCertificate certificate;
  bool success = false;
  uint64_t samples = 0;
  uint64_t membership_queries = 0;
  // Queries predicted from A' enumeration plus fiber scans; equal to
  // membership_queries when the accounting is exact.
  uint64_t expected_queries = 0;
  bool accounting_ok = false;
  std::size_t restarts = 0;
  std::size_t model_attempts = 0;
  uint64_t seed = 0;
  uint64_t agreement = 0;
  std::size_t patch_size = 0;
  std::size_t ruzsa_size = 0;
  // |X| * [Im M : V], the size the covering argument guarantees.
  uint64_t cover_bound = 0;
  // "<code>: <message>" of the last stage failure; empty if none.
  std::string error;
  std::optional<StageTimes> stage_ms;
};

// Runs localize -> dense model -> restricted homomorphism fit -> subspace
// extraction against a membership oracle built over `a`, then builds and
// verifies the covering. The explicit set is only used for the final audit.
PipelineReport RunPipeline(const PointSet& a, const PipelineConfig& config);

}  // namespace pfrlab

#endif  // PFRLAB_PFR_H_
