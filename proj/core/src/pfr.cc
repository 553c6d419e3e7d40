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

#include "pfrlab/pfr.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "pfrlab/error.h"
#include "pfrlab/wide.h"

namespace pfrlab {
namespace {

std::size_t CeilLog2Wide(Uint128 x) {
  std::size_t bits = 0;
  Uint128 v = x - 1;
  while (v != 0) {
    v >>= 1;
    ++bits;
  }
  return bits;
}

class StageClock {
 public:
  double Lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ =
      std::chrono::steady_clock::now();
};

std::string Describe(const Error& e) {
  return std::string(ErrorCodeName(e.code())) + ": " + e.what();
}

}  // namespace

std::size_t CeilLog2(uint64_t x) {
  if (x == 0) throw Error(ErrorCode::kParameterRange, "log of zero");
  return CeilLog2Wide(x);
}

std::size_t DefaultSampleCount(std::size_t set_size, uint64_t k) {
  if (set_size == 0) throw Error(ErrorCode::kEmptyInput, "empty set");
  const double logs = 28.0 * std::log2(static_cast<double>(set_size));
  return static_cast<std::size_t>(std::ceil(logs)) + 56 * k;
}

std::size_t DefaultModelDim(std::size_t set_size, uint64_t k,
                            std::size_t slack) {
  if (set_size == 0) throw Error(ErrorCode::kEmptyInput, "empty set");
  if (k == 0) {
    throw Error(ErrorCode::kParameterRange, "doubling bound must be >= 1");
  }
  const Uint128 k2 = static_cast<Uint128>(k) * k;
  return CeilLog2(set_size) + CeilLog2Wide(k2 * k2) + slack;
}

std::size_t LocalizationSampleCount(std::size_t span_dim, double eps,
                                    double delta) {
  if (!(eps > 0.0) || !(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kParameterRange,
                "localization needs eps > 0 and 0 < delta < 1");
  }
  const double per_round = std::ceil(2.0 * static_cast<double>(span_dim) / eps);
  const double rounds = std::ceil(std::log2(1.0 / delta));
  return static_cast<std::size_t>(per_round * rounds);
}

std::size_t HoeffdingSampleCount(double eps, double confidence,
                                 std::size_t candidates) {
  if (!(eps > 0.0) || !(confidence > 0.0 && confidence < 1.0)) {
    throw Error(ErrorCode::kParameterRange,
                "estimator needs eps > 0 and 0 < confidence < 1");
  }
  const double c = static_cast<double>(std::max<std::size_t>(candidates, 1));
  return static_cast<std::size_t>(
      std::ceil(std::log(2.0 * c / (1.0 - confidence)) / (2.0 * eps * eps)));
}

Subspace Localize(MembershipOracle& oracle, std::size_t t, Rng& rng) {
  if (t == 0) throw Error(ErrorCode::kParameterRange, "need t >= 1 samples");
  Subspace u(oracle.ambient());
  for (std::size_t i = 0; i < t; ++i) u.Insert(oracle.Sample(rng));
  return u;
}

PointSet EnumerateMembers(const Subspace& u, MembershipAccess& oracle,
                          std::size_t cap) {
  PointSet out(u.ambient());
  u.ForEachInCoset(
      BitVec(u.ambient()),
      [&](const BitVec& x) {
        if (oracle.Query(x)) out.Insert(x);
      },
      cap);
  return out;
}

DenseModel BuildDenseModel(const Subspace& u, MembershipAccess& aprime,
                           std::size_t m, Rng& rng,
                           const DenseModelParams& params,
                           const PointSet* aprime_explicit) {
  DenseModel out;
  out.exact_checked = aprime_explicit != nullptr;
  std::string last = "no attempt made";
  for (std::size_t attempt = 0; attempt <= params.restarts; ++attempt) {
    ++out.attempts;
    LinearMap pi = RandomLinearMap(u, m, rng);
    if (aprime_explicit != nullptr) {
      const IsoCheckResult check = FreimanIsoCheck(pi, *aprime_explicit);
      if (!check.isomorphic) {
        last = "kernel meets 4A' at " + check.witness->ToString();
        continue;
      }
    }
    try {
      out.sf = std::make_unique<SFAccess>(std::move(pi), u, aprime,
                                          params.kernel_cap);
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kKernelCapExceeded) throw;
      last = e.what();
    }
  }
  throw Error(ErrorCode::kModelFailure,
              "no acceptable dense model after " +
                  std::to_string(out.attempts) + " attempts (" + last + ")");
}

HomFitResult RestrictedHomFit(PartialFunction& f, const HomFitConfig& config,
                              Rng& rng, const Subspace* support) {
  CorrelationTarget target =
      support != nullptr ? CorrelationTarget(f, *support) : CorrelationTarget(f);
  const std::size_t mc = target.m();
  const std::size_t n = target.n();
  const std::size_t size = std::size_t{1} << mc;

  HomFitResult out;
  out.domain_dim = f.domain_dim();
  out.fit_dim = mc;
  out.backend = config.backend;
  if (out.backend == QuadBackend::kAuto) {
    out.backend =
        mc + n <= 6 ? QuadBackend::kExhaustive : QuadBackend::kBilinear;
  }

  BitMat mc_matrix;
  BitVec v_quad;
  if (out.backend == QuadBackend::kExhaustive) {
    const std::vector<int8_t> table = target.Table();
    const QuadFitResult fit = ExhaustiveQuadFit(table, mc + n);
    mc_matrix = QuadToBilinear(fit.q, mc, n);
    v_quad = fit.q.linear().Slice(mc, n);
    out.quad_correlation = fit.correlation();
  } else {
    const BilinearFitResult fit = BilinearQuadFit(target, config.bilinear, rng);
    mc_matrix = fit.m;
    v_quad = fit.v;
    out.quad_correlation = fit.correlation();
  }

  // Offset candidates: the quadratic's own y-linear part, then f(x) + M x at
  // sampled points of S.
  std::vector<BitVec> candidates{v_quad};
  std::unordered_set<BitVec, BitVecHash> seen{v_quad};
  const std::size_t draw_cap =
      config.draw_cap != 0 ? config.draw_cap : 64 * config.offset_draws;
  std::size_t hits = 0;
  for (std::size_t draw = 0; draw < draw_cap && hits < config.offset_draws;
       ++draw) {
    const uint64_t c = rng.Below(size);
    const std::optional<BitVec>& fx = target.Graph(c);
    if (!fx) continue;
    ++hits;
    BitVec d = *fx + mc_matrix.Apply(BitVec::FromWord(mc, c));
    if (seen.insert(d).second) candidates.push_back(std::move(d));
  }
  if (hits == 0) {
    throw Error(ErrorCode::kDensificationFailure,
                "no point of S among " + std::to_string(draw_cap) + " draws");
  }
  out.candidates = candidates.size();

  // Shared-sample estimate of each candidate's agreement; exhaustive when the
  // domain is no larger than the sample budget.
  const std::size_t budget =
      config.estimator_samples != 0
          ? config.estimator_samples
          : HoeffdingSampleCount(config.estimator_eps,
                                 config.estimator_confidence,
                                 candidates.size());
  std::unordered_map<BitVec, uint64_t, BitVecHash> votes;
  auto tally = [&](uint64_t c) {
    const std::optional<BitVec>& fx = target.Graph(c);
    if (!fx) return;
    ++votes[*fx + mc_matrix.Apply(BitVec::FromWord(mc, c))];
  };
  out.exact_estimates = size <= budget;
  if (out.exact_estimates) {
    out.estimator_samples = size;
    for (uint64_t c = 0; c < size; ++c) tally(c);
  } else {
    out.estimator_samples = budget;
    for (std::size_t i = 0; i < budget; ++i) tally(rng.Below(size));
  }
  std::size_t best = 0;
  uint64_t best_votes = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto it = votes.find(candidates[i]);
    const uint64_t count = it == votes.end() ? 0 : it->second;
    if (count > best_votes) {
      best_votes = count;
      best = i;
    }
  }
  const BitVec& v = candidates[best];

  out.agreement = 0;
  for (uint64_t c = 0; c < size; ++c) {
    const std::optional<BitVec>& fx = target.Graph(c);
    if (fx && *fx == mc_matrix.Apply(BitVec::FromWord(mc, c)) + v) {
      ++out.agreement;
    }
  }
  out.m = mc_matrix * target.CoordinateMap();
  out.v = v;
  return out;
}

Subspace ExtractSubspace(const BitMat& m, const BitVec& offset,
                         std::size_t cap) {
  if (offset.dim() != m.rows()) {
    ThrowDimensionMismatch(m.rows(), offset.dim(), "ExtractSubspace");
  }
  if (cap == 0) {
    throw Error(ErrorCode::kParameterRange, "subspace size cap must be >= 1");
  }
  const Subspace image = ImageBasis(m);
  const auto max_dim = static_cast<std::size_t>(std::bit_width(cap) - 1);
  if (image.dim() <= max_dim) return image;
  return image.Truncated(max_dim);
}

PipelineReport RunPipeline(const PointSet& a, const PipelineConfig& config) {
  PipelineReport report;
  report.n = a.ambient();
  report.k = config.k;
  report.seed = config.seed;
  report.certificate.subspace = Subspace(a.ambient());
  if (a.empty()) throw Error(ErrorCode::kEmptyInput, "input set is empty");
  if (config.k == 0) {
    throw Error(ErrorCode::kParameterRange, "doubling bound must be >= 1");
  }

  report.set_size = config.set_size.value_or(a.size());
  report.t = config.t_override.value_or(
      DefaultSampleCount(report.set_size, config.k));
  report.m = config.m_override.value_or(
      DefaultModelDim(report.set_size, config.k, config.m_slack));

  MembershipOracle oracle(a);
  Rng rng(config.seed);
  StageClock clock;
  StageTimes times;

  const Subspace u = Localize(oracle, report.t, rng);
  report.dim_u = u.dim();
  LocalizedOracle aprime(oracle, u);
  times.localize = clock.Lap();

  std::optional<PointSet> aprime_explicit;
  if (u.dim() <= config.iso_enum_dim_cap) {
    aprime_explicit = EnumerateMembers(u, aprime, config.iso_enum_dim_cap);
    report.expected_queries += uint64_t{1} << u.dim();
  }

  DenseModelParams model_params;
  model_params.restarts = config.restarts;
  model_params.kernel_cap = config.kernel_cap;

  std::optional<HomFitResult> fit;
  Subspace v(a.ambient());
  for (std::size_t attempt = 0;; ++attempt) {
    std::unique_ptr<SFAccess> sf;
    try {
      DenseModel model =
          BuildDenseModel(u, aprime, report.m, rng, model_params,
                          aprime_explicit ? &*aprime_explicit : nullptr);
      report.model_attempts += model.attempts;
      sf = std::move(model.sf);
      times.model += clock.Lap();

      fit = RestrictedHomFit(*sf, config.fit, rng, &sf->inverse().image());
      report.expected_queries += sf->fiber_scans() * sf->queries_per_scan();
      times.fit += clock.Lap();
      break;
    } catch (const Error& e) {
      if (sf) {
        report.expected_queries += sf->fiber_scans() * sf->queries_per_scan();
      }
      report.error = Describe(e);
      if (!e.retriable() || attempt >= config.restarts) {
        report.samples = oracle.sample_draws();
        report.membership_queries = oracle.membership_queries();
        report.accounting_ok =
            report.membership_queries == report.expected_queries;
        if (config.timings) report.stage_ms = times;
        return report;
      }
      ++report.restarts;
    }
  }
  report.error.clear();
  report.agreement = fit->agreement;

  v = ExtractSubspace(fit->m, fit->v, report.set_size);
  report.dim_v = v.dim();
  times.extract = clock.Lap();

  report.samples = oracle.sample_draws();
  report.membership_queries = oracle.membership_queries();
  report.accounting_ok = report.membership_queries == report.expected_queries;

  // Audit against the explicit set. The patch A cap (v + Im M) covers A with
  // |X| translates of 2 * patch, and 2 * patch lies in Im M, so every point
  // of A sits in x + c + V for some x in X and coset c of V inside Im M. The
  // representatives kept are the canonical ones of those translates that
  // actually contain a point.
  const Subspace image = ImageBasis(fit->m);
  report.dim_image = image.dim();
  PointSet patch(a.ambient());
  for (const BitVec& x : a) {
    if (image.Contains(x + fit->v)) patch.Insert(x);
  }
  report.patch_size = patch.size();
  std::vector<BitVec> reps;
  if (!patch.empty()) {
    const RuzsaCoverResult cover = RuzsaCover(patch, a);
    report.ruzsa_size = cover.x.size();
    const std::size_t index_log = image.dim() - v.dim();
    report.cover_bound =
        index_log >= 64 - std::bit_width(cover.x.size())
            ? UINT64_MAX
            : static_cast<uint64_t>(cover.x.size()) << index_log;
    std::unordered_set<BitVec, BitVecHash> kept;
    for (const BitVec& x : a) {
      BitVec rep = v.Reduce(x);
      if (kept.count(rep) != 0) continue;
      const bool in_fold = std::any_of(
          cover.x.begin(), cover.x.end(),
          [&](const BitVec& t) { return image.Contains(rep + t); });
      if (in_fold) kept.insert(std::move(rep));
    }
    reps.assign(kept.begin(), kept.end());
    std::sort(reps.begin(), reps.end());
  }
  report.certificate = VerifyCover(a, v, std::move(reps));
  times.cover = clock.Lap();

  const bool small_v = v.dim() < 64 && (uint64_t{1} << v.dim()) <= a.size();
  report.success = report.certificate.covered && small_v &&
                   (!config.max_cover ||
                    report.certificate.cover_size <= *config.max_cover);
  if (config.timings) report.stage_ms = times;
  return report;
}

}  // namespace pfrlab
