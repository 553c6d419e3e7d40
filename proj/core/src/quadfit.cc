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

#include "pfrlab/quadfit.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "pfrlab/wht.h"

namespace pfrlab {
namespace {

// Table() refuses targets whose full (x, y) table exceeds this dimension.
constexpr std::size_t kMaxTableBits = 26;

int64_t Abs(int64_t x) { return x < 0 ? -x : x; }

// Reduced echelon basis of a subspace of F_2^m, m <= 64, kept as words.
class WordEchelon {
 public:
  explicit WordEchelon(std::size_t m) : m_(m) {}

  void Insert(uint64_t v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if ((v >> pivots_[k]) & 1U) v ^= rows_[k];
    }
    if (v == 0) return;
    const int p = 63 - std::countl_zero(v);
    for (uint64_t& row : rows_) {
      if ((row >> p) & 1U) row ^= v;
    }
    rows_.push_back(v);
    pivots_.push_back(p);
  }

  bool full() const { return rows_.size() == m_; }

  // The representative of r modulo the annihilator of this subspace whose
  // support lies on the pivots: bit p_k is r . row_k.
  uint64_t Canonical(uint64_t r) const {
    uint64_t out = 0;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      out |= static_cast<uint64_t>(std::popcount(r & rows_[k]) & 1)
             << pivots_[k];
    }
    return out;
  }

 private:
  std::size_t m_;
  std::vector<uint64_t> rows_;
  std::vector<int> pivots_;
};

struct DirectionFit {
  BitVec y;
  uint64_t freq = 0;       // canonical frequency
  int64_t numerator = 0;   // coefficient numerator at freq
  bool resolved = true;
  uint64_t runner_up = 0;  // best non-equivalent frequency inside the window
  int64_t runner_numerator = 0;
};

}  // namespace

CorrelationTarget::CorrelationTarget(PartialFunction& f)
    : CorrelationTarget(f, Subspace::Full(f.domain_dim())) {}

CorrelationTarget::CorrelationTarget(PartialFunction& f, Subspace support)
    : f_(f), support_(std::move(support)) {
  if (support_.ambient() != f_.domain_dim()) {
    ThrowDimensionMismatch(f_.domain_dim(), support_.ambient(),
                           "CorrelationTarget support");
  }
  if (support_.dim() > kMaxTargetDim) {
    throw Error(ErrorCode::kCapExceeded,
                "correlation target of dimension " +
                    std::to_string(support_.dim()) + " exceeds the cap of " +
                    std::to_string(kMaxTargetDim));
  }
  const std::size_t size = std::size_t{1} << support_.dim();
  known_.assign(size, 0);
  cache_.resize(size);
}

BitVec CorrelationTarget::Embed(uint64_t c) const {
  const std::vector<BitVec>& basis = support_.basis();
  const std::size_t d = basis.size();
  if (d == support_.ambient() && d <= 64) return BitVec::FromWord(d, c);
  BitVec x(support_.ambient());
  // Coordinate k belongs to the basis row with the k-th smallest pivot.
  for (std::size_t k = 0; k < d; ++k) {
    if ((c >> k) & 1U) x += basis[d - 1 - k];
  }
  return x;
}

BitMat CorrelationTarget::CoordinateMap() const {
  const std::vector<BitVec>& basis = support_.basis();
  const std::size_t d = basis.size();
  BitMat out(d, support_.ambient());
  for (std::size_t k = 0; k < d; ++k) {
    out.Set(k, static_cast<std::size_t>(basis[d - 1 - k].HighestBit()), true);
  }
  return out;
}

const std::optional<BitVec>& CorrelationTarget::Graph(uint64_t c) {
  if (!known_[c]) {
    cache_[c] = f_.Eval(Embed(c));
    known_[c] = 1;
  }
  return cache_[c];
}

int CorrelationTarget::Eval(uint64_t c, const BitVec& y) {
  const std::optional<BitVec>& fx = Graph(c);
  if (!fx) return 0;
  return fx->Dot(y) ? -1 : 1;
}

std::vector<int8_t> CorrelationTarget::Table() {
  const std::size_t mm = m();
  const std::size_t nn = n();
  if (mm + nn > kMaxTableBits) {
    throw Error(ErrorCode::kCapExceeded,
                "full correlation table needs m + n <= " +
                    std::to_string(kMaxTableBits));
  }
  std::vector<int8_t> out(std::size_t{1} << (mm + nn));
  for (uint64_t y = 0; y < (uint64_t{1} << nn); ++y) {
    const BitVec yv = BitVec::FromWord(nn, y);
    for (uint64_t c = 0; c < (uint64_t{1} << mm); ++c) {
      out[c | (y << mm)] = static_cast<int8_t>(Eval(c, yv));
    }
  }
  return out;
}

double QuadFitResult::correlation() const {
  return std::ldexp(static_cast<double>(numerator),
                    -static_cast<int>(log2_denominator));
}

double BilinearFitResult::correlation() const {
  return std::ldexp(static_cast<double>(agreement),
                    -static_cast<int>(log2_denominator));
}

QuadFitResult ExhaustiveQuadFit(std::span<const int8_t> g, std::size_t d,
                                std::size_t cap) {
  if (d > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "exhaustive quadratic fit allows d <= " + std::to_string(cap) +
                    ", got " + std::to_string(d));
  }
  const std::size_t size = std::size_t{1} << d;
  if (g.size() != size) {
    throw Error(ErrorCode::kParameterRange,
                "correlation table must have 2^d entries");
  }
  for (int8_t v : g) {
    if (v < -1 || v > 1) {
      throw Error(ErrorCode::kParameterRange,
                  "correlation table entries must lie in {-1, 0, 1}");
    }
  }

  // Pair k = (i, j), i < j, in lexicographic order; pair_mask[z] has bit k set
  // when z_i z_j = 1, so the form value at z is parity(form & pair_mask[z]).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  }
  std::vector<uint64_t> pair_mask(size, 0);
  for (std::size_t z = 0; z < size; ++z) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (((z >> pairs[k].first) & 1U) && ((z >> pairs[k].second) & 1U)) {
        pair_mask[z] |= uint64_t{1} << k;
      }
    }
  }

  int64_t best = -1;
  uint64_t best_form = 0;
  uint64_t best_linear = 0;
  bool best_negative = false;
  std::vector<int64_t> twisted(size);
  const uint64_t forms = uint64_t{1} << pairs.size();
  for (uint64_t form = 0; form < forms; ++form) {
    for (std::size_t z = 0; z < size; ++z) {
      const bool flip = std::popcount(form & pair_mask[z]) & 1;
      twisted[z] = flip ? -g[z] : g[z];
    }
    WhtInPlace(twisted);
    for (std::size_t l = 0; l < size; ++l) {
      if (Abs(twisted[l]) > best) {
        best = Abs(twisted[l]);
        best_form = form;
        best_linear = l;
        best_negative = twisted[l] < 0;
      }
    }
  }

  QuadFitResult out;
  out.q = QuadPoly(d);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if ((best_form >> k) & 1U) out.q.SetForm(pairs[k].first, pairs[k].second, true);
  }
  out.q.mutable_linear() = BitVec::FromWord(d, best_linear);
  out.q.set_constant(best_negative);
  out.numerator = best;
  out.log2_denominator = d;
  return out;
}

AmbiguityError::AmbiguityError(BitVec direction, BitVec first, BitVec second,
                               int64_t first_numerator,
                               int64_t second_numerator)
    : Error(ErrorCode::kAmbiguity,
            "direction " + direction.ToString() +
                ": frequencies " + first.ToString() + " (" +
                std::to_string(first_numerator) + ") and " +
                second.ToString() + " (" + std::to_string(second_numerator) +
                ") are within the tie tolerance"),
      direction_(std::move(direction)),
      first_(std::move(first)),
      second_(std::move(second)),
      first_numerator_(first_numerator),
      second_numerator_(second_numerator) {}

BilinearFitResult BilinearQuadFit(CorrelationTarget& target,
                                  const BilinearFitConfig& config, Rng& rng) {
  const std::size_t m = target.m();
  const std::size_t n = target.n();
  const std::size_t size = std::size_t{1} << m;

  BilinearFitResult out;
  out.m = BitMat(n, m);
  out.v = BitVec(n);
  out.log2_denominator = m;

  std::vector<uint64_t> support;
  for (uint64_t c = 0; c < size; ++c) {
    if (target.Graph(c)) support.push_back(c);
  }
  if (support.empty()) {
    out.q = QuadPoly::Bilinear(out.m, out.v);
    return out;
  }

  // Frequencies r, r' give characters that agree up to sign on S exactly when
  // r + r' annihilates the difference space of S.
  WordEchelon diffs(m);
  for (uint64_t s : support) {
    if (diffs.full()) break;
    diffs.Insert(s ^ support.front());
  }

  // Coefficients within 2 sqrt(|S|) of the top (2^{-m/2+1} in normalized
  // units when S is everything) count as ties.
  const auto window_sq = static_cast<int64_t>(4 * support.size());

  std::vector<BitVec> directions;
  for (std::size_t i = 0; i < n; ++i) directions.push_back(BitVec::Unit(n, i));
  for (std::size_t i = 0; i < config.extra_directions && n > 0; ++i) {
    BitVec y = BitVec::Random(n, rng);
    if (!y.IsZero()) directions.push_back(std::move(y));
  }

  std::vector<DirectionFit> fits;
  fits.reserve(directions.size());
  std::vector<int64_t> table(size);
  for (const BitVec& y : directions) {
    std::fill(table.begin(), table.end(), 0);
    for (uint64_t s : support) table[s] = target.Eval(s, y);
    WhtInPlace(table);

    uint64_t top = 0;
    for (uint64_t r = 1; r < size; ++r) {
      if (Abs(table[r]) > Abs(table[top])) top = r;
    }
    DirectionFit fit;
    fit.y = y;
    fit.freq = diffs.Canonical(top);
    fit.numerator = table[fit.freq];
    const int64_t peak = Abs(table[top]);
    int64_t runner = -1;
    // A class that matches the slice on all of S has no rival; only
    // imperfect peaks go through the window.
    const bool perfect = peak == static_cast<int64_t>(support.size());
    for (uint64_t r = 0; r < size && !perfect; ++r) {
      const int64_t gap = peak - Abs(table[r]);
      if (gap * gap > window_sq) continue;
      if (diffs.Canonical(r) == fit.freq) continue;
      fit.resolved = false;
      if (Abs(table[r]) > runner) {
        runner = Abs(table[r]);
        fit.runner_up = r;
        fit.runner_numerator = table[r];
      }
    }
    fits.push_back(std::move(fit));
  }

  std::vector<std::size_t> order(fits.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (fits[a].resolved != fits[b].resolved) return fits[a].resolved;
    return Abs(fits[a].numerator) > Abs(fits[b].numerator);
  });

  // Each accepted direction y contributes the row (y | M^T y, v . y); once n
  // independent directions are in, the reduced rows are (e_p | row p of M,
  // v_p).
  AugmentedEchelon basis(n, m + 1);
  for (std::size_t idx : order) {
    if (basis.rank() == n) break;
    const DirectionFit& fit = fits[idx];
    const uint64_t payload =
        fit.freq | (static_cast<uint64_t>(fit.numerator < 0) << m);
    if (!basis.Insert(fit.y, BitVec::FromWord(m + 1, payload))) continue;
    if (!fit.resolved) {
      if (config.ties == TiePolicy::kReject) {
        throw AmbiguityError(fit.y, BitVec::FromWord(m, fit.freq),
                             BitVec::FromWord(m, fit.runner_up), fit.numerator,
                             fit.runner_numerator);
      }
      ++out.unresolved_used;
    }
  }
  for (const auto& row : basis.rows()) {
    const auto p = static_cast<std::size_t>(row.pivot);
    out.m.mutable_row(p) = row.payload.Slice(0, m);
    out.v.Set(p, row.payload.Get(m));
  }

  for (uint64_t s : support) {
    const BitVec x = BitVec::FromWord(m, s);
    if (*target.Graph(s) == out.m.Apply(x) + out.v) ++out.agreement;
  }
  out.q = QuadPoly::Bilinear(out.m, out.v);
  return out;
}

}  // namespace pfrlab
