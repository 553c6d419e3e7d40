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

#include "pfrlab/access.h"

#include <string>
#include <utility>

#include "pfrlab/error.h"

namespace pfrlab {

bool MembershipOracle::Query(const BitVec& x) {
  queries_.fetch_add(1);
  return set_.Contains(x);
}

BitVec MembershipOracle::Sample(Rng& rng) {
  samples_.fetch_add(1);
  return set_.Sample(rng);
}

LocalizedOracle::LocalizedOracle(MembershipAccess& base, Subspace u)
    : base_(base), u_(std::move(u)) {
  if (u_.ambient() != base_.ambient()) {
    ThrowDimensionMismatch(base_.ambient(), u_.ambient(), "LocalizedOracle");
  }
}

bool LocalizedOracle::Query(const BitVec& x) {
  const bool member = base_.Query(x);
  return member && u_.Contains(x);
}

SFAccess::SFAccess(LinearMap pi, const Subspace& u, MembershipAccess& a_oracle,
                   std::size_t kernel_cap)
    : pi_(std::move(pi)),
      inverse_(pi_, u),
      oracle_(a_oracle),
      kernel_cap_(kernel_cap) {
  if (a_oracle.ambient() != pi_.domain_dim()) {
    ThrowDimensionMismatch(pi_.domain_dim(), a_oracle.ambient(), "SFAccess");
  }
  if (inverse_.kernel().dim() > kernel_cap_) {
    throw Error(ErrorCode::kKernelCapExceeded,
                "kernel dimension " + std::to_string(inverse_.kernel().dim()) +
                    " exceeds the cap of " + std::to_string(kernel_cap_));
  }
}

std::size_t SFAccess::ScanFiber(const BitVec& x, BitVec* first) {
  const std::optional<BitVec> base = inverse_.Preimage(x);
  if (!base) return 0;
  scans_.fetch_add(1);
  std::size_t hits = 0;
  // Every fiber element is queried even after a hit, so the cost of a scan
  // does not depend on the answer.
  kernel().ForEachInCoset(
      *base,
      [&](const BitVec& y) {
        if (oracle_.Query(y)) {
          if (hits == 0 && first != nullptr) *first = y;
          if (hits < 2) ++hits;
        }
      },
      kernel_cap_);
  return hits;
}

bool SFAccess::QueryS(const BitVec& x) { return ScanFiber(x, nullptr) > 0; }

std::optional<BitVec> SFAccess::QueryF(const BitVec& x) {
  BitVec member;
  const std::size_t hits = ScanFiber(x, &member);
  if (hits == 0) return std::nullopt;
  if (hits > 1) {
    throw Error(ErrorCode::kIsoViolation,
                "fiber over " + x.ToString() +
                    " holds more than one member; pi is not injective on A");
  }
  return member;
}

}  // namespace pfrlab
