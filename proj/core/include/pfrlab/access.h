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

#ifndef PFRLAB_ACCESS_H_
#define PFRLAB_ACCESS_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "pfrlab/bitvec.h"
#include "pfrlab/linear_map.h"
#include "pfrlab/point_set.h"
#include "pfrlab/rng.h"
#include "pfrlab/subspace.h"

namespace pfrlab {

// Query access to the indicator of a set in F_2^n.
class MembershipAccess {
 public:
  virtual ~MembershipAccess() = default;
  virtual std::size_t ambient() const = 0;
  virtual bool Query(const BitVec& x) = 0;
};

// Membership and sampling access to an explicit set. The set itself is not
// exposed; every answer goes through a counted call.
class MembershipOracle : public MembershipAccess {
 public:
  explicit MembershipOracle(PointSet set) : set_(std::move(set)) {}
  MembershipOracle(const MembershipOracle&) = delete;
  MembershipOracle& operator=(const MembershipOracle&) = delete;

  std::size_t ambient() const override { return set_.ambient(); }
  // Throws kDimensionMismatch.
  bool Query(const BitVec& x) override;
  // Uniform element of the set. Throws kEmptyInput.
  BitVec Sample(Rng& rng);

  uint64_t membership_queries() const { return queries_.load(); }
  uint64_t sample_draws() const { return samples_.load(); }

 private:
  PointSet set_;
  std::atomic<uint64_t> queries_{0};
  std::atomic<uint64_t> samples_{0};
};

// Indicator of A intersected with U. Each call costs exactly one query to the
// underlying oracle, whether or not x lies in U.
class LocalizedOracle : public MembershipAccess {
 public:
  LocalizedOracle(MembershipAccess& base, Subspace u);

  std::size_t ambient() const override { return base_.ambient(); }
  bool Query(const BitVec& x) override;
  const Subspace& subspace() const { return u_; }

 private:
  MembershipAccess& base_;
  Subspace u_;
};

// A function defined on part of F_2^m with values in F_2^n.
class PartialFunction {
 public:
  virtual ~PartialFunction() = default;
  virtual std::size_t domain_dim() const = 0;
  virtual std::size_t codomain_dim() const = 0;
  // f(x), or nullopt when x is outside the domain of definition.
  virtual std::optional<BitVec> Eval(const BitVec& x) = 0;
};

inline constexpr std::size_t kDefaultKernelCap = 20;

// The dense model S = pi(A') in F_2^m together with f = pi^{-1} on S, both
// answered by scanning fibers pi^{-1}(x) = preimage(x) + ker through the A'
// oracle. Scanning an in-image fiber costs 2^{dim ker} oracle queries; a
// point outside pi(U) has an empty fiber and costs nothing.
class SFAccess : public PartialFunction {
 public:
  // Throws kKernelCapExceeded if dim ker(pi|_U) > kernel_cap.
  SFAccess(LinearMap pi, const Subspace& u, MembershipAccess& a_oracle,
           std::size_t kernel_cap = kDefaultKernelCap);

  std::size_t domain_dim() const override { return pi_.codomain_dim(); }
  std::size_t codomain_dim() const override { return pi_.domain_dim(); }

  // Whether the fiber over x meets A.
  bool QueryS(const BitVec& x);
  // The unique member of A in the fiber over x, or nullopt if there is none.
  // Throws kIsoViolation if the fiber holds two or more members.
  std::optional<BitVec> QueryF(const BitVec& x);
  // QueryF answered from a single fiber scan.
  std::optional<BitVec> Eval(const BitVec& x) override { return QueryF(x); }

  const LinearMap& pi() const { return pi_; }
  const Subspace& kernel() const { return inverse_.kernel(); }
  const RestrictedInverse& inverse() const { return inverse_; }
  // Number of in-image fibers scanned so far; the A' oracle has been queried
  // fiber_scans() * 2^{dim kernel} times by this object.
  uint64_t fiber_scans() const { return scans_.load(); }
  uint64_t queries_per_scan() const { return uint64_t{1} << kernel().dim(); }

 private:
  // Up to two members of A in the fiber over x; the count saturates at 2.
  std::size_t ScanFiber(const BitVec& x, BitVec* first);

  LinearMap pi_;
  RestrictedInverse inverse_;
  MembershipAccess& oracle_;
  std::size_t kernel_cap_;
  std::atomic<uint64_t> scans_{0};
};

}  // namespace pfrlab

#endif  // PFRLAB_ACCESS_H_
