// Copyright 2026 The bqc-workbench Authors
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

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "bqc/errors.hpp"
#include "bqc/simcore/gate.hpp"

namespace bqc {

/// Default amplitude cap: 2^24 complex doubles = 256 MiB.
inline constexpr int kDefaultQubitCap = 24;

/// Dense amplitude vector over n qubits. Wire 0 is the most significant bit
/// of the basis index.
template <typename Real>
class StateVectorT {
 public:
  using Scalar = std::complex<Real>;
  using Amplitudes = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  StateVectorT() = default;

  /// |0...0> on num_qubits wires.
  explicit StateVectorT(int num_qubits, int cap = kDefaultQubitCap) : cap_(cap) {
    if (num_qubits < 1) throw ArgumentError("state needs at least one qubit");
    check_cap(num_qubits);
    n_ = num_qubits;
    amps_ = Amplitudes::Zero(Eigen::Index(1) << n_);
    amps_(0) = Scalar(1);
  }

  static StateVectorT from_amplitudes(Amplitudes amps, int cap = kDefaultQubitCap) {
    const auto len = amps.size();
    int n = 0;
    while ((Eigen::Index(1) << n) < len) ++n;
    if (n < 1 || (Eigen::Index(1) << n) != len) throw ArgumentError("amplitude count must be a power of two >= 2");
    StateVectorT s;
    s.cap_ = cap;
    s.check_cap(n);
    s.n_ = n;
    s.amps_ = std::move(amps);
    return s;
  }

  int num_qubits() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }
  Eigen::Index dimension() const noexcept { return amps_.size(); }
  const Amplitudes& amplitudes() const noexcept { return amps_; }
  Amplitudes& amplitudes() noexcept { return amps_; }
  Scalar operator[](Eigen::Index i) const { return amps_(i); }

  Real norm_squared() const { return amps_.squaredNorm(); }
  void normalize() { amps_ /= std::sqrt(norm_squared()); }

  /// Bit mask of a wire inside the basis index.
  std::uint64_t mask(int wire) const {
    check_wire(wire);
    return std::uint64_t(1) << (n_ - 1 - wire);
  }

  void check_wire(int wire) const {
    if (wire < 0 || wire >= n_)
      throw IndexError("wire " + std::to_string(wire) + " outside 0.." + std::to_string(n_ - 1));
  }

  /// Applies a 2x2 matrix on one wire, optionally conditioned on every bit of
  /// control_mask being set.
  void apply_matrix(const Matrix2<Real>& u, int wire, std::uint64_t control_mask = 0) {
    const std::uint64_t m = mask(wire);
    const Scalar u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    const Scalar zero(0), one(1);
    if (u01 == zero && u10 == zero) {
      if (u00 != one) apply_phase_where(control_mask, m, u00);
      if (u11 != one) apply_phase(control_mask | m, u11);
      return;
    }
    if (u00 == zero && u11 == zero && u01 == one && u10 == one) {
      for_each_set(control_mask | m, [&](std::uint64_t j) { std::swap(amps_(j ^ m), amps_(j)); });
      return;
    }
    for_each_set(control_mask | m, [&](std::uint64_t j) {
      const std::uint64_t i = j ^ m;
      const Scalar a0 = amps_(i);
      const Scalar a1 = amps_(j);
      amps_(i) = mul(u00, a0) + mul(u01, a1);
      amps_(j) = mul(u10, a0) + mul(u11, a1);
    });
  }

  /// Visits every basis index whose bits include all of fixed.
  template <typename F>
  void for_each_set(std::uint64_t fixed, F&& f) const {
    const auto dim = static_cast<std::uint64_t>(amps_.size());
    for (std::uint64_t i = fixed; i < dim; i = ((i | fixed) + 1) | fixed) f(i);
  }

  /// Multiplies every basis amplitude where all bits of mask_all are set.
  void apply_phase(std::uint64_t mask_all, Scalar phase) {
    for_each_set(mask_all, [&](std::uint64_t i) { amps_(i) = mul(phase, amps_(i)); });
  }

  void apply_swap(int a, int b) {
    const std::uint64_t ma = mask(a), mb = mask(b);
    const auto dim = static_cast<std::uint64_t>(amps_.size());
    for (std::uint64_t i = 0; i < dim; ++i)
      if ((i & ma) && !(i & mb)) std::swap(amps_(i), amps_((i & ~ma) | mb));
  }

  /// Tensor a fresh qubit a0|0> + a1|1> onto the end; it becomes the last wire.
  int append_qubit(Scalar a0, Scalar a1) {
    check_cap(n_ + 1);
    Amplitudes next(amps_.size() * 2);
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
      next(2 * i) = amps_(i) * a0;
      next(2 * i + 1) = amps_(i) * a1;
    }
    amps_ = std::move(next);
    return n_++;
  }

  /// Tensor another register onto the end (its wires follow ours).
  void append_state(const StateVectorT& other) {
    check_cap(n_ + other.n_);
    Amplitudes next(amps_.size() * other.amps_.size());
    for (Eigen::Index i = 0; i < amps_.size(); ++i)
      next.segment(i * other.amps_.size(), other.amps_.size()) = amps_(i) * other.amps_;
    amps_ = std::move(next);
    n_ += other.n_;
  }

  /// Drops a wire known to hold |bit>. Later wires shift down by one.
  /// Returns the weight (squared norm) found on that branch.
  Real remove_wire(int wire, int bit) {
    const std::uint64_t m = mask(wire);
    if (n_ == 1) throw ArgumentError("cannot remove the last wire");
    const int low_bits = n_ - 1 - wire;
    const std::uint64_t low_mask = (std::uint64_t(1) << low_bits) - 1;
    Amplitudes next(amps_.size() / 2);
    for (Eigen::Index j = 0; j < next.size(); ++j) {
      const auto uj = static_cast<std::uint64_t>(j);
      std::uint64_t i = ((uj & ~low_mask) << 1) | (uj & low_mask);
      if (bit) i |= m;
      next(j) = amps_(static_cast<Eigen::Index>(i));
    }
    const Real w = next.squaredNorm();
    amps_ = std::move(next);
    --n_;
    return w;
  }

  /// Extracts the sub-register on keep_wires (in the order given) from the
  /// branch where every other wire equals the matching bit of fixed_bits
  /// (indexed by wire). The result is normalized; the branch weight is
  /// written to *weight when provided.
  StateVectorT slice(std::span<const int> keep_wires, std::span<const int> fixed_bits, Real* weight = nullptr) const {
    if (static_cast<int>(fixed_bits.size()) != n_) throw ArgumentError("fixed_bits must cover every wire");
    const int k = static_cast<int>(keep_wires.size());
    std::uint64_t base = 0;
    std::vector<bool> kept(n_, false);
    for (int w : keep_wires) {
      check_wire(w);
      kept[w] = true;
    }
    for (int w = 0; w < n_; ++w)
      if (!kept[w] && fixed_bits[w]) base |= mask(w);
    Amplitudes out(Eigen::Index(1) << k);
    for (Eigen::Index j = 0; j < out.size(); ++j) {
      std::uint64_t i = base;
      for (int q = 0; q < k; ++q)
        if ((j >> (k - 1 - q)) & 1) i |= mask(keep_wires[q]);
      out(j) = amps_(static_cast<Eigen::Index>(i));
    }
    const Real w = out.squaredNorm();
    if (weight) *weight = w;
    if (w > Real(0)) out /= std::sqrt(w);
    StateVectorT s;
    s.cap_ = cap_;
    s.n_ = k;
    s.amps_ = std::move(out);
    return s;
  }

 private:
  void check_cap(int n) const {
    if (n > cap_)
      throw ResourceLimitError(std::to_string(n) + " qubits exceeds the simulator cap of " + std::to_string(cap_));
  }

  // Plain complex product; skips the NaN recovery path of operator*.
  static Scalar mul(Scalar a, Scalar b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
  }

  // Indices with all of set_bits and none of clear_bits.
  void apply_phase_where(std::uint64_t set_bits, std::uint64_t clear_bits, Scalar phase) {
    for_each_set(set_bits, [&](std::uint64_t i) {
      if (!(i & clear_bits)) amps_(i) = mul(phase, amps_(i));
    });
  }

  int n_ = 0;
  int cap_ = kDefaultQubitCap;
  Amplitudes amps_;
};

extern template class StateVectorT<double>;
using StateVector = StateVectorT<double>;

/// |0...0> on num_qubits wires; ResourceLimitError above the cap.
template <typename Real = double>
StateVectorT<Real> new_state(int num_qubits, int cap = kDefaultQubitCap) {
  return StateVectorT<Real>(num_qubits, cap);
}

/// Single-qubit state a0|0> + a1|1>, normalized.
template <typename Real = double>
StateVectorT<Real> qubit_state(std::complex<Real> a0, std::complex<Real> a1) {
  typename StateVectorT<Real>::Amplitudes amps(2);
  amps << a0, a1;
  auto s = StateVectorT<Real>::from_amplitudes(std::move(amps));
  s.normalize();
  return s;
}

/// (|0> + e^{i theta}|1>)/sqrt(2).
template <typename Real = double>
StateVectorT<Real> plus_state(Octant theta) {
  const Real r = Real(1) / std::sqrt(Real(2));
  return qubit_state<Real>(std::complex<Real>(r), r * octant_phase<Real>(theta));
}

}  // namespace bqc
