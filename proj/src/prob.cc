// Copyright 2026 The alphami Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "alphami/prob.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

#include "alphami/error.h"

namespace alphami {
namespace {

void ValidateMass(std::span<const double> probs, const char* what) {
  double total = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double p = probs[i];
    if (!std::isfinite(p) || p < 0.0) {
      throw Error(ErrorKind::kValidation, std::string(what) + ": entry " +
                                              std::to_string(i) +
                                              " is negative or not finite");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw Error(ErrorKind::kValidation,
                std::string(what) + ": total mass " + std::to_string(total) +
                    " differs from 1");
  }
}

void ValidateSize(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw Error(ErrorKind::kShape, std::string(what) + ": expected " +
                                       std::to_string(expected) +
                                       " probabilities, got " +
                                       std::to_string(actual));
  }
  if (expected == 0) {
    throw Error(ErrorKind::kShape, std::string(what) + ": empty alphabet");
  }
}

std::size_t AxisSize(const Joint3& j, Axis a) {
  switch (a) {
    case Axis::kX:
      return j.nx();
    case Axis::kY:
      return j.ny();
    case Axis::kZ:
      return j.nz();
  }
  return 0;
}

const Labels& AxisLabels(const Joint3& j, Axis a) {
  switch (a) {
    case Axis::kX:
      return j.x_labels();
    case Axis::kY:
      return j.y_labels();
    case Axis::kZ:
      break;
  }
  return j.z_labels();
}

std::size_t Coord(Axis a, std::size_t x, std::size_t y, std::size_t z) {
  switch (a) {
    case Axis::kX:
      return x;
    case Axis::kY:
      return y;
    case Axis::kZ:
      break;
  }
  return z;
}

template <typename F>
void ForEachCell(const Joint3& j, F&& f) {
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) {
      for (std::size_t z = 0; z < j.nz(); ++z) f(x, y, z, j(x, y, z));
    }
  }
}

std::vector<bool> ReachableFromMass(std::span<const double> mass) {
  std::vector<bool> reachable(mass.size());
  for (std::size_t i = 0; i < mass.size(); ++i) reachable[i] = mass[i] > 0.0;
  return reachable;
}

}  // namespace

Labels IndexLabels(std::size_t n) {
  Labels labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

Pmf::Pmf(Labels labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  ValidateSize(labels_.size(), probs_.size(), "pmf");
  ValidateMass(probs_, "pmf");
}

Pmf Pmf::Uniform(std::size_t n) {
  return Pmf(IndexLabels(n), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Joint2::Joint2(Labels x_labels, Labels y_labels, std::vector<double> probs)
    : x_labels_(std::move(x_labels)),
      y_labels_(std::move(y_labels)),
      probs_(std::move(probs)) {
  ValidateSize(x_labels_.size() * y_labels_.size(), probs_.size(), "joint2");
  ValidateMass(probs_, "joint2");
}

Joint2 Joint2::FromProbs(std::size_t nx, std::size_t ny,
                         std::vector<double> probs) {
  return Joint2(IndexLabels(nx), IndexLabels(ny), std::move(probs));
}

Joint3::Joint3(Labels x_labels, Labels y_labels, Labels z_labels,
               std::vector<double> probs)
    : x_labels_(std::move(x_labels)),
      y_labels_(std::move(y_labels)),
      z_labels_(std::move(z_labels)),
      probs_(std::move(probs)) {
  ValidateSize(x_labels_.size() * y_labels_.size() * z_labels_.size(),
               probs_.size(), "joint3");
  ValidateMass(probs_, "joint3");
}

Joint3 Joint3::FromProbs(std::size_t nx, std::size_t ny, std::size_t nz,
                         std::vector<double> probs) {
  return Joint3(IndexLabels(nx), IndexLabels(ny), IndexLabels(nz),
                std::move(probs));
}

Joint4::Joint4(Labels w_labels, Labels x_labels, Labels y_labels,
               Labels z_labels, std::vector<double> probs)
    : w_labels_(std::move(w_labels)),
      x_labels_(std::move(x_labels)),
      y_labels_(std::move(y_labels)),
      z_labels_(std::move(z_labels)),
      probs_(std::move(probs)) {
  ValidateSize(w_labels_.size() * x_labels_.size() * y_labels_.size() *
                   z_labels_.size(),
               probs_.size(), "joint4");
  ValidateMass(probs_, "joint4");
}

Kernel::Kernel(Labels in_labels, Labels out_labels, std::vector<double> rows,
               std::vector<bool> reachable)
    : in_labels_(std::move(in_labels)),
      out_labels_(std::move(out_labels)),
      rows_(std::move(rows)),
      reachable_(std::move(reachable)) {
  ValidateSize(in_labels_.size() * out_labels_.size(), rows_.size(), "kernel");
  if (reachable_.size() != in_labels_.size()) {
    throw Error(ErrorKind::kShape, "kernel: reachable flags do not match rows");
  }
  for (std::size_t i = 0; i < in_size(); ++i) {
    if (!reachable_[i]) {
      std::fill_n(rows_.begin() + static_cast<std::ptrdiff_t>(i * out_size()),
                  out_size(), 0.0);
      continue;
    }
    ValidateMass(row(i), "kernel row");
  }
}

Kernel::Kernel(Labels in_labels, Labels out_labels, std::vector<double> rows)
    : Kernel(in_labels, std::move(out_labels), std::move(rows),
             std::vector<bool>(in_labels.size(), true)) {}

Kernel Kernel::Identity(std::size_t n) {
  std::vector<double> rows(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) rows[i * n + i] = 1.0;
  return Kernel(IndexLabels(n), IndexLabels(n), std::move(rows));
}

Kernel Kernel::Constant(std::size_t n_in, std::span<const double> row) {
  std::vector<double> rows;
  rows.reserve(n_in * row.size());
  for (std::size_t i = 0; i < n_in; ++i) rows.insert(rows.end(), row.begin(), row.end());
  return Kernel(IndexLabels(n_in), IndexLabels(row.size()), std::move(rows));
}

std::size_t Kernel::reachable_count() const {
  return static_cast<std::size_t>(
      std::count(reachable_.begin(), reachable_.end(), true));
}

std::vector<double> Kernel::Apply(std::span<const double> mu) const {
  if (mu.size() != in_size()) {
    throw Error(ErrorKind::kShape, "kernel: input measure has wrong length");
  }
  std::vector<double> out(out_size(), 0.0);
  for (std::size_t i = 0; i < in_size(); ++i) {
    if (mu[i] == 0.0) continue;
    if (!reachable_[i]) {
      throw Error(ErrorKind::kPrecondition,
                  "kernel: input measure charges an unreachable row");
    }
    for (std::size_t o = 0; o < out_size(); ++o) out[o] += mu[i] * (*this)(i, o);
  }
  return out;
}

std::vector<double> Kernel::ApplyDifference(std::span<const double> mu,
                                            std::span<const double> nu) const {
  if (mu.size() != in_size() || nu.size() != in_size()) {
    throw Error(ErrorKind::kShape, "kernel: input measure has wrong length");
  }
  std::vector<double> out(out_size(), 0.0);
  for (std::size_t i = 0; i < in_size(); ++i) {
    const double d = mu[i] - nu[i];
    if (d == 0.0) continue;
    for (std::size_t o = 0; o < out_size(); ++o) out[o] += d * (*this)(i, o);
  }
  return out;
}

Kernel Kernel::Then(const Kernel& next) const {
  if (out_size() != next.in_size()) {
    throw Error(ErrorKind::kShape, "kernel composition: alphabet mismatch");
  }
  std::vector<double> rows(in_size() * next.out_size(), 0.0);
  for (std::size_t i = 0; i < in_size(); ++i) {
    if (!reachable_[i]) continue;
    const std::vector<double> image = next.Apply(row(i));
    std::copy(image.begin(), image.end(),
              rows.begin() + static_cast<std::ptrdiff_t>(i * next.out_size()));
  }
  return Kernel(in_labels_, next.out_labels_, std::move(rows), reachable_);
}

EventMask::EventMask(std::size_t nx, std::size_t ny, std::size_t nz,
                     std::vector<char> cells)
    : nx_(nx), ny_(ny), nz_(nz), cells_(std::move(cells)) {
  if (cells_.size() != nx_ * ny_ * nz_) {
    throw Error(ErrorKind::kShape, "event mask: cell count does not match shape");
  }
  for (char& c : cells_) c = c != 0 ? 1 : 0;
}

EventMask EventMask::Full(std::size_t nx, std::size_t ny, std::size_t nz) {
  return EventMask(nx, ny, nz, std::vector<char>(nx * ny * nz, 1));
}

EventMask EventMask::Empty(std::size_t nx, std::size_t ny, std::size_t nz) {
  return EventMask(nx, ny, nz, std::vector<char>(nx * ny * nz, 0));
}

EventMask EventMask::FullLike(const Joint3& j) {
  return Full(j.nx(), j.ny(), j.nz());
}

std::size_t EventMask::CountTrue() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

bool EventMask::ConformsTo(const Joint3& j) const {
  return nx_ == j.nx() && ny_ == j.ny() && nz_ == j.nz();
}

void EventMask::RequireConforms(const Joint3& j) const {
  if (!ConformsTo(j)) {
    throw Error(ErrorKind::kShape, "event mask does not conform to the joint");
  }
}

Mask2 EventMask::Slice(std::size_t z) const {
  Mask2 slice{nx_, ny_, std::vector<char>(nx_ * ny_, 0)};
  for (std::size_t x = 0; x < nx_; ++x) {
    for (std::size_t y = 0; y < ny_; ++y) slice.cells[x * ny_ + y] = (*this)(x, y, z);
  }
  return slice;
}

std::vector<char> EventMask::SliceZY(std::size_t z, std::size_t y) const {
  std::vector<char> slice(nx_, 0);
  for (std::size_t x = 0; x < nx_; ++x) slice[x] = (*this)(x, y, z);
  return slice;
}

bool EventMask::IsSubsetOf(const EventMask& other) const {
  if (nx_ != other.nx_ || ny_ != other.ny_ || nz_ != other.nz_) {
    throw Error(ErrorKind::kShape, "event masks have different shapes");
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] && !other.cells_[i]) return false;
  }
  return true;
}

Pmf Marginal(const Joint3& j, Axis axis) {
  std::vector<double> probs(AxisSize(j, axis), 0.0);
  ForEachCell(j, [&](std::size_t x, std::size_t y, std::size_t z, double p) {
    probs[Coord(axis, x, y, z)] += p;
  });
  return Pmf(AxisLabels(j, axis), std::move(probs));
}

Joint2 Marginal(const Joint3& j, Axis first, Axis second) {
  if (first == second) {
    throw Error(ErrorKind::kShape, "marginal: axes must be distinct");
  }
  const std::size_t n2 = AxisSize(j, second);
  std::vector<double> probs(AxisSize(j, first) * n2, 0.0);
  ForEachCell(j, [&](std::size_t x, std::size_t y, std::size_t z, double p) {
    probs[Coord(first, x, y, z) * n2 + Coord(second, x, y, z)] += p;
  });
  return Joint2(AxisLabels(j, first), AxisLabels(j, second), std::move(probs));
}

double TotalMass(const Joint3& j) {
  double total = 0.0;
  for (double p : j.probs()) total += p;
  return total;
}

Pmf MarginalX(const Joint2& j) {
  std::vector<double> probs(j.nx(), 0.0);
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) probs[x] += j(x, y);
  }
  return Pmf(j.x_labels(), std::move(probs));
}

Pmf MarginalY(const Joint2& j) {
  std::vector<double> probs(j.ny(), 0.0);
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) probs[y] += j(x, y);
  }
  return Pmf(j.y_labels(), std::move(probs));
}

Kernel Conditional(const Joint3& j, Axis target, Axis given) {
  const Joint2 pair = Marginal(j, given, target);
  return ConditionalYGivenX(pair);
}

Kernel ConditionalYGivenX(const Joint2& j) {
  const Pmf px = MarginalX(j);
  std::vector<double> rows(j.nx() * j.ny(), 0.0);
  for (std::size_t x = 0; x < j.nx(); ++x) {
    if (px[x] <= 0.0) continue;
    for (std::size_t y = 0; y < j.ny(); ++y) rows[x * j.ny() + y] = j(x, y) / px[x];
  }
  return Kernel(j.x_labels(), j.y_labels(), std::move(rows),
                ReachableFromMass(px.probs()));
}

Kernel ConditionalXGivenY(const Joint2& j) {
  const Pmf py = MarginalY(j);
  std::vector<double> rows(j.ny() * j.nx(), 0.0);
  for (std::size_t y = 0; y < j.ny(); ++y) {
    if (py[y] <= 0.0) continue;
    for (std::size_t x = 0; x < j.nx(); ++x) rows[y * j.nx() + x] = j(x, y) / py[y];
  }
  return Kernel(j.y_labels(), j.x_labels(), std::move(rows),
                ReachableFromMass(py.probs()));
}

Joint2 ConditionalSlice(const Joint3& j, std::size_t z) {
  double mass = 0.0;
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) mass += j(x, y, z);
  }
  if (mass <= 0.0) {
    throw Error(ErrorKind::kPrecondition,
                "conditional slice requested for an unreachable z");
  }
  std::vector<double> probs(j.nx() * j.ny());
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) probs[x * j.ny() + y] = j(x, y, z) / mass;
  }
  return Joint2(j.x_labels(), j.y_labels(), std::move(probs));
}

Joint3 MarkovProductWith(const Joint3& j, std::span<const double> qz) {
  if (qz.size() != j.nz()) {
    throw Error(ErrorKind::kShape, "Q_Z has the wrong length");
  }
  const Kernel x_given_z = Conditional(j, Axis::kX, Axis::kZ);
  const Kernel y_given_z = Conditional(j, Axis::kY, Axis::kZ);
  std::vector<double> probs(j.size(), 0.0);
  for (std::size_t z = 0; z < j.nz(); ++z) {
    if (qz[z] == 0.0) continue;
    if (!x_given_z.reachable(z)) {
      throw Error(ErrorKind::kPrecondition, "Q_Z charges an unreachable z");
    }
    for (std::size_t x = 0; x < j.nx(); ++x) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        probs[j.Index(x, y, z)] = qz[z] * x_given_z(z, x) * y_given_z(z, y);
      }
    }
  }
  return Joint3(j.x_labels(), j.y_labels(), j.z_labels(), std::move(probs));
}

Joint3 MarkovProduct(const Joint3& j) {
  const Pmf pz = Marginal(j, Axis::kZ);
  return MarkovProductWith(j, pz.probs());
}

Joint3 MarkovProductWithYKernel(const Joint3& j, const Kernel& q_y_given_z) {
  if (q_y_given_z.in_size() != j.nz() || q_y_given_z.out_size() != j.ny()) {
    throw Error(ErrorKind::kShape, "Q_{Y|Z} has the wrong shape");
  }
  const Pmf pz = Marginal(j, Axis::kZ);
  const Kernel x_given_z = Conditional(j, Axis::kX, Axis::kZ);
  std::vector<double> probs(j.size(), 0.0);
  for (std::size_t z = 0; z < j.nz(); ++z) {
    if (pz[z] == 0.0) continue;
    if (!q_y_given_z.reachable(z)) {
      throw Error(ErrorKind::kPrecondition, "Q_{Y|Z} has no row for a reachable z");
    }
    for (std::size_t x = 0; x < j.nx(); ++x) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        probs[j.Index(x, y, z)] = pz[z] * x_given_z(z, x) * q_y_given_z(z, y);
      }
    }
  }
  return Joint3(j.x_labels(), j.y_labels(), j.z_labels(), std::move(probs));
}

Joint3 SwapXY(const Joint3& j) {
  std::vector<double> probs(j.size());
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) {
      for (std::size_t z = 0; z < j.nz(); ++z) {
        probs[(y * j.nx() + x) * j.nz() + z] = j(x, y, z);
      }
    }
  }
  return Joint3(j.y_labels(), j.x_labels(), j.z_labels(), std::move(probs));
}

Joint3 WithConstantZ(const Joint2& j) {
  return Joint3(j.x_labels(), j.y_labels(), Labels{"*"},
                std::vector<double>(j.probs().begin(), j.probs().end()));
}

bool AbsolutelyContinuous(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::kShape, "absolute continuity: alphabet mismatch");
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] == 0.0 && p[i] > 0.0) return false;
  }
  return true;
}

bool AbsolutelyContinuous(const Joint3& p, const Joint3& q) {
  if (p.nx() != q.nx() || p.ny() != q.ny() || p.nz() != q.nz()) {
    throw Error(ErrorKind::kShape, "absolute continuity: shape mismatch");
  }
  return AbsolutelyContinuous(p.probs(), q.probs());
}

std::size_t TensorCapFromEnv() {
  const char* env = std::getenv(kTensorCapEnv);
  if (env == nullptr || *env == '\0') return kDefaultTensorCap;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || cap == 0) {
    throw Error(ErrorKind::kValidation,
                std::string(kTensorCapEnv) + " must be a positive integer");
  }
  return static_cast<std::size_t>(cap);
}

namespace {

Labels PowerLabels(const Labels& base, int n) {
  Labels out = base;
  for (int k = 1; k < n; ++k) {
    Labels next;
    next.reserve(out.size() * base.size());
    for (const auto& prefix : out) {
      for (const auto& label : base) next.push_back(prefix + "," + label);
    }
    out = std::move(next);
  }
  return out;
}

std::size_t IntPow(std::size_t base, int n) {
  std::size_t out = 1;
  for (int k = 0; k < n; ++k) out *= base;
  return out;
}

}  // namespace

Joint3 TensorPower(const Joint3& j, int n, std::size_t cap) {
  if (n < 1) {
    throw Error(ErrorKind::kValidation, "tensor power requires n >= 1");
  }
  double cells = 1.0;
  for (int k = 0; k < n; ++k) cells *= static_cast<double>(j.size());
  if (cells > static_cast<double>(cap)) {
    throw Error(ErrorKind::kResource,
                "tensor power would produce " + std::to_string(cells) +
                    " cells, above the cap of " + std::to_string(cap));
  }
  const std::size_t nx = IntPow(j.nx(), n);
  const std::size_t ny = IntPow(j.ny(), n);
  const std::size_t nz = IntPow(j.nz(), n);
  std::vector<double> probs(nx * ny * nz);
  // Each product coordinate decomposes into n base digits, most significant
  // first; the entry is the product of per-coordinate entries.
  for (std::size_t X = 0; X < nx; ++X) {
    for (std::size_t Y = 0; Y < ny; ++Y) {
      for (std::size_t Z = 0; Z < nz; ++Z) {
        double p = 1.0;
        std::size_t rx = X, ry = Y, rz = Z;
        for (int k = 0; k < n; ++k) {
          p *= j(rx % j.nx(), ry % j.ny(), rz % j.nz());
          rx /= j.nx();
          ry /= j.ny();
          rz /= j.nz();
        }
        probs[(X * ny + Y) * nz + Z] = p;
      }
    }
  }
  return Joint3(PowerLabels(j.x_labels(), n), PowerLabels(j.y_labels(), n),
                PowerLabels(j.z_labels(), n), std::move(probs));
}

Joint3 TensorPower(const Joint3& j, int n) {
  return TensorPower(j, n, TensorCapFromEnv());
}

Joint3 MarginalWXZ(const Joint4& j) {
  std::vector<double> probs(j.nw() * j.nx() * j.nz(), 0.0);
  for (std::size_t w = 0; w < j.nw(); ++w) {
    for (std::size_t x = 0; x < j.nx(); ++x) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        for (std::size_t z = 0; z < j.nz(); ++z) {
          probs[(w * j.nx() + x) * j.nz() + z] += j(w, x, y, z);
        }
      }
    }
  }
  return Joint3(j.w_labels(), j.x_labels(), j.z_labels(), std::move(probs));
}

Joint3 MarginalWYZ(const Joint4& j) {
  std::vector<double> probs(j.nw() * j.ny() * j.nz(), 0.0);
  for (std::size_t w = 0; w < j.nw(); ++w) {
    for (std::size_t x = 0; x < j.nx(); ++x) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        for (std::size_t z = 0; z < j.nz(); ++z) {
          probs[(w * j.ny() + y) * j.nz() + z] += j(w, x, y, z);
        }
      }
    }
  }
  return Joint3(j.w_labels(), j.y_labels(), j.z_labels(), std::move(probs));
}

Kernel ChannelYGivenX(const Joint4& j) {
  std::vector<double> xy(j.nx() * j.ny(), 0.0);
  for (std::size_t w = 0; w < j.nw(); ++w) {
    for (std::size_t x = 0; x < j.nx(); ++x) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        for (std::size_t z = 0; z < j.nz(); ++z) xy[x * j.ny() + y] += j(w, x, y, z);
      }
    }
  }
  return ConditionalYGivenX(Joint2(j.x_labels(), j.y_labels(), std::move(xy)));
}

Joint4 AttachChannel(const Joint3& wxz, const Kernel& y_given_x) {
  if (y_given_x.in_size() != wxz.ny()) {
    throw Error(ErrorKind::kShape, "channel input alphabet does not match X");
  }
  const std::size_t nw = wxz.nx(), nx = wxz.ny(), nz = wxz.nz();
  const std::size_t ny = y_given_x.out_size();
  std::vector<double> probs(nw * nx * ny * nz, 0.0);
  for (std::size_t w = 0; w < nw; ++w) {
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t z = 0; z < nz; ++z) {
        const double p = wxz(w, x, z);
        if (p == 0.0) continue;
        if (!y_given_x.reachable(x)) {
          throw Error(ErrorKind::kPrecondition,
                      "channel has no row for a reachable x");
        }
        for (std::size_t y = 0; y < ny; ++y) {
          probs[((w * nx + x) * ny + y) * nz + z] = p * y_given_x(x, y);
        }
      }
    }
  }
  return Joint4(wxz.x_labels(), wxz.y_labels(), y_given_x.out_labels(),
                wxz.z_labels(), std::move(probs));
}

double MarkovDeviation(const Joint4& j) {
  const Joint3 wxz = MarginalWXZ(j);
  const Kernel channel = ChannelYGivenX(j);
  double worst = 0.0;
  for (std::size_t w = 0; w < j.nw(); ++w) {
    for (std::size_t x = 0; x < j.nx(); ++x) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        for (std::size_t z = 0; z < j.nz(); ++z) {
          const double model = channel.reachable(x) ? wxz(w, x, z) * channel(x, y) : 0.0;
          worst = std::max(worst, std::abs(j(w, x, y, z) - model));
        }
      }
    }
  }
  return worst;
}

Joint2 PushFirstThroughChannel(const Joint2& xy, const Kernel& w_given_x) {
  if (w_given_x.in_size() != xy.nx()) {
    throw Error(ErrorKind::kShape, "channel input alphabet does not match X");
  }
  const std::size_t nw = w_given_x.out_size();
  std::vector<double> probs(nw * xy.ny(), 0.0);
  for (std::size_t x = 0; x < xy.nx(); ++x) {
    for (std::size_t y = 0; y < xy.ny(); ++y) {
      const double p = xy(x, y);
      if (p == 0.0) continue;
      if (!w_given_x.reachable(x)) {
        throw Error(ErrorKind::kPrecondition, "channel has no row for a reachable x");
      }
      for (std::size_t w = 0; w < nw; ++w) probs[w * xy.ny() + y] += p * w_given_x(x, w);
    }
  }
  return Joint2(w_given_x.out_labels(), xy.y_labels(), std::move(probs));
}

}  // namespace alphami
