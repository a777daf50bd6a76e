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
//
// Finite-alphabet probability primitives. Every type validates itself on
// construction and is immutable afterwards; all free functions are pure.
#ifndef ALPHAMI_PROB_H_
#define ALPHAMI_PROB_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace alphami {

// Absolute tolerance on total mass for every distribution type.
inline constexpr double kMassTolerance = 1e-12;

// Default cap on the number of cells produced by TensorPower.
inline constexpr std::size_t kDefaultTensorCap = 10'000'000;

// Environment variable overriding kDefaultTensorCap.
inline constexpr const char* kTensorCapEnv = "ALPHAMI_TENSOR_CAP";

using Labels = std::vector<std::string>;

// "0", "1", ..., n-1.
Labels IndexLabels(std::size_t n);

class Pmf {
 public:
  Pmf(Labels labels, std::vector<double> probs);
  static Pmf Uniform(std::size_t n);

  std::size_t size() const { return probs_.size(); }
  const Labels& labels() const { return labels_; }
  std::span<const double> probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  Labels labels_;
  std::vector<double> probs_;
};

// Joint pmf over X x Y, stored row-major (x-major).
class Joint2 {
 public:
  Joint2(Labels x_labels, Labels y_labels, std::vector<double> probs);
  static Joint2 FromProbs(std::size_t nx, std::size_t ny,
                          std::vector<double> probs);

  std::size_t nx() const { return x_labels_.size(); }
  std::size_t ny() const { return y_labels_.size(); }
  const Labels& x_labels() const { return x_labels_; }
  const Labels& y_labels() const { return y_labels_; }
  std::span<const double> probs() const { return probs_; }
  double operator()(std::size_t x, std::size_t y) const {
    return probs_[x * ny() + y];
  }

 private:
  Labels x_labels_;
  Labels y_labels_;
  std::vector<double> probs_;
};

// Joint pmf over X x Y x Z, stored row-major: x-major, then y, then z.
class Joint3 {
 public:
  Joint3(Labels x_labels, Labels y_labels, Labels z_labels,
         std::vector<double> probs);
  static Joint3 FromProbs(std::size_t nx, std::size_t ny, std::size_t nz,
                          std::vector<double> probs);

  std::size_t nx() const { return x_labels_.size(); }
  std::size_t ny() const { return y_labels_.size(); }
  std::size_t nz() const { return z_labels_.size(); }
  std::size_t size() const { return probs_.size(); }
  const Labels& x_labels() const { return x_labels_; }
  const Labels& y_labels() const { return y_labels_; }
  const Labels& z_labels() const { return z_labels_; }
  std::span<const double> probs() const { return probs_; }

  std::size_t Index(std::size_t x, std::size_t y, std::size_t z) const {
    return (x * ny() + y) * nz() + z;
  }
  double operator()(std::size_t x, std::size_t y, std::size_t z) const {
    return probs_[Index(x, y, z)];
  }

 private:
  Labels x_labels_;
  Labels y_labels_;
  Labels z_labels_;
  std::vector<double> probs_;
};

// Joint pmf over W x X x Y x Z, row-major in that order.
class Joint4 {
 public:
  Joint4(Labels w_labels, Labels x_labels, Labels y_labels, Labels z_labels,
         std::vector<double> probs);

  std::size_t nw() const { return w_labels_.size(); }
  std::size_t nx() const { return x_labels_.size(); }
  std::size_t ny() const { return y_labels_.size(); }
  std::size_t nz() const { return z_labels_.size(); }
  const Labels& w_labels() const { return w_labels_; }
  const Labels& x_labels() const { return x_labels_; }
  const Labels& y_labels() const { return y_labels_; }
  const Labels& z_labels() const { return z_labels_; }
  std::span<const double> probs() const { return probs_; }

  double operator()(std::size_t w, std::size_t x, std::size_t y,
                    std::size_t z) const {
    return probs_[((w * nx() + x) * ny() + y) * nz() + z];
  }

 private:
  Labels w_labels_;
  Labels x_labels_;
  Labels y_labels_;
  Labels z_labels_;
  std::vector<double> probs_;
};

enum class Axis { kX, kY, kZ };

// Row-stochastic conditional distribution. Rows for conditioning symbols of
// zero mass are flagged unreachable; they hold zeros and never enter a sum.
class Kernel {
 public:
  Kernel(Labels in_labels, Labels out_labels, std::vector<double> rows,
         std::vector<bool> reachable);
  // Every row reachable.
  Kernel(Labels in_labels, Labels out_labels, std::vector<double> rows);

  static Kernel Identity(std::size_t n);
  // Every input maps to `row`.
  static Kernel Constant(std::size_t n_in, std::span<const double> row);

  std::size_t in_size() const { return in_labels_.size(); }
  std::size_t out_size() const { return out_labels_.size(); }
  const Labels& in_labels() const { return in_labels_; }
  const Labels& out_labels() const { return out_labels_; }
  bool reachable(std::size_t in) const { return reachable_[in]; }
  std::size_t reachable_count() const;
  std::span<const double> row(std::size_t in) const {
    return std::span<const double>(rows_).subspan(in * out_size(), out_size());
  }
  double operator()(std::size_t in, std::size_t out) const {
    return rows_[in * out_size() + out];
  }

  // Push-forward K mu. Mass of mu on unreachable rows must be zero.
  std::vector<double> Apply(std::span<const double> mu) const;
  // Signed push-forward K mu - K nu of two probability vectors, computed
  // without forming the two images separately.
  std::vector<double> ApplyDifference(std::span<const double> mu,
                                      std::span<const double> nu) const;

  // First this kernel, then `next`.
  Kernel Then(const Kernel& next) const;

 private:
  Labels in_labels_;
  Labels out_labels_;
  std::vector<double> rows_;
  std::vector<bool> reachable_;
};

// Two-dimensional slice of an EventMask.
struct Mask2 {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<char> cells;

  bool operator()(std::size_t x, std::size_t y) const {
    return cells[x * ny + y] != 0;
  }
};

// Subset of X x Y x Z, laid out like Joint3.
class EventMask {
 public:
  EventMask(std::size_t nx, std::size_t ny, std::size_t nz,
            std::vector<char> cells);
  static EventMask Full(std::size_t nx, std::size_t ny, std::size_t nz);
  static EventMask Empty(std::size_t nx, std::size_t ny, std::size_t nz);
  static EventMask FullLike(const Joint3& j);

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  std::size_t nz() const { return nz_; }
  bool operator()(std::size_t x, std::size_t y, std::size_t z) const {
    return cells_[(x * ny_ + y) * nz_ + z] != 0;
  }
  std::span<const char> cells() const { return cells_; }
  std::size_t CountTrue() const;

  bool ConformsTo(const Joint3& j) const;
  // Throws Error(kShape) when the mask does not conform to `j`.
  void RequireConforms(const Joint3& j) const;

  // E_z = {(x, y) : (x, y, z) in E}.
  Mask2 Slice(std::size_t z) const;
  // E_{z,y} = {x : (x, y, z) in E}.
  std::vector<char> SliceZY(std::size_t z, std::size_t y) const;

  // Pointwise subset test.
  bool IsSubsetOf(const EventMask& other) const;

 private:
  std::size_t nx_;
  std::size_t ny_;
  std::size_t nz_;
  std::vector<char> cells_;
};

// Sums of a Joint3 over the complementary axes.
Pmf Marginal(const Joint3& j, Axis axis);
Joint2 Marginal(const Joint3& j, Axis first, Axis second);
double TotalMass(const Joint3& j);

Pmf MarginalX(const Joint2& j);
Pmf MarginalY(const Joint2& j);

// P_{target | given}; rows of zero-mass conditioning symbols are unreachable.
Kernel Conditional(const Joint3& j, Axis target, Axis given);
// P_{Y|X} of a two-dimensional joint.
Kernel ConditionalYGivenX(const Joint2& j);
// P_{X|Y} of a two-dimensional joint.
Kernel ConditionalXGivenY(const Joint2& j);

// P_{XY|Z=z} for a reachable z.
Joint2 ConditionalSlice(const Joint3& j, std::size_t z);

// P_Z P_{X|Z} P_{Y|Z} built from the joint's own marginals.
Joint3 MarkovProduct(const Joint3& j);
// Q_Z P_{X|Z} P_{Y|Z}; qz must put no mass on unreachable z.
Joint3 MarkovProductWith(const Joint3& j, std::span<const double> qz);
// P_Z P_{X|Z} Q_{Y|Z}; q_y_given_z is indexed (z, y).
Joint3 MarkovProductWithYKernel(const Joint3& j, const Kernel& q_y_given_z);

Joint3 SwapXY(const Joint3& j);
// Embeds P_XY with a single-symbol Z.
Joint3 WithConstantZ(const Joint2& j);

// True iff q_i == 0 implies p_i == 0. Throws Error(kShape) on length
// mismatch.
bool AbsolutelyContinuous(std::span<const double> p,
                          std::span<const double> q);
bool AbsolutelyContinuous(const Joint3& p, const Joint3& q);

// Reads kTensorCapEnv, falling back to kDefaultTensorCap.
std::size_t TensorCapFromEnv();

// n-fold iid product on product alphabets. Labels of a block are the
// comma-joined coordinate labels, first coordinate most significant.
// Throws Error(kResource) when the cell count exceeds `cap`.
Joint3 TensorPower(const Joint3& j, int n, std::size_t cap);
Joint3 TensorPower(const Joint3& j, int n);

// Joint4 helpers for the (Z, W) - X - Y setting.
Joint3 MarginalWXZ(const Joint4& j);  // sums out Y; axes become (W, X, Z)
Joint3 MarginalWYZ(const Joint4& j);  // sums out X; axes become (W, Y, Z)
Kernel ChannelYGivenX(const Joint4& j);
// P_{WXZ} P_{Y|X}.
Joint4 AttachChannel(const Joint3& wxz, const Kernel& y_given_x);
// Max absolute deviation of P_WXYZ from P_{WXZ} P_{Y|X}.
double MarkovDeviation(const Joint4& j);

// Joint of (W, Y) when W is produced from X by `w_given_x` and (X, Y) ~ xy.
Joint2 PushFirstThroughChannel(const Joint2& xy, const Kernel& w_given_x);

}  // namespace alphami

#endif  // ALPHAMI_PROB_H_
