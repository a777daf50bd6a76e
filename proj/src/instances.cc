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
#include "alphami/instances.h"

namespace alphami {

Joint3 ReferenceJoint() {
  // Index order (x, y, z) with z fastest.
  return Joint3::FromProbs(2, 2, 2,
                           {0.25, 0.125,    // x=0 y=0
                            0.0, 0.125,     // x=0 y=1
                            0.0, 0.125,     // x=1 y=0
                            0.25, 0.125});  // x=1 y=1
}

Joint3 ReferenceMarkovJoint() {
  const double pz[2] = {0.4, 0.6};
  const double px[2][2] = {{0.7, 0.3}, {0.2, 0.8}};  // [z][x]
  const double py[2][2] = {{0.5, 0.5}, {0.9, 0.1}};  // [z][y]
  std::vector<double> p;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) p.push_back(pz[z] * px[z][x] * py[z][y]);
    }
  }
  return Joint3::FromProbs(2, 2, 2, std::move(p));
}

std::vector<double> RandomSimplexPoint(std::mt19937_64& rng, std::size_t n,
                                       double zero_prob) {
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(n);
  for (double& e : v) e = expo(rng);
  if (zero_prob > 0.0) {
    std::size_t kept = 0;
    for (double& e : v) {
      if (unit(rng) < zero_prob) {
        e = 0.0;
      } else {
        ++kept;
      }
    }
    if (kept == 0) v[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = 1.0;
  }
  double total = 0.0;
  for (double e : v) total += e;
  for (double& e : v) e /= total;
  return v;
}

Joint3 RandomJoint3(std::mt19937_64& rng, std::size_t nx, std::size_t ny,
                    std::size_t nz, double zero_prob) {
  return Joint3::FromProbs(nx, ny, nz, RandomSimplexPoint(rng, nx * ny * nz, zero_prob));
}

Joint3 RandomMarkovJoint3(std::mt19937_64& rng, std::size_t nx, std::size_t ny,
                          std::size_t nz) {
  const std::vector<double> pz = RandomSimplexPoint(rng, nz);
  std::vector<std::vector<double>> px(nz), py(nz);
  for (std::size_t z = 0; z < nz; ++z) {
    px[z] = RandomSimplexPoint(rng, nx);
    py[z] = RandomSimplexPoint(rng, ny);
  }
  std::vector<double> p(nx * ny * nz);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      for (std::size_t z = 0; z < nz; ++z) {
        p[(x * ny + y) * nz + z] = pz[z] * px[z][x] * py[z][y];
      }
    }
  }
  return Joint3::FromProbs(nx, ny, nz, std::move(p));
}

Kernel RandomKernel(std::mt19937_64& rng, std::size_t n_in, std::size_t n_out,
                    double zero_prob) {
  std::vector<double> rows;
  rows.reserve(n_in * n_out);
  for (std::size_t i = 0; i < n_in; ++i) {
    const std::vector<double> row = RandomSimplexPoint(rng, n_out, zero_prob);
    rows.insert(rows.end(), row.begin(), row.end());
  }
  return Kernel(IndexLabels(n_in), IndexLabels(n_out), std::move(rows));
}

EventMask RandomEvent(std::mt19937_64& rng, std::size_t nx, std::size_t ny,
                      std::size_t nz) {
  std::bernoulli_distribution coin(0.5);
  std::vector<char> cells(nx * ny * nz);
  for (char& c : cells) c = coin(rng) ? 1 : 0;
  return EventMask(nx, ny, nz, std::move(cells));
}

Joint4 RandomMarkovJoint4(std::mt19937_64& rng, std::size_t nw, std::size_t nx,
                          std::size_t ny, std::size_t nz) {
  const Joint3 wxz = RandomJoint3(rng, nw, nx, nz);
  return AttachChannel(wxz, RandomKernel(rng, nx, ny));
}

}  // namespace alphami
