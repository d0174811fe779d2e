// Copyright 2026 The ghapprox Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHAPPROX_TESTS_ORACLES_H_
#define GHAPPROX_TESTS_ORACLES_H_

// Brute-force reference computations used only by tests. They work on plain
// matrices and vectors and share no code path with the library routines they
// check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace ghapprox::oracle {

using Mat = std::vector<std::vector<double>>;
using Image = std::vector<std::size_t>;

inline Mat PairwiseEuclidean(const Mat& points) {
  const std::size_t n = points.size();
  Mat d(n, std::vector<double>(n, 0.0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      double s = 0.0;
      for (std::size_t c = 0; c < points[a].size(); ++c) {
        s += (points[a][c] - points[b][c]) * (points[a][c] - points[b][c]);
      }
      d[a][b] = std::sqrt(s);
    }
  }
  return d;
}

// All four axioms, the triangle inequality with the same tolerance rule as the
// library contract.
inline bool IsMetric(const Mat& d) {
  const std::size_t n = d.size();
  for (const auto& row : d) {
    if (row.size() != n) return false;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (!std::isfinite(d[k][l]) || d[k][l] < 0) return false;
      if (d[k][l] != d[l][k]) return false;
      if ((k == l) != (d[k][l] == 0.0)) return false;
      for (std::size_t m = 0; m < n; ++m) {
        const double rhs = d[k][m] + d[m][l];
        if (d[k][l] > rhs + std::max(1e-12, 1e-9 * std::max(d[k][l], rhs))) return false;
      }
    }
  }
  return true;
}

inline double CoverRadius(const Mat& d, const std::vector<std::size_t>& centers) {
  double worst = 0.0;
  for (std::size_t x = 0; x < d.size(); ++x) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c : centers) best = std::min(best, d[x][c]);
    worst = std::max(worst, best);
  }
  return worst;
}

// Over all ordered pairs.
inline double Distortion(const Mat& src, const Mat& dst, const Image& img) {
  double worst = 0.0;
  for (std::size_t a = 0; a < src.size(); ++a) {
    for (std::size_t b = 0; b < src.size(); ++b) {
      worst = std::max(worst, std::abs(dst[img[a]][img[b]] - src[a][b]));
    }
  }
  return worst;
}

inline double Codefect(const Mat& dst, const Image& img) {
  double worst = 0.0;
  for (std::size_t y = 0; y < dst.size(); ++y) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t x : img) best = std::min(best, dst[x][y]);
    worst = std::max(worst, best);
  }
  return worst;
}

inline void ForEachMap(std::size_t n, std::size_t m, const std::function<void(const Image&)>& fn) {
  Image img(n, 0);
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= m;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t k = n; k-- > 0;) {
      img[k] = c % m;
      c /= m;
    }
    fn(img);
  }
}

inline double MinQuality(const Mat& src, const Mat& dst) {
  double best = std::numeric_limits<double>::infinity();
  ForEachMap(src.size(), dst.size(), [&](const Image& img) {
    best = std::min(best, std::max(Distortion(src, dst, img), Codefect(dst, img)));
  });
  return best;
}

inline double GromovHausdorff(const Mat& x, const Mat& y) {
  return std::max(MinQuality(x, y), MinQuality(y, x));
}

// C0-GH by coupled enumeration over all pairs (i, j); no decoupling assumed.
inline double CoupledGh0(const Mat& x, const std::vector<double>& f, const Mat& y,
                         const std::vector<double>& g) {
  std::vector<double> cost_i, cost_j;
  ForEachMap(x.size(), y.size(), [&](const Image& i) {
    double c = std::max(Distortion(x, y, i), Codefect(y, i));
    for (std::size_t a = 0; a < x.size(); ++a) c = std::max(c, std::abs(g[i[a]] - f[a]));
    cost_i.push_back(c);
  });
  ForEachMap(y.size(), x.size(), [&](const Image& j) {
    double c = std::max(Distortion(y, x, j), Codefect(x, j));
    for (std::size_t b = 0; b < y.size(); ++b) c = std::max(c, std::abs(g[b] - f[j[b]]));
    cost_j.push_back(c);
  });
  double best = std::numeric_limits<double>::infinity();
  for (double ci : cost_i) {
    for (double cj : cost_j) best = std::min(best, std::max(ci, cj));
  }
  return best;
}

inline double SupDiff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

inline double PairOscillation(const Mat& d, const std::vector<double>& f, double rho) {
  double worst = 0.0;
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = 0; b < d.size(); ++b) {
      if (a != b && d[a][b] < rho) worst = std::max(worst, std::abs(f[a] - f[b]));
    }
  }
  return worst;
}

// Dimension of the null space of the level-set system of a family, via a full
// pivoting LU on a matrix assembled from scratch.
inline std::size_t LevelSystemNullity(const std::vector<std::vector<double>>& members,
                                      std::size_t n) {
  std::vector<std::vector<double>> rows;
  for (const auto& f : members) {
    std::vector<bool> used(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      if (used[a]) continue;
      std::vector<double> row(n, 0.0);
      for (std::size_t b = 0; b < n; ++b) {
        if (f[b] == f[a]) {
          row[b] = 1.0;
          used[b] = true;
        }
      }
      rows.push_back(row);
    }
  }
  if (rows.empty()) return n;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  return n - static_cast<std::size_t>(lu.rank());
}

}  // namespace ghapprox::oracle

#endif  // GHAPPROX_TESTS_ORACLES_H_
