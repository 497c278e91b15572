#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace roadrank::testkit {

std::vector<std::vector<bool>> transitive_closure(std::size_t n, const EdgeList& edges) {
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& [a, b] : edges) reach[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

std::vector<std::size_t> closure_scc_labels(std::size_t n, const EdgeList& edges) {
  const auto reach = transitive_closure(n, edges);
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) {
    label[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (reach[i][j] && reach[j][i]) {
        label[i] = label[j];
        break;
      }
    }
  }
  return label;
}

std::size_t closure_largest_scc(std::size_t n, const EdgeList& edges) {
  const auto label = closure_scc_labels(n, edges);
  std::vector<std::size_t> count(n, 0);
  std::size_t best = 0;
  for (std::size_t l : label) best = std::max(best, ++count[l]);
  return best;
}

bool has_cycle(std::size_t n, const EdgeList& edges) {
  std::set<std::pair<std::size_t, std::size_t>> unique(edges.begin(), edges.end());
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [a, b] : unique) {
    if (a == b) return true;
    succ[a].push_back(b);
    ++indegree[b];
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t w : succ[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return removed != n;
}

std::vector<double> dense_pagerank(std::size_t n, const EdgeList& edges, double damping) {
  std::set<std::pair<std::size_t, std::size_t>> unique;
  for (const auto& e : edges)
    if (e.first != e.second) unique.insert(e);
  std::vector<double> outdeg(n, 0.0);
  for (const auto& [from, to] : unique) outdeg[from] += 1.0;

  // Augmented matrix [A | b] with A = I - d P.
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 1.0;
    a[i][n] = 1.0 - damping;
  }
  for (const auto& [from, to] : unique) a[to][from] -= damping / outdeg[from];

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) throw std::runtime_error("singular system");
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      if (factor == 0.0) continue;
      for (std::size_t k = col; k <= n; ++k) a[r][k] -= factor * a[col][k];
    }
  }
  std::vector<double> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i][n] / a[i][i];
  return c;
}

double law_of_cosines_km(double lat1_deg, double lon1_deg, double lat2_deg, double lon2_deg, double r) {
  const double k = std::numbers::pi / 180.0;
  const double p1 = lat1_deg * k;
  const double p2 = lat2_deg * k;
  const double dl = (lon2_deg - lon1_deg) * k;
  double cos_angle = std::sin(p1) * std::sin(p2) + std::cos(p1) * std::cos(p2) * std::cos(dl);
  cos_angle = std::clamp(cos_angle, -1.0, 1.0);
  return r * std::acos(cos_angle);
}

NormalEquationFit normal_equations_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += static_cast<long double>(x[i]) * x[i];
    sxy += static_cast<long double>(x[i]) * y[i];
  }
  // Cramer's rule on the 2x2 system.
  const long double det = n * sxx - sx * sx;
  const long double slope = (n * sxy - sx * sy) / det;
  const long double intercept = (sy * sxx - sx * sxy) / det;
  const long double mean_y = sy / n;
  long double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long double fitted = intercept + slope * x[i];
    ss_res += (y[i] - fitted) * (y[i] - fitted);
    ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
  }
  return {static_cast<double>(slope), static_cast<double>(intercept), static_cast<double>(1.0L - ss_res / ss_tot)};
}

Fraction::Fraction(std::int64_t n, std::int64_t d) {
  const std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

Fraction Fraction::operator+(const Fraction& o) const {
  return Fraction(num * o.den + o.num * den, den * o.den);
}

}  // namespace roadrank::testkit
