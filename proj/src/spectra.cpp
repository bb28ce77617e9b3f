#include "slee/spectra.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include <algorithm>
#include <functional>

namespace slee {

using boost::multiprecision::cpp_rational;

std::string matrix_kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return "adjacency";
    case MatrixKind::laplacian: return "laplacian";
    case MatrixKind::signless_laplacian: return "signless_laplacian";
  }
  return "unknown";
}

SymMatrix build_matrix(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  SymMatrix m;
  m.n = n;
  m.kind = kind;
  m.a.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    if (kind != MatrixKind::adjacency)
      m.at(i, i) = static_cast<double>(g.degree(i));
    for (int j : g.neighbors(i))
      m.at(i, j) = (kind == MatrixKind::laplacian) ? -1.0 : 1.0;
  }
  return m;
}

namespace {

constexpr int kJacobiSweepCap = 100;

double max_offdiag(const SymMatrix& m) {
  double worst = 0.0;
  for (int p = 0; p < m.n; ++p)
    for (int q = p + 1; q < m.n; ++q)
      worst = std::max(worst, std::fabs(m.at(p, q)));
  return worst;
}

}  // namespace

Spectrum eigenvalues(const SymMatrix& input, double tol) {
  if (!(tol > 0.0))
    throw Error(Errc::invalid_parameter, "eigenvalues: tol must be positive");
  SymMatrix m = input;
  const int n = m.n;

  int sweeps = 0;
  double off = max_offdiag(m);
  while (off >= tol) {
    if (++sweeps > kJacobiSweepCap)
      throw Error(Errc::no_convergence,
                  "jacobi: no convergence after " +
                      std::to_string(kJacobiSweepCap) + " sweeps");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m.at(p, q);
        if (apq == 0.0) continue;
        const double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = m.at(p, p);
        const double aqq = m.at(q, q);
        m.at(p, p) = app - t * apq;
        m.at(q, q) = aqq + t * apq;
        m.at(p, q) = 0.0;
        m.at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = m.at(r, p);
          const double arq = m.at(r, q);
          m.at(r, p) = arp - s * (arq + tau * arp);
          m.at(p, r) = m.at(r, p);
          m.at(r, q) = arq + s * (arp - tau * arq);
          m.at(q, r) = m.at(r, q);
        }
      }
    }
    off = max_offdiag(m);
  }

  Spectrum spec;
  spec.matrix_kind = input.kind;
  spec.residual = off;
  spec.values.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) spec.values.push_back(m.at(i, i));
  std::sort(spec.values.begin(), spec.values.end(), std::greater<double>());
  return spec;
}

namespace {

double exp_sum(const std::vector<double>& values) {
  double s = 0.0;
  for (double v : values) s += std::exp(v);
  return s;
}

}  // namespace

EstradaIndices estrada_indices(const Graph& g) {
  EstradaIndices out;
  out.ee = exp_sum(eigenvalues(build_matrix(g, MatrixKind::adjacency)).values);
  out.lee = exp_sum(eigenvalues(build_matrix(g, MatrixKind::laplacian)).values);
  out.slee =
      exp_sum(eigenvalues(build_matrix(g, MatrixKind::signless_laplacian)).values);
  return out;
}

double slee_eigen(const Graph& g) {
  return exp_sum(
      eigenvalues(build_matrix(g, MatrixKind::signless_laplacian)).values);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
             BigInt(0));
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
  IntMatrix out;
  out.n = n;
  out.a.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
               BigInt(0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const BigInt& lik = at(i, k);
      if (lik.is_zero()) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += lik * rhs.at(k, j);
    }
  }
  return out;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (int i = 0; i < n; ++i) t += at(i, i);
  return t;
}

IntMatrix signless_laplacian_int(const Graph& g) {
  const int n = g.order();
  IntMatrix m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
             BigInt(0));
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = g.degree(i);
    for (int j : g.neighbors(i)) m.at(i, j) = 1;
  }
  return m;
}

MomentTable moment_table(const Graph& g, int k_max) {
  if (k_max < 0)
    throw Error(Errc::invalid_parameter, "moment_table: k_max must be >= 0");
  MomentTable table;
  table.k_max = k_max;
  const IntMatrix q = signless_laplacian_int(g);
  IntMatrix power = IntMatrix::identity(g.order());
  table.traces.push_back(power.trace());
  table.power_entries.push_back(power);
  for (int k = 1; k <= k_max; ++k) {
    power = power.multiply(q);
    table.traces.push_back(power.trace());
    table.power_entries.push_back(power);
  }
  return table;
}

double slee_series(const Graph& g, double tol) {
  if (!(tol > 0.0))
    throw Error(Errc::invalid_parameter, "slee_series: tol must be positive");
  const int n = g.order();
  const double qbar = 2.0 * (n - 1);  // q_max <= 2(n-1) since max degree <= n-1

  const IntMatrix q = signless_laplacian_int(g);
  IntMatrix power = IntMatrix::identity(n);
  BigInt factorial = 1;
  double sum = 0.0;
  for (int k = 0;; ++k) {
    if (k > 0) {
      power = power.multiply(q);
      factorial *= k;
    }
    const cpp_rational term(power.trace(), factorial);
    sum += term.convert_to<double>();

    if (qbar == 0.0) break;  // K_1: only T_0 is nonzero
    if (k + 2 > qbar) {
      // tail <= n qbar^{k+1}/(k+1)! * 1/(1 - qbar/(k+2)), in log space
      const double log_tail = std::log(static_cast<double>(n)) +
                              (k + 1) * std::log(qbar) -
                              std::lgamma(static_cast<double>(k + 2)) -
                              std::log1p(-qbar / (k + 2));
      if (log_tail < std::log(tol)) break;
    }
  }
  return sum;
}

}  // namespace slee
