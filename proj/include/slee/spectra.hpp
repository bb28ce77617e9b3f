#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "slee/graph.hpp"

namespace slee {

using BigInt = boost::multiprecision::cpp_int;

enum class MatrixKind { adjacency, laplacian, signless_laplacian };

std::string matrix_kind_name(MatrixKind kind);

// Dense real symmetric matrix, row-major.
struct SymMatrix {
  int n = 0;
  MatrixKind kind = MatrixKind::adjacency;
  std::vector<double> a;

  double at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  }
  double& at(int i, int j) {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  }
};

SymMatrix build_matrix(const Graph& g, MatrixKind kind);

struct Spectrum {
  std::vector<double> values;  // descending
  MatrixKind matrix_kind = MatrixKind::adjacency;
  double residual = 0.0;       // max |off-diagonal| at termination
};

// Cyclic Jacobi. Runs full sweeps until every off-diagonal magnitude drops
// below tol; throws Errc::no_convergence after the sweep cap (unreachable
// for the small integer matrices this library builds).
Spectrum eigenvalues(const SymMatrix& m, double tol = 1e-12);

struct EstradaIndices {
  double ee = 0.0;
  double lee = 0.0;
  double slee = 0.0;
};

EstradaIndices estrada_indices(const Graph& g);

// SLEE alone, via the signless Laplacian spectrum. The sweep hot path.
double slee_eigen(const Graph& g);

// Exact integer symmetric matrix, used for powers of Q = D + A. Entries of
// Q^k grow like (2(n-1))^k, hence arbitrary precision.
struct IntMatrix {
  int n = 0;
  std::vector<BigInt> a;

  static IntMatrix identity(int n);
  const BigInt& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  }
  BigInt& at(int i, int j) {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  }
  IntMatrix multiply(const IntMatrix& rhs) const;
  BigInt trace() const;

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix signless_laplacian_int(const Graph& g);

// T_0..T_k_max together with the powers Q^0..Q^k_max they were read from.
struct MomentTable {
  int k_max = 0;
  std::vector<BigInt> traces;
  std::vector<IntMatrix> power_entries;
};

MomentTable moment_table(const Graph& g, int k_max);

// SLEE as the series sum of T_k / k!, truncated once the analytic tail
// bound with spectral radius <= 2(n-1) drops below tol.
double slee_series(const Graph& g, double tol = 1e-10);

}  // namespace slee
