#pragma once

// Minimal dense complex linear algebra: Kronecker products, Hermitian
// eigendecomposition, partial trace, partial transpose, trace distance.
// Subsystem 1 is always the slow index: i = i1 * d2 + i2.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "su2ent/core.hpp"

namespace su2ent {

inline constexpr Index kron_dim_cap = 65536;

inline double hermiticity_defect(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const Matrix& m, double tol = tol::hermiticity) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

inline void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(who) + ": matrix is not square");
}

inline void require_hermitian(const Matrix& m, const char* who,
                              double tol = tol::hermiticity) {
  require_square(m, who);
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    std::ostringstream os;
    os << who << ": input is not Hermitian (defect " << defect << " > " << tol << ")";
    throw ContractViolation(os.str());
  }
}

// Induced 1-norm (max column absolute sum).
inline double norm_1(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

inline Matrix kron(const Matrix& a, const Matrix& b, Index dim_cap = kron_dim_cap) {
  require_square(a, "kron");
  require_square(b, "kron");
  const Index da = a.rows(), db = b.rows();
  if (da != 0 && da * db > dim_cap) {
    std::ostringstream os;
    os << "kron: output dimension " << da * db << " exceeds cap " << dim_cap;
    throw DimensionError(os.str());
  }
  Matrix out(da * db, da * db);
  for (Index i1 = 0; i1 < da; ++i1)
    for (Index j1 = 0; j1 < da; ++j1)
      out.block(i1 * db, j1 * db, db, db) = a(i1, j1) * b;
  return out;
}

// Eigenvalue cluster after grouping at tolerance tau: representative value
// (cluster mean) and multiplicity.
struct EigenCluster {
  double value = 0.0;
  int multiplicity = 0;
};

struct Spectrum {
  RealVector eigenvalues;              // ascending
  std::vector<EigenCluster> clusters;  // degenerate groups, ascending
};

inline Spectrum cluster_spectrum(const RealVector& eigenvalues, double tau) {
  Spectrum s;
  s.eigenvalues = eigenvalues;
  const Index n = eigenvalues.size();
  Index start = 0;
  while (start < n) {
    Index stop = start + 1;
    while (stop < n && eigenvalues(stop) - eigenvalues(start) < tau) ++stop;
    EigenCluster c;
    c.multiplicity = static_cast<int>(stop - start);
    c.value = eigenvalues.segment(start, stop - start).mean();
    s.clusters.push_back(c);
    start = stop;
  }
  return s;
}

struct EighResult {
  Spectrum spectrum;
  Matrix eigenvectors;  // columns, ordered with ascending eigenvalues
};

// Hermitian eigendecomposition m = V diag(lambda) V^dag. Eigenvalue clusters
// are formed at tau = degeneracy_rel * max(||m||_1, 1).
inline EighResult eigh(const Matrix& m) {
  require_hermitian(m, "eigh");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw Error("eigh: eigensolver failed to converge");
  EighResult r;
  const double tau = tol::degeneracy_rel * std::max(norm_1(m), 1.0);
  r.spectrum = cluster_spectrum(solver.eigenvalues(), tau);
  r.eigenvectors = solver.eigenvectors();
  return r;
}

// Transpose of the second subsystem only:
// out_{(i1 i2),(j1 j2)} = m_{(i1 j2),(j1 i2)}.
inline Matrix partial_transpose_2(const Matrix& m, Index d1, Index d2) {
  require_square(m, "partial_transpose_2");
  if (m.rows() != d1 * d2) {
    std::ostringstream os;
    os << "partial_transpose_2: dim " << m.rows() << " != " << d1 << " * " << d2;
    throw DimensionError(os.str());
  }
  Matrix out(m.rows(), m.cols());
  for (Index i1 = 0; i1 < d1; ++i1)
    for (Index j1 = 0; j1 < d1; ++j1)
      out.block(i1 * d2, j1 * d2, d2, d2) =
          m.block(i1 * d2, j1 * d2, d2, d2).transpose();
  return out;
}

// Partial trace over all sites not in `keep`. Site dimensions are given in
// order, site 0 slowest. Kept sites stay in their original relative order.
inline Matrix partial_trace(const Matrix& m, const std::vector<Index>& dims,
                            std::vector<int> keep) {
  require_square(m, "partial_trace");
  const int n = static_cast<int>(dims.size());
  Index total = 1;
  for (Index d : dims) total *= d;
  if (m.rows() != total)
    throw DimensionError("partial_trace: matrix dim does not match product of site dims");
  if (keep.empty()) throw ArgumentError("partial_trace: keep set is empty");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int k : keep)
    if (k < 0 || k >= n)
      throw ArgumentError("partial_trace: keep index " + std::to_string(k) +
                          " out of range");

  std::vector<Index> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  std::vector<int> traced;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(keep.begin(), keep.end(), i)) traced.push_back(i);

  Index dk = 1, dt = 1;
  for (int k : keep) dk *= dims[k];
  for (int t : traced) dt *= dims[t];

  // Global offset of every kept and traced multi-index.
  auto offsets = [&](const std::vector<int>& sites, Index count) {
    std::vector<Index> off(count, 0);
    for (Index x = 0; x < count; ++x) {
      Index rem = x;
      for (int s = static_cast<int>(sites.size()) - 1; s >= 0; --s) {
        const Index d = dims[sites[s]];
        off[x] += (rem % d) * stride[sites[s]];
        rem /= d;
      }
    }
    return off;
  };
  const std::vector<Index> off_k = offsets(keep, dk);
  const std::vector<Index> off_t = offsets(traced, dt);

  Matrix out = Matrix::Zero(dk, dk);
  for (Index a = 0; a < dk; ++a)
    for (Index b = 0; b < dk; ++b) {
      Complex sum = 0.0;
      for (Index t = 0; t < dt; ++t) sum += m(off_k[a] + off_t[t], off_k[b] + off_t[t]);
      out(a, b) = sum;
    }
  return out;
}

// Half the sum of absolute eigenvalues of a - b.
inline double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("trace_distance: dimension mismatch");
  require_hermitian(a, "trace_distance");
  require_hermitian(b, "trace_distance");
  const EighResult diff = eigh(a - b);
  return 0.5 * diff.spectrum.eigenvalues.cwiseAbs().sum();
}

inline double commutator_norm(const Matrix& a, const Matrix& b) {
  return (a * b - b * a).cwiseAbs().maxCoeff();
}

}  // namespace su2ent
