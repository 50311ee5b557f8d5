// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "error.hpp"

namespace llscond::linalg {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::NonFinite, std::string(what) + " contains a non-finite entry");
    }
  }
}

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths differ (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// DenseVector

DenseVector::DenseVector(std::size_t len, double fill) : data_(len, fill) {
  require_finite(data_, "vector");
}

DenseVector::DenseVector(std::vector<double> entries) : data_(std::move(entries)) {
  require_finite(data_, "vector");
}

DenseVector::DenseVector(std::initializer_list<double> entries) : data_(entries) {
  require_finite(data_, "vector");
}

DenseVector& DenseVector::operator+=(const DenseVector& o) {
  require_same_size(size(), o.size());
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

DenseVector& DenseVector::operator-=(const DenseVector& o) {
  require_same_size(size(), o.size());
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

DenseVector& DenseVector::operator*=(double c) {
  for (double& v : data_) v *= c;
  return *this;
}

DenseVector operator+(DenseVector a, const DenseVector& b) { return a += b; }
DenseVector operator-(DenseVector a, const DenseVector& b) { return a -= b; }
DenseVector operator-(DenseVector a) { return a *= -1.0; }
DenseVector operator*(double c, DenseVector a) { return a *= c; }

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) {
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double v : a) {
    const double t = v / scale;
    s += t * t;
  }
  return scale * std::sqrt(s);
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> col_major)
    : rows_(rows), cols_(cols), data_(std::move(col_major)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                    std::to_string(data_.size()));
  }
  require_finite(data_, "matrix");
}

DenseMatrix DenseMatrix::identity(std::size_t n) { return eye(n, n); }

DenseMatrix DenseMatrix::eye(std::size_t rows, std::size_t cols) {
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<double> data(r * c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged row list");
    std::size_t j = 0;
    for (double v : row) data[j++ * r + i] = v;
    ++i;
  }
  return DenseMatrix(r, c, std::move(data));
}

DenseMatrix DenseMatrix::outer(const DenseVector& u, const DenseVector& v) {
  DenseMatrix m(u.size(), v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < u.size(); ++i) m(i, j) = u[i] * v[j];
  return m;
}

DenseVector DenseMatrix::column_vector(std::size_t j) const {
  auto c = column(j);
  return DenseVector(std::vector<double>(c.begin(), c.end()));
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) t(j, i) = (*this)(i, j);
  return t;
}

double DenseMatrix::frobenius_norm() const { return norm2(data_); }

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double c) {
  for (double& v : data_) v *= c;
  return *this;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
DenseMatrix operator*(double c, DenseMatrix a) { return a *= c; }

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double bkj = b(k, j);
      if (bkj == 0.0) continue;
      for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) += a(i, k) * bkj;
    }
  return c;
}

DenseVector operator*(const DenseMatrix& a, const DenseVector& x) {
  require_same_size(a.cols(), x.size());
  DenseVector y(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double xj = x[j];
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] += a(i, j) * xj;
  }
  return y;
}

DenseVector transpose_times(const DenseMatrix& a, const DenseVector& y) {
  require_same_size(a.rows(), y.size());
  DenseVector x(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) x[j] = dot(a.column(j), y.span());
  return x;
}

double trace_inner(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  return dot(a.vec(), b.vec());
}

// ---------------------------------------------------------------------------
// SVD

namespace {

constexpr int kMaxSweeps = 80;

// Orthogonalizes the columns of w in place by plane rotations, accumulating
// them into v when given. On return w = A v has mutually orthogonal columns.
void one_sided_jacobi(DenseMatrix& w, DenseMatrix* v) {
  const std::size_t m = w.rows();
  const std::size_t n = w.cols();
  const double tol = static_cast<double>(std::max<std::size_t>(m, 4)) *
                     std::numeric_limits<double>::epsilon();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        auto wp = w.column(p);
        auto wq = w.column(q);
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += wp[i] * wp[i];
          beta += wq[i] * wq[i];
          gamma += wp[i] * wq[i];
        }
        if (gamma == 0.0 || std::abs(gamma) <= tol * std::sqrt(alpha) * std::sqrt(beta)) continue;
        rotated = true;

        const double zeta = (beta - alpha) / (2.0 * gamma);
        double t;
        if (std::abs(zeta) > 1e150) {
          t = 0.5 / zeta;
        } else {
          t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double a = wp[i];
          const double b = wq[i];
          wp[i] = c * a - s * b;
          wq[i] = s * a + c * b;
        }
        if (v != nullptr) {
          auto vp = v->column(p);
          auto vq = v->column(q);
          for (std::size_t i = 0; i < v->rows(); ++i) {
            const double a = vp[i];
            const double b = vq[i];
            vp[i] = c * a - s * b;
            vq[i] = s * a + c * b;
          }
        }
      }
    }
    if (!rotated) return;
  }
  throw Error(ErrorCode::FactorizationFailure,
              "one-sided Jacobi SVD did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
}

// Largest-magnitude entry positive, lowest index on ties.
bool needs_flip(std::span<const double> col) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < col.size(); ++i)
    if (std::abs(col[i]) > std::abs(col[best])) best = i;
  return !col.empty() && col[best] < 0.0;
}

void negate(std::span<double> col) {
  for (double& x : col) x = -x;
}

// Fills columns [first, m) of q (m x m) with an orthonormal completion of
// columns [0, first), drawing candidates from the standard basis.
void complete_basis(DenseMatrix& q, std::size_t first) {
  const std::size_t m = q.rows();
  for (std::size_t k = first; k < m; ++k) {
    std::vector<double> best;
    double best_norm = -1.0;
    for (std::size_t e = 0; e < m; ++e) {
      std::vector<double> cand(m, 0.0);
      cand[e] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < k; ++j) {
          const double proj = dot(q.column(j), cand);
          auto qj = q.column(j);
          for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * qj[i];
        }
      }
      const double nrm = norm2(cand);
      if (nrm > best_norm) {
        best_norm = nrm;
        best = std::move(cand);
      }
      if (best_norm > 0.7) break;
    }
    auto col = q.column(k);
    for (std::size_t i = 0; i < m; ++i) col[i] = best[i] / best_norm;
  }
}

// SVD for rows >= cols.
SvdResult svd_tall(const DenseMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  DenseMatrix w = a;
  DenseMatrix v = DenseMatrix::identity(n);
  one_sided_jacobi(w, &v);

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = norm2(w.column(j));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  SvdResult out{DenseMatrix(m, m), DenseVector(n), DenseMatrix(n, n)};
  const double sigma_max = norms.empty() ? 0.0 : norms[order[0]];
  const double negligible =
      sigma_max * static_cast<double>(std::max(m, n)) * std::numeric_limits<double>::epsilon();

  std::size_t rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.singular_values[k] = norms[j];
    std::copy(v.column(j).begin(), v.column(j).end(), out.right_vectors.column(k).begin());
    if (norms[j] > negligible && norms[j] > 0.0) {
      auto src = w.column(j);
      auto dst = out.left_vectors.column(k);
      for (std::size_t i = 0; i < m; ++i) dst[i] = src[i] / norms[j];
      rank = k + 1;
    }
  }
  complete_basis(out.left_vectors, rank);

  for (std::size_t k = 0; k < n; ++k) {
    if (needs_flip(out.right_vectors.column(k))) {
      negate(out.right_vectors.column(k));
      negate(out.left_vectors.column(k));
    }
  }
  for (std::size_t k = n; k < m; ++k) {
    if (needs_flip(out.left_vectors.column(k))) negate(out.left_vectors.column(k));
  }
  return out;
}

}  // namespace

SvdResult svd(const DenseMatrix& m) {
  require_finite(m.vec(), "matrix");
  if (m.rows() == 0 || m.cols() == 0) {
    throw Error(ErrorCode::InvalidArgument, "svd of an empty matrix");
  }
  if (m.rows() >= m.cols()) return svd_tall(m);

  SvdResult t = svd_tall(m.transpose());
  SvdResult out{std::move(t.right_vectors), std::move(t.singular_values),
                std::move(t.left_vectors)};
  const std::size_t k = out.singular_values.size();
  // Re-normalize: the convention is stated on right vectors.
  for (std::size_t j = 0; j < k; ++j) {
    if (needs_flip(out.right_vectors.column(j))) {
      negate(out.right_vectors.column(j));
      negate(out.left_vectors.column(j));
    }
  }
  for (std::size_t j = k; j < out.right_vectors.cols(); ++j) {
    if (needs_flip(out.right_vectors.column(j))) negate(out.right_vectors.column(j));
  }
  return out;
}

DenseVector singular_values(const DenseMatrix& m) {
  require_finite(m.vec(), "matrix");
  if (m.rows() == 0 || m.cols() == 0) {
    throw Error(ErrorCode::InvalidArgument, "svd of an empty matrix");
  }
  DenseMatrix w = m.rows() >= m.cols() ? m : m.transpose();
  one_sided_jacobi(w, nullptr);
  std::vector<double> s(w.cols());
  for (std::size_t j = 0; j < w.cols(); ++j) s[j] = norm2(w.column(j));
  std::sort(s.begin(), s.end(), std::greater<>());
  return DenseVector(std::move(s));
}

double nuclear_norm_oracle(const DenseMatrix& m) {
  const DenseVector s = singular_values(m);
  double sum = 0.0;
  for (std::size_t i = s.size(); i-- > 0;) sum += s[i];
  return sum;
}

double spectral_norm(const DenseMatrix& m) { return singular_values(m)[0]; }

// ---------------------------------------------------------------------------
// QR least squares

DenseVector qr_least_squares(const DenseMatrix& a, const DenseVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side has length " +
                                                  std::to_string(b.size()) + ", matrix has " +
                                                  std::to_string(m) + " rows");
  }
  if (m < n) {
    throw Error(ErrorCode::DimensionMismatch, "least squares needs rows >= cols");
  }
  const DenseVector s = singular_values(a);
  if (!(s[n - 1] > kRankTolerance * s[0])) {
    throw Error(ErrorCode::RankDeficient,
                "matrix is numerically rank deficient (sigma_min/sigma_max <= 1e-12); "
                "the least-squares solution is not unique and has no finite condition number");
  }
  return householder_least_squares(a, b);
}

DenseVector householder_least_squares(const DenseMatrix& a, const DenseVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  require_same_size(m, b.size());
  DenseMatrix r = a;
  DenseVector qtb = b;
  std::vector<double> h(m);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t len = m - k;
    double nrm = norm2(std::span<const double>(r.column(k).data() + k, len));
    if (nrm == 0.0) continue;
    const double alpha = r(k, k) > 0.0 ? -nrm : nrm;
    for (std::size_t i = 0; i < len; ++i) h[i] = r(k + i, k);
    h[0] -= alpha;
    double hh = 0.0;
    for (std::size_t i = 0; i < len; ++i) hh += h[i] * h[i];
    if (hh == 0.0) continue;
    const double scale = 2.0 / hh;
    for (std::size_t j = k; j < n; ++j) {
      double d = 0.0;
      for (std::size_t i = 0; i < len; ++i) d += h[i] * r(k + i, j);
      d *= scale;
      for (std::size_t i = 0; i < len; ++i) r(k + i, j) -= d * h[i];
    }
    double d = 0.0;
    for (std::size_t i = 0; i < len; ++i) d += h[i] * qtb[k + i];
    d *= scale;
    for (std::size_t i = 0; i < len; ++i) qtb[k + i] -= d * h[i];
  }

  DenseVector x(n);
  for (std::size_t k = n; k-- > 0;) {
    double acc = qtb[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= r(k, j) * x[j];
    x[k] = acc / r(k, k);
  }
  return x;
}

}  // namespace llscond::linalg
