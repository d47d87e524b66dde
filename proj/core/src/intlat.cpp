#include "tropfan/intlat.hpp"

#include "tropfan/error.hpp"

#include <algorithm>
#include <utility>

namespace tropfan {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

// Row and column operations applied simultaneously to a working matrix and
// its accumulated left/right transforms.
class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : d_(a), p_(IntMatrix::identity(a.rows())), q_(IntMatrix::identity(a.cols())) {}

  SmithForm run() {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    IntVector factors;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      if (!reduce_block(t)) break;
      if (d_(t, t) < 0) negate_row(t);
      factors.push_back(d_(t, t));
    }
    return SmithForm{std::move(p_), std::move(d_), std::move(q_), std::move(factors)};
  }

 private:
  // Brings the block starting at (t, t) to the form pivot (+) block with the
  // pivot dividing every remaining entry. Returns false if the block is zero.
  bool reduce_block(std::size_t t) {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (d_(i, j) == 0) continue;
          if (pi == m || abs(d_(i, j)) < abs(d_(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) return false;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d_(i, t) == 0) continue;
        Integer q = d_(i, t) / d_(t, t);
        add_row(i, t, -q);
        if (d_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d_(t, j) == 0) continue;
        Integer q = d_(t, j) / d_(t, t);
        add_col(j, t, -q);
        if (d_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d_(i, j) % d_(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) return true;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    for (std::size_t j = 0; j < p_.cols(); ++j) std::swap(p_(a, j), p_(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    for (std::size_t i = 0; i < q_.rows(); ++i) std::swap(q_(i, a), q_(i, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(dst, j) += k * d_(src, j);
    for (std::size_t j = 0; j < p_.cols(); ++j) p_(dst, j) += k * p_(src, j);
  }
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, dst) += k * d_(i, src);
    for (std::size_t i = 0; i < q_.rows(); ++i) q_(i, dst) += k * q_(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(r, j) = -d_(r, j);
    for (std::size_t j = 0; j < p_.cols(); ++j) p_(r, j) = -p_(r, j);
  }

  IntMatrix d_;
  IntMatrix p_;
  IntMatrix q_;
};

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::BadParameters, "matrix dimensions must be positive");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : IntMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (long long x : r) (*this)(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) throw Error(ErrorCode::BadParameters, "matrix needs at least one row");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t height) {
  IntMatrix m(height, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != height) throw Error(ErrorCode::DimensionMismatch, "ragged columns");
    for (std::size_t i = 0; i < height; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j] != 0) s += (*this)(i, j) * v[j];
    }
    out[i] = std::move(s);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  return a.rows() == a.cols() && abs(determinant(a)) == 1;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!is_unimodular(a)) throw Error(ErrorCode::BadParameters, "matrix is not unimodular");
  const std::size_t n = a.rows();
  std::vector<RatVector> aug(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(a(i, j));
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rational f = aug[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[c][j];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = boost::multiprecision::numerator(aug[i][n + j]);
  }
  return out;
}

SmithForm snf(const IntMatrix& a) { return SmithReducer(a).run(); }

HermiteForm hnf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(n);
  std::vector<std::size_t> pivots;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(h(i, x), h(i, y));
    for (std::size_t i = 0; i < n; ++i) std::swap(u(i, x), u(i, y));
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < m; ++i) h(i, dst) += k * h(i, src);
    for (std::size_t i = 0; i < n; ++i) u(i, dst) += k * u(i, src);
  };

  std::size_t c = 0;
  for (std::size_t i = 0; i < m && c < n; ++i) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = c; j < n; ++j) {
        if (h(i, j) != 0 && (best == n || abs(h(i, j)) < abs(h(i, best)))) best = j;
      }
      if (best == n) break;
      swap_cols(c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (h(i, j) == 0) continue;
        add_col(j, c, -(h(i, j) / h(i, c)));
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (c >= n || h(i, c) == 0) continue;
    if (h(i, c) < 0) {
      for (std::size_t r = 0; r < m; ++r) h(r, c) = -h(r, c);
      for (std::size_t r = 0; r < n; ++r) u(r, c) = -u(r, c);
    }
    for (std::size_t k = 0; k < c; ++k) add_col(k, c, -floor_div(h(i, k), h(i, c)));
    pivots.push_back(i);
    ++c;
  }
  return HermiteForm{std::move(h), std::move(u), std::move(pivots)};
}

std::optional<IntVector> lattice_solve(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "lattice_solve: rhs length");
  HermiteForm form = hnf(a);
  const std::size_t n = a.cols();
  IntVector y(n);
  for (std::size_t k = 0; k < form.rank(); ++k) {
    const std::size_t r = form.pivot_rows[k];
    Integer rhs = b[r];
    for (std::size_t j = 0; j < k; ++j) rhs -= form.H(r, j) * y[j];
    if (rhs % form.H(r, k) != 0) return std::nullopt;
    y[k] = rhs / form.H(r, k);
  }
  if (form.H.apply(y) != b) return std::nullopt;
  return form.U.apply(y);
}

IntMatrix complete_unimodular(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) throw Error(ErrorCode::BadParameters, "complete_unimodular needs rows >= cols");
  SmithForm s = snf(a);
  bool ok = s.rank() == n &&
            std::all_of(s.invariant_factors.begin(), s.invariant_factors.end(),
                        [](const Integer& x) { return x == 1; });
  if (!ok) {
    throw Error(ErrorCode::NotLeftInvertible,
                "columns do not span a direct summand of Z^m (Smith form is not (E_n; 0))");
  }
  IntMatrix block = IntMatrix::identity(m);
  IntMatrix q_inv = inverse_unimodular(s.Q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) block(i, j) = q_inv(i, j);
  }
  return inverse_unimodular(s.P) * block;
}

std::vector<IntVector> row_lattice_basis(const IntMatrix& a) {
  HermiteForm form = hnf(a.transpose());
  std::vector<IntVector> basis;
  for (std::size_t k = 0; k < form.rank(); ++k) basis.push_back(form.H.column(k));
  return basis;
}

namespace {

// Rows of the returned matrix express each row of `target` as an integer
// combination of the rows of `source`; none if some row is not reachable.
std::optional<std::vector<IntVector>> factor_rows(const IntMatrix& source,
                                                  const std::vector<IntVector>& target) {
  IntMatrix st = source.transpose();
  std::vector<IntVector> out;
  for (const auto& row : target) {
    auto z = lattice_solve(st, row);
    if (!z) return std::nullopt;
    out.push_back(std::move(*z));
  }
  return out;
}

std::vector<IntVector> rows_of(const IntMatrix& a) {
  std::vector<IntVector> r;
  for (std::size_t i = 0; i < a.rows(); ++i) r.push_back(a.row(i));
  return r;
}

}  // namespace

IntMatrix unimodular_transport(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "unimodular_transport: shapes differ");
  }
  const std::size_t m = a.rows();
  if (!factor_rows(a, rows_of(b)) || !factor_rows(b, rows_of(a))) {
    throw Error(ErrorCode::NoMutualFactorization,
                "the row lattices of A and B differ; no integer M_AB, M_BA exist");
  }
  std::vector<IntVector> c_rows = row_lattice_basis(a);
  if (c_rows.empty()) return IntMatrix::identity(m);  // A = B = 0

  IntMatrix c = IntMatrix::from_rows(c_rows);
  IntMatrix m_ca = IntMatrix::from_rows(*factor_rows(c, rows_of(a)));
  IntMatrix m_cb = IntMatrix::from_rows(*factor_rows(c, rows_of(b)));

  IntMatrix a_ext = complete_unimodular(m_ca);
  IntMatrix b_ext = complete_unimodular(m_cb);
  return b_ext * inverse_unimodular(a_ext);
}

}  // namespace tropfan
