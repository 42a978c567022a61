#include "isokit/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <utility>

#include "isokit/kernels.hpp"

namespace isokit {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(where) + ": lengths " + std::to_string(a) + " and " + std::to_string(b));
  }
}

// Row-reduces `m` in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatVector> to_rows(const IntMatrix& m) {
  std::vector<RatVector> rows(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += f * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

IntVector int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

RatVector rat_vector(std::initializer_list<std::pair<long, long>> values) {
  RatVector v;
  for (auto [n, d] : values) {
    Rat q(n, d);
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

std::optional<IntVector> to_integral(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  return out;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  require_same_length(a.size(), b.size(), "vector sum");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  require_same_length(a.size(), b.size(), "vector difference");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector operator-(const IntVector& a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

IntVector operator*(const Int& s, const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  require_same_length(a.size(), b.size(), "vector sum");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  require_same_length(a.size(), b.size(), "vector difference");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector operator*(const Rat& s, const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Int dot(const IntVector& a, const IntVector& b) {
  require_same_length(a.size(), b.size(), "pairing");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVector& a, const RatVector& b) {
  require_same_length(a.size(), b.size(), "pairing");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

std::string format(const Int& x) { return x.get_str(); }
std::string format(const Rat& x) { return x.get_str(); }

std::string format(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string format(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_length(rows[i].size(), cols, "matrix row");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require_same_length(cols[j].size(), rows, "matrix column");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  require_same_length(cols_, v.size(), "matrix-vector product");
  IntVector out(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RatVector IntMatrix::apply(const RatVector& v) const {
  require_same_length(cols_, v.size(), "matrix-vector product");
  RatVector out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  require_same_length(rows_, other.rows_, "hconcat");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Int IntMatrix::determinant() const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require_same_length(a.cols_, b.rows_, "matrix product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require_same_length(a.rows_, b.rows_, "matrix sum");
  require_same_length(a.cols_, b.cols_, "matrix sum");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require_same_length(a.rows_, b.rows_, "matrix difference");
  require_same_length(a.cols_, b.cols_, "matrix difference");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
  return c;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.entries_ < b.entries_;
}

IntMatrix power(const IntMatrix& m, std::size_t exponent) {
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

std::optional<std::size_t> matrix_order(const IntMatrix& m, std::size_t cap) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "order of a non-square matrix");
  IntMatrix p = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return std::nullopt;
}

// ------------------------------------------------------------- Smith form

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  while (r < n && sgn(diagonal(r, r)) != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    bool done = false;
    while (!done) {
      // Pivot: smallest nonzero |entry| in the trailing block; ties go to the
      // lowest row, then the lowest column.
      std::size_t pr = rows;
      std::size_t pc = cols;
      Int best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(a(i, j)) == 0) continue;
          Int mag = abs(a(i, j));
          if (pr == rows || mag < best) {
            best = mag;
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) return {std::move(u), std::move(a), std::move(v)};

      swap_rows(a, t, pr);
      swap_rows(u, t, pr);
      swap_cols(a, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        const Int q = a(i, t) / a(t, t);
        add_row(a, i, t, -q);
        add_row(u, i, t, -q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        const Int q = a(t, j) / a(t, t);
        add_col(a, j, t, -q);
        add_col(v, j, t, -q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      done = true;
      for (std::size_t i = t + 1; i < rows && done; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            add_row(a, t, i, Int(1));
            add_row(u, t, i, Int(1));
            done = false;
            break;
          }
        }
    }
    if (sgn(a(t, t)) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

// ------------------------------------------------------------- FinAbGroup

FinAbGroup::FinAbGroup(std::vector<Int> invariant_factors, IntMatrix projection)
    : factors_(std::move(invariant_factors)), projection_(std::move(projection)) {
  if (projection_.rows() != factors_.size())
    throw Error(ErrorCode::DimensionMismatch, "projection rows must match invariant factors");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] == 1 || sgn(factors_[i]) < 0)
      throw Error(ErrorCode::BadInput, "invariant factors must be 0 or > 1");
    if (i + 1 < factors_.size() && sgn(factors_[i]) != 0 && factors_[i + 1] % factors_[i] != 0)
      throw Error(ErrorCode::BadInput, "invariant factors must form a divisibility chain");
    if (i + 1 < factors_.size() && sgn(factors_[i]) == 0 && sgn(factors_[i + 1]) != 0)
      throw Error(ErrorCode::BadInput, "free factors must come last");
  }
}

std::size_t FinAbGroup::free_rank() const {
  return static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(), [](const Int& d) { return sgn(d) == 0; }));
}

std::optional<Int> FinAbGroup::order() const {
  Int n = 1;
  for (const auto& d : factors_) {
    if (sgn(d) == 0) return std::nullopt;
    n *= d;
  }
  return n;
}

IntVector FinAbGroup::reduce(IntVector coords) const {
  require_same_length(coords.size(), factors_.size(), "group element");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(factors_[i]) == 0) continue;
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), coords[i].get_mpz_t(), factors_[i].get_mpz_t());
    coords[i] = r;
  }
  return coords;
}

IntVector FinAbGroup::element(const IntVector& x) const { return reduce(projection_.apply(x)); }

bool FinAbGroup::is_torsion(const IntVector& coords) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (sgn(factors_[i]) == 0 && sgn(coords[i]) != 0) return false;
  return true;
}

FinAbGroup cokernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  std::vector<Int> factors;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int d = i < m.cols() ? snf.diagonal(i, i) : Int(0);
    if (d == 1) continue;
    factors.push_back(d);
    rows.push_back(snf.left.row(i));
  }
  return FinAbGroup(std::move(factors), IntMatrix::from_rows(rows, m.rows()));
}

// ------------------------------------------------------ rational algebra

std::size_t rank(const std::vector<RatVector>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<RatVector> m = vectors;
  return rref(m, m.front().size()).size();
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

std::vector<RatVector> rational_kernel(const IntMatrix& m) {
  std::vector<RatVector> rows = to_rows(m);
  const auto pivots = rref(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector x(m.cols(), Rat(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVector> solve_in_span(const RatVector& target, std::span<const RatVector> generators) {
  const std::size_t d = target.size();
  const std::size_t k = generators.size();
  for (const auto& g : generators) require_same_length(g.size(), d, "span generator");
  std::vector<RatVector> aug(d, RatVector(k + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = generators[j][i];
    aug[i][k] = target[i];
  }
  const auto pivots = rref(aug, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw Error(ErrorCode::BadInput, "generators are linearly dependent");
  RatVector c(k);
  for (std::size_t r = 0; r < k; ++r) c[pivots[r]] = aug[r][k];
  return c;
}

std::optional<RatVector> cone_coefficients(const RatVector& target, std::span<const RatVector> generators) {
  auto c = solve_in_span(target, generators);
  if (!c) return std::nullopt;
  for (const auto& x : *c)
    if (sgn(x) < 0) return std::nullopt;
  return c;
}

// -------------------------------------------------------------- lattices

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  std::vector<IntVector> cols;
  for (std::size_t j = r; j < m.cols(); ++j) cols.push_back(snf.right.column(j));
  return IntMatrix::from_columns(cols, m.cols());
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, const IntVector& v) {
  require_same_length(basis.rows(), v.size(), "lattice membership");
  const SmithForm snf = smith_normal_form(basis);
  const std::size_t r = snf.rank();
  const IntVector uv = snf.left.apply(v);
  IntVector y(basis.cols(), Int(0));
  for (std::size_t i = 0; i < uv.size(); ++i) {
    if (i < r) {
      if (uv[i] % snf.diagonal(i, i) != 0) return std::nullopt;
      y[i] = uv[i] / snf.diagonal(i, i);
    } else if (sgn(uv[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf.right.apply(y);
}

bool in_lattice(const IntMatrix& generators, const IntVector& v) {
  return lattice_coordinates(generators, v).has_value();
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  const SmithForm snf = smith_normal_form(generators);
  const IntMatrix gv = generators * snf.right;
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < snf.rank(); ++j) cols.push_back(gv.column(j));
  return IntMatrix::from_columns(cols, generators.rows());
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
  require_same_length(a.rows(), b.rows(), "lattice intersection");
  IntMatrix neg_b = b;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) neg_b(i, j) = -b(i, j);
  const IntMatrix k = integer_kernel(a.hconcat(neg_b));
  IntMatrix top(a.cols(), k.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) top(i, j) = k(i, j);
  return lattice_basis(a * top);
}

// ------------------------------------------------------------------ hulls

namespace {

// Phase-one simplex over Q with Bland's rule: is there lambda >= 0 with
// A lambda = b?
bool feasible(std::vector<RatVector> a, RatVector b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a.front().size() : 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  }
  const std::size_t width = n + m;
  std::vector<RatVector> t(m, RatVector(width + 1, Rat(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][width] = b[i];
    basis[i] = n + i;
  }
  auto cost = [n](std::size_t j) { return j >= n ? 1 : 0; };
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width && enter == width; ++j) {
      Rat reduced = cost(j);
      for (std::size_t i = 0; i < m; ++i)
        if (cost(basis[i])) reduced -= t[i][j];
      if (sgn(reduced) < 0) enter = j;
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rat ratio = t[i][width] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    assert(leave < m);  // phase one is bounded below by zero
    const Rat inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Rat f = t[i][enter];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n && sgn(t[i][width]) != 0) return false;
  return true;
}

}  // namespace

bool in_convex_hull(const IntVector& point, std::span<const IntVector> vertices) {
  if (vertices.empty()) return false;
  const std::size_t d = point.size();
  for (const auto& v : vertices) {
    require_same_length(v.size(), d, "hull vertex");
    if (v == point) return true;
  }
  std::vector<RatVector> a(d + 1, RatVector(vertices.size()));
  RatVector b(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) a[i][j] = vertices[j][i];
    b[i] = point[i];
  }
  for (std::size_t j = 0; j < vertices.size(); ++j) a[d][j] = 1;
  b[d] = 1;
  return feasible(std::move(a), std::move(b));
}

std::vector<IntVector> lattice_points_in_hull(std::span<const IntVector> vertices, Execution policy) {
  if (vertices.empty()) throw Error(ErrorCode::BadInput, "convex hull of an empty vertex set");
  const kernels::HullScan scan(vertices);
  return policy == Execution::serial ? kernels::hull_scan_serial(scan) : kernels::hull_scan_parallel(scan);
}

}  // namespace isokit
