#include "affq/matrix.hpp"

#include <sstream>
#include <utility>

namespace affq {

namespace {

/* Arithmetic backends.  p < 2^31 keeps products inside int64. */
struct PrimeOps {
  std::int64_t p;
  using T = std::int64_t;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(const T& a, const T& b) const {
    T s = a - b;
    return s < 0 ? s + p : s;
  }
  T neg(const T& a) const { return a == 0 ? 0 : p - a; }
  T mul(const T& a, const T& b) const { return a * b % p; }
  T inv(const T& a) const { return mod_inv(a, p); }
};

struct RatOps {
  using T = Rat;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return T(1) / a; }
};

/* In-place reduced row echelon form.  Scans columns left to right, takes the
   first row (top to bottom, among rows not yet used) with a nonzero entry as
   the pivot; no other row reordering happens.  pivots gets (row, col) pairs. */
template <class Ops>
void rref_in_place(std::vector<typename Ops::T>& d, int rows, int cols, const Ops& ops,
                   std::vector<std::pair<int, int>>& pivots) {
  auto at = [&](int r, int c) -> typename Ops::T& { return d[static_cast<std::size_t>(r) * cols + c]; };
  int pr = 0;  // next pivot row slot
  for (int c = 0; c < cols && pr < rows; ++c) {
    int sel = -1;
    for (int r = pr; r < rows; ++r)
      if (!ops.is_zero(at(r, c))) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      for (int j = c; j < cols; ++j) std::swap(at(sel, j), at(pr, j));
    const auto piv_inv = ops.inv(at(pr, c));
    for (int j = c; j < cols; ++j) at(pr, j) = ops.mul(at(pr, j), piv_inv);
    for (int r = 0; r < rows; ++r) {
      if (r == pr || ops.is_zero(at(r, c))) continue;
      const auto factor = at(r, c);
      for (int j = c; j < cols; ++j) at(r, j) = ops.sub(at(r, j), ops.mul(factor, at(pr, j)));
    }
    pivots.emplace_back(pr, c);
    ++pr;
  }
}

template <class Ops>
void mat_mul(const std::vector<typename Ops::T>& a, const std::vector<typename Ops::T>& b,
             std::vector<typename Ops::T>& out, int n, int k, int m, const Ops& ops) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      const auto& aij = a[static_cast<std::size_t>(i) * k + j];
      if (ops.is_zero(aij)) continue;
      for (int l = 0; l < m; ++l) {
        auto& o = out[static_cast<std::size_t>(i) * m + l];
        o = ops.add(o, ops.mul(aij, b[static_cast<std::size_t>(j) * m + l]));
      }
    }
}

}  // namespace

Matrix::Matrix(const Field& f, int rows, int cols) : f_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ParseError("negative matrix dimension");
  const std::size_t n = static_cast<std::size_t>(rows) * cols;
  if (f_.is_prime())
    pd_.assign(n, 0);
  else
    qd_.assign(n, Rat(0));
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set_int(i, i, 1);
  return m;
}

Matrix Matrix::from_int_rows(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ParseError("ragged matrix literal");
    for (int j = 0; j < c; ++j) m.set_int(i, j, rows[i][j]);
  }
  return m;
}

Scalar Matrix::get(int r, int c) const {
  if (f_.is_prime()) return pd_[idx(r, c)];
  return qd_[idx(r, c)];
}

void Matrix::set(int r, int c, const Scalar& v) {
  if (f_.is_prime()) {
    const std::int64_t x = std::get<std::int64_t>(v);
    if (x < 0 || x >= f_.p()) throw ParseError("prime-field entry out of range");
    pd_[idx(r, c)] = x;
  } else {
    qd_[idx(r, c)] = std::get<Rat>(v);
  }
}

void Matrix::set_int(int r, int c, std::int64_t v) {
  if (f_.is_prime())
    pd_[idx(r, c)] = mod_reduce(v, f_.p());
  else
    qd_[idx(r, c)] = Rat(v);
}

void Matrix::check_same_field(const Matrix& o) const {
  if (f_ != o.f_) throw ParseError("field mismatch");
}

bool Matrix::operator==(const Matrix& o) const {
  return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && pd_ == o.pd_ && qd_ == o.qd_;
}

bool Matrix::is_zero() const {
  for (const auto& v : pd_)
    if (v != 0) return false;
  for (const auto& v : qd_)
    if (v != 0) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ParseError("shape mismatch in +");
  Matrix out(f_, rows_, cols_);
  if (f_.is_prime()) {
    PrimeOps ops{f_.p()};
    for (std::size_t i = 0; i < pd_.size(); ++i) out.pd_[i] = ops.add(pd_[i], o.pd_[i]);
  } else {
    for (std::size_t i = 0; i < qd_.size(); ++i) out.qd_[i] = qd_[i] + o.qd_[i];
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ParseError("shape mismatch in -");
  Matrix out(f_, rows_, cols_);
  if (f_.is_prime()) {
    PrimeOps ops{f_.p()};
    for (std::size_t i = 0; i < pd_.size(); ++i) out.pd_[i] = ops.sub(pd_[i], o.pd_[i]);
  } else {
    for (std::size_t i = 0; i < qd_.size(); ++i) out.qd_[i] = qd_[i] - o.qd_[i];
  }
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(f_, rows_, cols_);
  if (f_.is_prime()) {
    PrimeOps ops{f_.p()};
    for (std::size_t i = 0; i < pd_.size(); ++i) out.pd_[i] = ops.neg(pd_[i]);
  } else {
    for (std::size_t i = 0; i < qd_.size(); ++i) out.qd_[i] = -qd_[i];
  }
  return out;
}

Matrix Matrix::scaled_int(std::int64_t c) const {
  Matrix out(f_, rows_, cols_);
  if (f_.is_prime()) {
    PrimeOps ops{f_.p()};
    const std::int64_t cc = mod_reduce(c, f_.p());
    for (std::size_t i = 0; i < pd_.size(); ++i) out.pd_[i] = ops.mul(pd_[i], cc);
  } else {
    for (std::size_t i = 0; i < qd_.size(); ++i) out.qd_[i] = qd_[i] * c;
  }
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(f_, rows_, cols_);
  if (f_.is_prime()) {
    PrimeOps ops{f_.p()};
    const std::int64_t cc = std::get<std::int64_t>(c);
    for (std::size_t i = 0; i < pd_.size(); ++i) out.pd_[i] = ops.mul(pd_[i], cc);
  } else {
    const Rat& cc = std::get<Rat>(c);
    for (std::size_t i = 0; i < qd_.size(); ++i) out.qd_[i] = qd_[i] * cc;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same_field(o);
  if (cols_ != o.rows_) throw ParseError("shape mismatch in *");
  Matrix out(f_, rows_, o.cols_);
  if (f_.is_prime())
    mat_mul(pd_, o.pd_, out.pd_, rows_, cols_, o.cols_, PrimeOps{f_.p()});
  else
    mat_mul(qd_, o.qd_, out.qd_, rows_, cols_, o.cols_, RatOps{});
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(f_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (f_.is_prime())
        out.pd_[out.idx(c, r)] = pd_[idx(r, c)];
      else
        out.qd_[out.idx(c, r)] = qd_[idx(r, c)];
    }
  return out;
}

Matrix Matrix::submatrix(int r0, int c0, int h, int w) const {
  if (r0 < 0 || c0 < 0 || h < 0 || w < 0 || r0 + h > rows_ || c0 + w > cols_)
    throw ParseError("submatrix out of range");
  Matrix out(f_, h, w);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      if (f_.is_prime())
        out.pd_[out.idx(r, c)] = pd_[idx(r0 + r, c0 + c)];
      else
        out.qd_[out.idx(r, c)] = qd_[idx(r0 + r, c0 + c)];
    }
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  a.check_same_field(b);
  if (a.rows_ != b.rows_) throw ParseError("hstack row mismatch");
  Matrix out(a.f_, a.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < out.cols_; ++c) {
      const Scalar v = c < a.cols_ ? a.get(r, c) : b.get(r, c - a.cols_);
      out.set(r, c, v);
    }
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  a.check_same_field(b);
  if (a.cols_ != b.cols_) throw ParseError("vstack col mismatch");
  Matrix out(a.f_, a.rows_ + b.rows_, a.cols_);
  for (int r = 0; r < out.rows_; ++r)
    for (int c = 0; c < a.cols_; ++c) {
      const Scalar v = r < a.rows_ ? a.get(r, c) : b.get(r - a.rows_, c);
      out.set(r, c, v);
    }
  return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  a.check_same_field(b);
  Matrix out(a.f_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j)
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l) {
          if (a.f_.is_prime()) {
            PrimeOps ops{a.f_.p()};
            out.pd_[out.idx(i * b.rows_ + k, j * b.cols_ + l)] =
                ops.mul(a.pd_[a.idx(i, j)], b.pd_[b.idx(k, l)]);
          } else {
            out.qd_[out.idx(i * b.rows_ + k, j * b.cols_ + l)] = a.qd_[a.idx(i, j)] * b.qd_[b.idx(k, l)];
          }
        }
  return out;
}

Matrix Matrix::rref(std::vector<int>* pivot_cols) const {
  Matrix out = *this;
  std::vector<std::pair<int, int>> pivots;
  if (f_.is_prime())
    rref_in_place(out.pd_, rows_, cols_, PrimeOps{f_.p()}, pivots);
  else
    rref_in_place(out.qd_, rows_, cols_, RatOps{}, pivots);
  if (pivot_cols) {
    pivot_cols->clear();
    for (const auto& pc : pivots) pivot_cols->push_back(pc.second);
  }
  return out;
}

int Matrix::rank() const {
  std::vector<int> pivots;
  rref(&pivots);
  return static_cast<int>(pivots.size());
}

Matrix Matrix::kernel_basis() const {
  std::vector<int> pivots;
  const Matrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix out(f_, cols_, static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    const int fc = free_cols[k];
    out.set_int(fc, k, 1);
    for (int pi = 0; pi < static_cast<int>(pivots.size()); ++pi) {
      // pivot row pi has its pivot at column pivots[pi]
      const Scalar v = r.get(pi, fc);
      if (f_.is_prime()) {
        PrimeOps ops{f_.p()};
        out.pd_[out.idx(pivots[pi], k)] = ops.neg(std::get<std::int64_t>(v));
      } else {
        out.qd_[out.idx(pivots[pi], k)] = -std::get<Rat>(v);
      }
    }
  }
  return out;
}

Matrix Matrix::cokernel_projection() const {
  // rows of P = basis of the left kernel
  return transpose().kernel_basis().transpose();
}

Matrix Matrix::column_space_basis() const {
  std::vector<int> pivots;
  const Matrix r = transpose().rref(&pivots);
  Matrix out(f_, rows_, static_cast<int>(pivots.size()));
  for (int k = 0; k < static_cast<int>(pivots.size()); ++k)
    for (int c = 0; c < rows_; ++c) out.set(c, k, r.get(k, c));
  return out;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  check_same_field(b);
  if (b.rows_ != rows_) throw ParseError("solve rhs row mismatch");
  const Matrix aug = hstack(*this, b);
  std::vector<int> pivots;
  const Matrix r = aug.rref(&pivots);
  for (int c : pivots)
    if (c >= cols_) return std::nullopt;  // pivot in the rhs block: inconsistent
  Matrix x(f_, cols_, b.cols_);
  for (int pi = 0; pi < static_cast<int>(pivots.size()); ++pi)
    for (int j = 0; j < b.cols_; ++j) x.set(pivots[pi], j, r.get(pi, cols_ + j));
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  if (rank() != rows_) return std::nullopt;
  return solve(identity(f_, rows_));
}

bool Matrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < cols_; ++c) os << (c ? "," : "") << scalar_to_string(f_, get(r, c));
  }
  os << "]";
  return os.str();
}

}  // namespace affq
