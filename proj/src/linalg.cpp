#include "weilzeta/linalg.hpp"

#include <sstream>

namespace weilzeta {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<Int>(m, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

std::vector<Int> matvec(const IntMatrix& a, const std::vector<Int>& v) {
  std::vector<Int> out(a.size(), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) fail(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  }
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), std::vector<Int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Int trace(const IntMatrix& a) {
  Int t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

Int determinant(const IntMatrix& a_in) {
  const std::size_t n = a_in.size();
  if (n == 0) return 1;
  IntMatrix a = a_in;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

QPoly characteristic_polynomial(const RatMatrix& a) {
  // Faddeev-LeVerrier.
  const std::size_t n = a.size();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return QPoly(std::move(c));
}

ZPoly characteristic_polynomial(const IntMatrix& a) {
  RatMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& v : a[i]) r[i].emplace_back(v);
  const QPoly cp = characteristic_polynomial(r);
  std::vector<Int> c;
  for (const auto& v : cp.coeffs()) c.push_back(v.get_num());
  return ZPoly(std::move(c));
}

std::size_t rank(RatMatrix a) { return row_reduce(a).size(); }

std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) fail(ErrorKind::DimensionMismatch, "solve: right-hand side length");
  const std::size_t cols = rows ? a[0].size() : 0;
  RatMatrix aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

namespace {

// Unimodular row reduction of the first `ncols` columns. Returns the number of
// pivot rows; all later rows vanish on those columns.
std::size_t integer_echelon(IntMatrix& rows, std::size_t ncols) {
  std::size_t r = 0;
  const std::size_t m = rows.size();
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (rows[i][c] == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[r][c].get_mpz_t(), rows[i][c].get_mpz_t());
      const Int a = rows[r][c] / g, b = rows[i][c] / g;
      for (std::size_t j = 0; j < rows[r].size(); ++j) {
        const Int x = rows[r][j], y = rows[i][j];
        rows[r][j] = s * x + t * y;
        rows[i][j] = a * y - b * x;
      }
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

IntMatrix hermite_basis(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t r = integer_echelon(rows, rows[0].size());
  rows.resize(r);
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols) {
  const std::size_t n = a.size();
  IntMatrix work(cols, std::vector<Int>(n + cols, Int(0)));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < n; ++i) work[j][i] = a[i][j];
    work[j][n + j] = 1;
  }
  const std::size_t r = integer_echelon(work, n);
  IntMatrix kernel;
  for (std::size_t j = r; j < cols; ++j)
    kernel.emplace_back(work[j].begin() + static_cast<std::ptrdiff_t>(n), work[j].end());
  return hermite_basis(std::move(kernel));
}

bool is_primitive(const IntMatrix& t) {
  const std::size_t b = t.size();
  if (b == 0) return false;
  std::vector<std::vector<bool>> base(b, std::vector<bool>(b));
  for (std::size_t i = 0; i < b; ++i) {
    if (t[i].size() != b) fail(ErrorKind::DimensionMismatch, "matrix is not square");
    for (std::size_t j = 0; j < b; ++j) {
      if (t[i][j] < 0) fail(ErrorKind::InvalidArgument, "matrix has a negative entry");
      base[i][j] = t[i][j] > 0;
    }
  }
  auto power = base;
  const std::size_t steps = (b - 1) * (b - 1);
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<std::vector<bool>> next(b, std::vector<bool>(b, false));
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t k = 0; k < b; ++k)
        if (power[i][k])
          for (std::size_t j = 0; j < b; ++j)
            if (base[k][j]) next[i][j] = true;
    power = std::move(next);
  }
  for (const auto& row : power)
    for (bool v : row)
      if (!v) return false;
  return true;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? ", " : "") << m[i][j].get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace weilzeta
