#include "leavitt/linalg.hpp"

#include <utility>

#include "leavitt/errors.hpp"

namespace leavitt::linalg {

namespace {

using RMatrix = std::vector<std::vector<Rational>>;
using RVector = std::vector<Rational>;

struct RationalField {
  Rational reduce(const Rational& x) const { return x; }
  Rational inverse(const Rational& x) const { return Rational(1) / x; }
};

struct PrimeField {
  BigInt p;
  Rational reduce(const Rational& x) const {
    BigInt r = numerator(x) % p;
    if (r < 0) r += p;
    return Rational(r);
  }
  Rational inverse(const Rational& x) const {
    BigInt a = numerator(x), r0 = p, r1 = a % p, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += p;
    while (r1 != 0) {
      BigInt q = r0 / r1, r2 = r0 - q * r1, t2 = t0 - q * t1;
      r0 = r1, r1 = r2, t0 = t1, t1 = t2;
    }
    t0 %= p;
    if (t0 < 0) t0 += p;
    return Rational(t0);
  }
};

template <class Field>
std::optional<RVector> solve_field(const Field& f, RMatrix a, RVector b, std::size_t cols) {
  const std::size_t rows = a.size();
  for (auto& row : a)
    for (auto& x : row) x = f.reduce(x);
  for (auto& x : b) x = f.reduce(x);
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    Rational inv = f.inverse(a[r][c]);
    for (std::size_t k = c; k < cols; ++k) a[r][k] = f.reduce(a[r][k] * inv);
    b[r] = f.reduce(b[r] * inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational factor = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] = f.reduce(a[i][k] - factor * a[r][k]);
      b[i] = f.reduce(b[i] - factor * b[r]);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  RVector x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

// Extended gcd: returns g and (s, t) with s*a + t*b = g, g >= 0.
BigInt xgcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
  BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1, r1 = r2, s0 = s1, s1 = s2, t0 = t1, t1 = t2;
  }
  if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
  s = s0;
  t = t0;
  return r0;
}

// Solves a x = b over Z (modulus == 0) or Z/modulus by column Hermite
// reduction a U = H with U unimodular, then forward substitution on H.
std::optional<RVector> solve_integer(const RMatrix& ain, const RVector& bin, std::size_t cols, const BigInt& modulus) {
  const std::size_t rows = ain.size();
  std::size_t total = cols + (modulus != 0 ? rows : 0);
  std::vector<std::vector<BigInt>> h(rows, std::vector<BigInt>(total, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) h[i][j] = numerator(ain[i][j]);
    if (modulus != 0) h[i][cols + i] = modulus;
  }
  std::vector<std::vector<BigInt>> u(total, std::vector<BigInt>(total, 0));
  for (std::size_t j = 0; j < total; ++j) u[j][j] = 1;

  auto combine = [&](std::size_t p, std::size_t j, const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
    // col_p <- a col_p + b col_j ; col_j <- c col_p + d col_j  (det = ad - bc = +-1)
    for (std::size_t i = 0; i < rows; ++i) {
      BigInt x = h[i][p], y = h[i][j];
      h[i][p] = a * x + b * y;
      h[i][j] = c * x + d * y;
    }
    for (std::size_t i = 0; i < total; ++i) {
      BigInt x = u[i][p], y = u[i][j];
      u[i][p] = a * x + b * y;
      u[i][j] = c * x + d * y;
    }
  };

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t p = 0;
  for (std::size_t i = 0; i < rows && p < total; ++i) {
    for (std::size_t j = p + 1; j < total; ++j) {
      if (h[i][j] == 0) continue;
      BigInt s, t;
      BigInt x = h[i][p], y = h[i][j];
      BigInt g = xgcd(x, y, s, t);
      combine(p, j, s, t, -y / g, x / g);
    }
    if (h[i][p] != 0) {
      pivots.emplace_back(i, p);
      ++p;
    }
  }

  std::vector<BigInt> y(total, 0);
  std::size_t next_pivot = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt residual = numerator(bin[i]);
    for (std::size_t j = 0; j < p; ++j)
      if (h[i][j] != 0) residual -= h[i][j] * y[j];
    if (next_pivot < pivots.size() && pivots[next_pivot].first == i) {
      std::size_t c = pivots[next_pivot].second;
      residual += h[i][c] * y[c];  // y[c] is still zero, keep the loop simple
      if (residual % h[i][c] != 0) return std::nullopt;
      y[c] = residual / h[i][c];
      ++next_pivot;
    } else if (residual != 0) {
      return std::nullopt;
    }
  }
  RVector x(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    BigInt v = 0;
    for (std::size_t k = 0; k < total; ++k) v += u[j][k] * y[k];
    if (modulus != 0) {
      v %= modulus;
      if (v < 0) v += modulus;
    }
    x[j] = Rational(v);
  }
  return x;
}

std::optional<RVector> solve_atom(const RingAtom& atom, const RMatrix& a, const RVector& b, std::size_t cols) {
  switch (atom.kind) {
    case RingAtom::Kind::rationals:
      return solve_field(RationalField{}, a, b, cols);
    case RingAtom::Kind::integers:
      return solve_integer(a, b, cols, 0);
    case RingAtom::Kind::modular:
      if (is_prime(atom.modulus)) return solve_field(PrimeField{BigInt(atom.modulus)}, a, b, cols);
      return solve_integer(a, b, cols, BigInt(atom.modulus));
  }
  return std::nullopt;
}

}  // namespace

Vector zero_vector(const RingDescriptor& ring, std::size_t n) { return Vector(n, ring.zero()); }

Vector add(const Vector& a, const Vector& b) {
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector scale(const RingValue& c, const Vector& v) {
  Vector out(v);
  for (auto& x : out) x = c * x;
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<Vector> solve(const RingDescriptor& ring, const Matrix& a, const Vector& b, std::size_t cols) {
  if (a.size() != b.size()) throw PreconditionError("solve: row count mismatch");
  Vector x = zero_vector(ring, cols);
  for (std::size_t k = 0; k < ring.arity(); ++k) {
    RMatrix ak(a.size(), RVector(cols));
    RVector bk(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) ak[i][j] = a[i][j].part(k);
      bk[i] = b[i].part(k);
    }
    auto xk = solve_atom(ring.atom(k), ak, bk, cols);
    if (!xk) return std::nullopt;
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Rational> parts(x[j].parts().begin(), x[j].parts().end());
      parts[k] = (*xk)[j];
      x[j] = RingValue(ring, std::move(parts));
    }
  }
  return x;
}

std::optional<Vector> express(const RingDescriptor& ring, const std::vector<Vector>& generators, const Vector& target) {
  Matrix a(target.size(), Vector(generators.size(), ring.zero()));
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < target.size(); ++i) a[i][j] = generators[j][i];
  return solve(ring, a, target, generators.size());
}

bool in_span(const RingDescriptor& ring, const std::vector<Vector>& generators, const Vector& target) {
  if (is_zero(target)) return true;
  if (generators.empty()) return false;
  return express(ring, generators, target).has_value();
}

bool span_contains(const RingDescriptor& ring, const std::vector<Vector>& generators, const std::vector<Vector>& targets) {
  for (const auto& t : targets)
    if (!in_span(ring, generators, t)) return false;
  return true;
}

bool span_equal(const RingDescriptor& ring, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  return span_contains(ring, a, b) && span_contains(ring, b, a);
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace leavitt::linalg
