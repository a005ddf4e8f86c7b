#include "fiveclass/forms.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "fiveclass/error.hpp"

namespace fiveclass::forms {

namespace {

void require_square(const Matrix& m) {
  if (m.empty()) throw Error(ErrorCode::InvalidForm, "form has rank 0");
  for (const auto& row : m) {
    if (row.size() != m.size()) {
      throw Error(ErrorCode::InvalidForm, "matrix is not square");
    }
  }
}

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

bool odd(const Integer& x) { return (x % 2) != 0; }

// Forward Bareiss elimination in place on the first n columns of `a`
// (extra columns are carried along). Returns the sign of the row
// permutation, or 0 if a zero pivot column was found.
int bareiss_forward(Matrix& a, std::size_t n) {
  const std::size_t width = a.empty() ? 0 : a[0].size();
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t i = k + 1;
      while (i < n && a[i][k] == 0) ++i;
      if (i == n) return 0;
      std::swap(a[k], a[i]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign;
}

Matrix e8_matrix() {
  // Cartan matrix of the E8 Dynkin diagram: a path 0-...-6 with node 7
  // attached to node 4 (arms of length 4, 2 and 1).
  Matrix m(8, std::vector<Integer>(8, 0));
  for (std::size_t i = 0; i < 8; ++i) m[i][i] = 2;
  auto edge = [&](std::size_t i, std::size_t j) {
    m[i][j] = -1;
    m[j][i] = -1;
  };
  for (std::size_t i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  return m;
}

}  // namespace

Integer determinant(const Matrix& m) {
  require_square(m);
  Matrix a = m;
  const int sign = bareiss_forward(a, a.size());
  if (sign == 0) return 0;
  return sign * a.back().back();
}

void validate(const Matrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j] != m[j][i]) {
        std::ostringstream os;
        os << "matrix is not symmetric at (" << i << ", " << j << ")";
        throw Error(ErrorCode::NotSymmetric, os.str());
      }
    }
  }
  const Integer det = abs_value(determinant(m));
  if (det != 1) {
    std::ostringstream os;
    os << "matrix is not unimodular: |det| = " << det;
    throw Error(ErrorCode::NotUnimodular, os.str());
  }
}

NamedBlock parse_block(const std::string& name) {
  if (name == "1" || name == "+1") return NamedBlock::Plus;
  if (name == "-1") return NamedBlock::Minus;
  if (name == "H") return NamedBlock::Hyperbolic;
  if (name == "E8") return NamedBlock::E8;
  if (name == "-E8") return NamedBlock::NegE8;
  throw Error(ErrorCode::InvalidForm, "unknown form block '" + name +
                                          "' (expected 1, -1, H, E8, -E8)");
}

std::string block_name(NamedBlock b) {
  switch (b) {
    case NamedBlock::Plus: return "1";
    case NamedBlock::Minus: return "-1";
    case NamedBlock::Hyperbolic: return "H";
    case NamedBlock::E8: return "E8";
    case NamedBlock::NegE8: return "-E8";
  }
  return "?";
}

IntersectionForm::IntersectionForm(Matrix m) : matrix_(std::move(m)) {
  validate(matrix_);
}

IntersectionForm IntersectionForm::block(NamedBlock b) {
  switch (b) {
    case NamedBlock::Plus: return IntersectionForm(Matrix{{1}});
    case NamedBlock::Minus: return IntersectionForm(Matrix{{-1}});
    case NamedBlock::Hyperbolic: return IntersectionForm(Matrix{{0, 1}, {1, 0}});
    case NamedBlock::E8: return IntersectionForm(e8_matrix());
    case NamedBlock::NegE8: {
      Matrix m = e8_matrix();
      for (auto& row : m) {
        for (auto& x : row) x = -x;
      }
      return IntersectionForm(std::move(m));
    }
  }
  throw Error(ErrorCode::InvalidForm, "unknown block");
}

IntersectionForm IntersectionForm::from_blocks(
    std::span<const NamedBlock> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::InvalidForm, "no form blocks");
  IntersectionForm out = block(blocks.front());
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    out = out.direct_sum(block(blocks[i]));
  }
  return out;
}

IntersectionForm IntersectionForm::diagonal(std::span<const int> entries) {
  Matrix m(entries.size(), std::vector<Integer>(entries.size(), 0));
  for (std::size_t i = 0; i < entries.size(); ++i) m[i][i] = entries[i];
  return IntersectionForm(std::move(m));
}

IntersectionForm IntersectionForm::direct_sum(
    const IntersectionForm& other) const {
  const std::size_t n = rank();
  const std::size_t total = n + other.rank();
  Matrix m(total, std::vector<Integer>(total, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(matrix_[i].begin(), matrix_[i].end(), m[i].begin());
  }
  for (std::size_t i = 0; i < other.rank(); ++i) {
    std::copy(other.matrix_[i].begin(), other.matrix_[i].end(),
              m[n + i].begin() + static_cast<std::ptrdiff_t>(n));
  }
  return IntersectionForm(std::move(m));
}

IntersectionForm IntersectionForm::change_basis(const Matrix& u) const {
  require_square(u);
  const std::size_t n = rank();
  if (u.size() != n) {
    throw Error(ErrorCode::InvalidForm, "basis change has the wrong size");
  }
  if (abs_value(determinant(u)) != 1) {
    throw Error(ErrorCode::NotUnimodular, "basis change is not unimodular");
  }
  Matrix qu(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (matrix_[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) qu[i][j] += matrix_[i][k] * u[k][j];
    }
  Matrix out(n, std::vector<Integer>(n, 0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (u[k][i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += u[k][i] * qu[k][j];
    }
  return IntersectionForm(std::move(out));
}

CohomologyClass CohomologyClass::operator-() const {
  std::vector<Integer> p = pairings_;
  for (auto& x : p) x = -x;
  return CohomologyClass(std::move(p));
}

CohomologyClass CohomologyClass::scaled(const Integer& k) const {
  std::vector<Integer> p = pairings_;
  for (auto& x : p) x *= k;
  return CohomologyClass(std::move(p));
}

CohomologyClass CohomologyClass::divided(const Integer& k) const {
  std::vector<Integer> p = pairings_;
  for (auto& x : p) {
    if (k == 0 || x % k != 0) {
      throw Error(ErrorCode::InvalidForm, "class is not divisible");
    }
    x /= k;
  }
  return CohomologyClass(std::move(p));
}

CohomologyClass CohomologyClass::extended(std::size_t extra) const {
  std::vector<Integer> p = pairings_;
  p.resize(p.size() + extra, 0);
  return CohomologyClass(std::move(p));
}

CohomologyClass CohomologyClass::transported(const Matrix& u) const {
  const std::size_t n = pairings_.size();
  if (u.size() != n) {
    throw Error(ErrorCode::InvalidForm, "basis change has the wrong size");
  }
  std::vector<Integer> p(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p[j] += u[i][j] * pairings_[i];
  return CohomologyClass(std::move(p));
}

int signature(const IntersectionForm& q) {
  const std::size_t n = q.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(q(i, j));

  auto erase = [&a](std::vector<std::size_t> idx) {
    std::sort(idx.rbegin(), idx.rend());
    for (std::size_t k : idx) {
      a.erase(a.begin() + static_cast<std::ptrdiff_t>(k));
      for (auto& row : a) row.erase(row.begin() + static_cast<std::ptrdiff_t>(k));
    }
  };

  int sig = 0;
  while (!a.empty()) {
    const std::size_t m = a.size();
    std::size_t pivot = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i][i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot != m) {
      const Rational d = a[pivot][pivot];
      sig += d > 0 ? 1 : -1;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == pivot || a[i][pivot] == 0) continue;
        const Rational f = a[i][pivot] / d;
        for (std::size_t j = 0; j < m; ++j) {
          if (j != pivot) a[i][j] -= f * a[pivot][j];
        }
      }
      erase({pivot});
      continue;
    }
    // Zero diagonal: split off a hyperbolic 2x2 block [[0,b],[b,0]],
    // which contributes one positive and one negative square.
    std::size_t u = m, v = m;
    for (std::size_t i = 0; i < m && u == m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (a[i][j] != 0) {
          u = i;
          v = j;
          break;
        }
    if (u == m) throw Error(ErrorCode::InvalidForm, "form is degenerate");
    const Rational b = a[u][v];
    std::vector<std::vector<Rational>> next = a;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == u || i == v) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == u || j == v) continue;
        next[i][j] -= (a[i][u] * a[v][j] + a[i][v] * a[u][j]) / b;
      }
    }
    a = std::move(next);
    erase({u, v});
  }
  return sig;
}

bool is_even(const IntersectionForm& q) {
  for (std::size_t i = 0; i < q.rank(); ++i) {
    if (odd(q(i, i))) return false;
  }
  return true;
}

Integer divisibility(const CohomologyClass& c) {
  Integer g = 0;
  for (const auto& x : c.pairings()) g = boost::multiprecision::gcd(g, abs_value(x));
  return g;
}

std::vector<Integer> solve(const IntersectionForm& q,
                           std::span<const Integer> rhs) {
  const std::size_t n = q.rank();
  if (rhs.size() != n) {
    throw Error(ErrorCode::InvalidForm,
                "class length does not match the rank of the form");
  }
  Matrix a = q.matrix();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(rhs[i]);
  if (bareiss_forward(a, n) == 0) {
    throw Error(ErrorCode::InvalidForm, "form is degenerate");
  }
  std::vector<Rational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc(a[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(a[k][j]) * x[j];
    x[k] = acc / Rational(a[k][k]);
  }
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (denominator(x[i]) != 1) {
      throw Error(ErrorCode::ConsistencyFailure,
                  "inverse of a unimodular form is not integral");
    }
    out[i] = numerator(x[i]);
  }
  return out;
}

Integer square(const IntersectionForm& q, const CohomologyClass& c) {
  const std::vector<Integer> dual = solve(q, c.pairings());
  Integer s = 0;
  for (std::size_t i = 0; i < dual.size(); ++i) s += c[i] * dual[i];
  return s;
}

bool is_characteristic(const IntersectionForm& q, const CohomologyClass& c) {
  if (c.size() != q.rank()) {
    throw Error(ErrorCode::InvalidForm,
                "class length does not match the rank of the form");
  }
  for (std::size_t i = 0; i < q.rank(); ++i) {
    if (odd(c[i] - q(i, i))) return false;
  }
  return true;
}

}  // namespace fiveclass::forms
