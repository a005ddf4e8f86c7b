#include "fiveclass/ahss.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include "fiveclass/error.hpp"

namespace fiveclass::ahss {

namespace {

// Lucas: C(n, k) is odd iff the bits of k are a subset of those of n.
bool binomial_odd(int n, int k) { return k >= 0 && k <= n && (k & ~n) == 0; }

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Number of beta-monomials of degree 2m in r variables.
int beta_count(int m, int r) {
  if (m < 0) return 0;
  if (r == 0) return m == 0 ? 1 : 0;
  return static_cast<int>(binomial(m + r - 1, r - 1));
}

void check_range(int p, int r) {
  if (p < 0 || p > kMaxDegree || r < 0 || r > kMaxFactors) {
    std::ostringstream os;
    os << "degree " << p << ", r = " << r << " outside 0..." << kMaxDegree
       << ", 0..." << kMaxFactors;
    throw Error(ErrorCode::RangeExceeded, os.str());
  }
}

// Compositions of m into `parts` parts, descending lexicographic order.
void compositions(int m, int parts, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (m == 0) out.push_back(prefix);
    return;
  }
  if (parts == 1) {
    prefix.push_back(m);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = m; first >= 0; --first) {
    prefix.push_back(first);
    compositions(m - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

std::size_t index_of(const std::vector<Monomial>& basis, const Monomial& m) {
  auto it = std::find(basis.begin(), basis.end(), m);
  if (it == basis.end()) {
    throw Error(ErrorCode::ConsistencyFailure,
                "monomial " + m.to_string() + " missing from basis");
  }
  return static_cast<std::size_t>(it - basis.begin());
}

Polynomial add(Polynomial x, const Polynomial& y) {
  for (const Monomial& m : y) {
    auto it = std::lower_bound(x.begin(), x.end(), m);
    if (it != x.end() && *it == m) {
      x.erase(it);
    } else {
      x.insert(it, m);
    }
  }
  return x;
}

Polynomial to_polynomial(const std::vector<Monomial>& basis,
                         const std::vector<std::uint8_t>& v) {
  Polynomial p;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) p.push_back(basis[i]);
  std::sort(p.begin(), p.end());
  return p;
}

// Vectors of `candidates` extending the column space of `image` to a basis of
// span(image, candidates).
std::vector<std::vector<std::uint8_t>> complement(
    std::size_t dim, const gf2::Matrix& image,
    const std::vector<std::vector<std::uint8_t>>& candidates) {
  std::vector<std::vector<std::uint8_t>> cols;
  for (std::size_t j = 0; j < image.cols(); ++j) {
    std::vector<std::uint8_t> c(dim);
    for (std::size_t i = 0; i < dim; ++i) c[i] = image(i, j);
    cols.push_back(std::move(c));
  }
  std::size_t rank = gf2::Matrix::from_columns(dim, cols).rank();
  std::vector<std::vector<std::uint8_t>> chosen;
  for (const auto& v : candidates) {
    cols.push_back(v);
    const std::size_t next = gf2::Matrix::from_columns(dim, cols).rank();
    if (next > rank) {
      rank = next;
      chosen.push_back(v);
    } else {
      cols.pop_back();
    }
  }
  return chosen;
}

std::vector<std::vector<std::uint8_t>> standard_basis(std::size_t n) {
  std::vector<std::vector<std::uint8_t>> out(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

int log2_exact(std::uint64_t n) {
  int e = 0;
  while (n > 1) {
    n >>= 1;
    ++e;
  }
  return e;
}

std::string power(const std::string& base, long long e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return "(" + base + ")^" + std::to_string(e);
}

std::string direct_sum(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!s.empty()) s += " + ";
    s += p;
  }
  return s.empty() ? "0" : s;
}

std::string describe(const IntegralHomology& h) {
  return direct_sum({power("Z", h.free_rank), power("Z/2", h.torsion)});
}

}  // namespace

int Monomial::degree() const {
  int d = a;
  for (int x : b) d += 2 * x;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  out.a += other.a;
  if (out.b.size() < other.b.size()) out.b.resize(other.b.size(), 0);
  for (std::size_t i = 0; i < other.b.size(); ++i) out.b[i] += other.b[i];
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  auto factor = [&s](const std::string& name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += ' ';
    s += name;
    if (e > 1) s += '^' + std::to_string(e);
  };
  factor("a", a);
  for (std::size_t i = 0; i < b.size(); ++i) factor("b" + std::to_string(i + 1), b[i]);
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += " + ";
    s += p[i].to_string();
  }
  return s;
}

std::string to_string(TwistKind t) {
  switch (t) {
    case TwistKind::None: return "none";
    case TwistKind::TwoEta: return "2eta";
    case TwistKind::Gamma: return "gamma";
  }
  return "?";
}

TwistKind parse_twist(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "none" || t == "0") return TwistKind::None;
  if (t == "2eta" || t == "twoeta" || t == "two-eta") return TwistKind::TwoEta;
  if (t == "gamma") return TwistKind::Gamma;
  throw Error(ErrorCode::InvalidExpression,
              "unknown twist '" + text + "' (expected none, 2eta or gamma)");
}

std::vector<Monomial> monomials(int degree, int r) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  for (int a = degree; a >= 0; --a) {
    if ((degree - a) % 2 != 0) continue;
    std::vector<std::vector<int>> bs;
    std::vector<int> prefix;
    compositions((degree - a) / 2, r, prefix, bs);
    for (auto& b : bs) out.push_back(Monomial{a, std::move(b)});
  }
  return out;
}

HomologyBasis homology_basis(int p, int r, Coefficients coefficients) {
  check_range(p, r);
  HomologyBasis h;
  h.degree = p;
  h.r = r;
  h.coefficients = coefficients;
  if (coefficients == Coefficients::Mod2) {
    h.mod2 = monomials(p, r);
    return h;
  }
  // Kunneth: H_i(RP^inf; Z) = Z, Z/2 (i odd), 0 (i > 0 even), tensored with
  // the free homology of (CP^inf)^r; no Tor terms.
  if (p % 2 == 0) h.integral.free_rank = beta_count(p / 2, r);
  for (int i = 1; i <= p; i += 2) {
    if ((p - i) % 2 == 0) h.integral.torsion += beta_count((p - i) / 2, r);
  }
  return h;
}

Polynomial steenrod_square(int j, const Monomial& m) {
  std::map<Monomial, int> terms;
  const std::size_t r = m.b.size();
  for (int i0 = 0; i0 <= j; ++i0) {
    if (!binomial_odd(m.a, i0) || (j - i0) % 2 != 0) continue;
    // Distribute (j - i0)/2 among the betas: Sq^{2i}(beta^b) = C(b,i) beta^{b+i}.
    std::vector<std::vector<int>> parts;
    std::vector<int> prefix;
    compositions((j - i0) / 2, static_cast<int>(r), prefix, parts);
    for (const auto& ik : parts) {
      bool odd = true;
      for (std::size_t k = 0; k < r && odd; ++k) odd = binomial_odd(m.b[k], ik[k]);
      if (!odd) continue;
      Monomial out{m.a + i0, m.b};
      for (std::size_t k = 0; k < r; ++k) out.b[k] += ik[k];
      terms[out] ^= 1;
    }
  }
  Polynomial p;
  for (const auto& [mono, c] : terms)
    if (c) p.push_back(mono);
  return p;
}

Polynomial sq2(const Monomial& m) { return steenrod_square(2, m); }

std::vector<Monomial> twist_class(TwistKind twist, int r) {
  switch (twist) {
    case TwistKind::None: return {};
    case TwistKind::TwoEta: return {Monomial{2, std::vector<int>(r, 0)}};
    case TwistKind::Gamma: {
      if (r < 1) {
        throw Error(ErrorCode::RangeExceeded,
                    "the gamma twist needs at least one CP^inf factor");
      }
      Monomial w{0, std::vector<int>(r, 0)};
      w.b[0] = 1;
      return {w};
    }
  }
  return {};
}

gf2::Matrix cohomology_operation(int p, int r, TwistKind twist) {
  check_range(p, r);
  const std::vector<Monomial> target = monomials(p, r);
  const std::vector<Monomial> source = monomials(p - 2, r);
  const std::vector<Monomial> w = twist_class(twist, r);
  gf2::Matrix m(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    Polynomial image = sq2(source[j]);
    for (const Monomial& t : w) image = add(image, {t * source[j]});
    for (const Monomial& t : image) m.flip(index_of(target, t), j);
  }
  return m;
}

gf2::Matrix sq1_matrix(int p, int r) {
  check_range(p, r);
  const std::vector<Monomial> target = monomials(p, r);
  const std::vector<Monomial> source = monomials(p - 1, r);
  gf2::Matrix m(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    for (const Monomial& t : steenrod_square(1, source[j]))
      m.flip(index_of(target, t), j);
  }
  return m;
}

std::vector<std::vector<std::uint8_t>> integral_image_basis(int p, int r) {
  // Image of reduction = kernel of the Bockstein = annihilator of im Sq^1.
  return sq1_matrix(p, r).transpose().kernel();
}

gf2::Matrix d2_matrix(int p, int q, int r, TwistKind twist) {
  check_range(p, r);
  if (q != 0 && q != 1) {
    throw Error(ErrorCode::RangeExceeded, "d2 is only tabulated for q = 0, 1");
  }
  const gf2::Matrix dual = cohomology_operation(p, r, twist).transpose();
  if (q == 1) return dual;
  const auto image = integral_image_basis(p, r);
  return dual * gf2::Matrix::from_columns(dual.cols(), image);
}

Page compute_page(int r, TwistKind twist) {
  check_range(0, r);
  twist_class(twist, r);  // validates Gamma with r = 0
  Page page;
  page.r = r;
  page.twist = twist;

  std::map<std::pair<int, int>, gf2::Matrix> d2;
  for (int p = 2; p <= kMaxDegree; ++p) {
    for (int q = 0; q <= 1; ++q) {
      if (p + q > Page::kMaxTotal + 1) continue;
      gf2::Matrix m = d2_matrix(p, q, r, twist);
      page.d2.push_back(Differential{p, q, m, m.rank()});
      d2.emplace(std::make_pair(p, q), std::move(m));
    }
  }
  auto rank_of = [&d2](int p, int q) -> std::size_t {
    auto it = d2.find({p, q});
    return it == d2.end() ? 0 : it->second.rank();
  };

  for (int total = 0; total <= Page::kMaxTotal; ++total) {
    for (int q = 0; q <= std::min(total, 5); ++q) {
      const int p = total - q;
      PageEntry e{p, q, q == 0 || q == 4, {}, {}};
      E3Entry e3;
      if (q == 0 || q == 4) {
        e.group = homology_basis(p, r, Coefficients::Integral).integral;
      } else if (q == 1 || q == 2) {
        e.basis = monomials(p, r);
        e.group.torsion = static_cast<int>(e.basis.size());
      }

      if (q == 0) {
        // Kernel of d2 on the reduction image; its torsion part is the
        // kernel meeting the span of duals of monomials with odd alpha
        // exponent.
        const std::vector<Monomial> basis = monomials(p, r);
        const auto image = integral_image_basis(p, r);
        std::vector<std::vector<std::uint8_t>> kernel;
        auto it = d2.find({p, 0});
        kernel = it == d2.end() ? standard_basis(image.size()) : it->second.kernel();
        std::vector<std::vector<std::uint8_t>> in_dual;
        for (const auto& k : kernel) {
          std::vector<std::uint8_t> v(basis.size(), 0);
          for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i])
              for (std::size_t t = 0; t < basis.size(); ++t) v[t] ^= image[i][t];
          in_dual.push_back(std::move(v));
        }
        std::vector<std::size_t> free_rows;
        for (std::size_t t = 0; t < basis.size(); ++t)
          if (basis[t].a == 0) free_rows.push_back(t);
        gf2::Matrix restrict(free_rows.size(), in_dual.size());
        for (std::size_t i = 0; i < free_rows.size(); ++i)
          for (std::size_t j = 0; j < in_dual.size(); ++j)
            restrict(i, j) = in_dual[j][free_rows[i]];
        e3.free_rank = e.group.free_rank;
        e3.log2_torsion = static_cast<int>(in_dual.size() - restrict.rank());
      } else if (q == 1 || q == 2) {
        const std::size_t dim = e.basis.size();
        std::vector<std::vector<std::uint8_t>> kernel;
        if (q == 1) {
          auto it = d2.find({p, 1});
          kernel = it == d2.end() ? standard_basis(dim) : it->second.kernel();
        } else {
          kernel = standard_basis(dim);
        }
        auto in = d2.find({p + 2, q - 1});
        const gf2::Matrix incoming =
            in == d2.end() ? gf2::Matrix(dim, 0) : in->second;
        for (const auto& v : complement(dim, incoming, kernel))
          e3.representatives.push_back(to_polynomial(e.basis, v));
        e3.log2_torsion = static_cast<int>(kernel.size()) -
                          static_cast<int>(rank_of(p + 2, q - 1));
        if (e3.log2_torsion != static_cast<int>(e3.representatives.size())) {
          throw Error(ErrorCode::ConsistencyFailure,
                      "image of d2 not contained in its kernel");
        }
      } else if (q == 4) {
        e3.free_rank = e.group.free_rank;
        e3.log2_torsion = e.group.torsion;
      }
      page.e2.emplace(std::make_pair(p, q), std::move(e));
      page.e3.emplace(std::make_pair(p, q), std::move(e3));
    }
  }
  return page;
}

std::uint64_t closed_form_order(int r, TwistKind twist) {
  if (r < 0 || r > kMaxOrderFactors) {
    throw Error(ErrorCode::RangeExceeded,
                "order computations are limited to r <= " +
                    std::to_string(kMaxOrderFactors));
  }
  const int g = r * (r - 1) / 2;
  switch (twist) {
    case TwistKind::None: return pow2(2 * r + g);
    case TwistKind::TwoEta: return pow2(4 + 2 * r + g);
    case TwistKind::Gamma:
      if (r < 1) {
        throw Error(ErrorCode::RangeExceeded,
                    "the gamma twist needs at least one CP^inf factor");
      }
      return pow2(4 + 2 * (r - 1) + g);
  }
  return 0;
}

std::string group_structure(int r, TwistKind twist) {
  const long long g = static_cast<long long>(r) * (r - 1) / 2;
  switch (twist) {
    case TwistKind::None:
      if (r == 1) return "Z/4 (nonsplit extension of Z/2 by Z/2)";
      return direct_sum({power("Z/4", r), power("Z/2", g)});
    case TwistKind::TwoEta:
      return "0 -> " + direct_sum({power("Z/4", r), power("Z/2", g)}) +
             " -> . -> Z/16 -> 0";
    case TwistKind::Gamma:
      return "0 -> " + direct_sum({power("Z/4", r - 1), power("Z/2", g)}) +
             " -> . -> Z/8 + Z/2 -> 0";
  }
  return "?";
}

Omega5Report omega5(int r, TwistKind twist) {
  Omega5Report rep;
  rep.r = r;
  rep.twist = twist;
  rep.expected = closed_form_order(r, twist);  // range checks
  const Page page = compute_page(r, twist);
  auto log2_of = [&page](int p, int q) {
    const E3Entry& e = page.e3.at({p, q});
    if (e.free_rank != 0) {
      throw Error(ErrorCode::ConsistencyFailure,
                  "free summand on the line p + q = 5");
    }
    return e.log2_torsion;
  };
  rep.e3_50 = log2_of(5, 0);
  rep.e3_41 = log2_of(4, 1);
  rep.e3_32 = log2_of(3, 2);
  rep.e3_14 = log2_of(1, 4);
  rep.e3_42 = page.e3.at({4, 2}).log2_torsion;
  const int total = rep.e3_50 + rep.e3_41 + rep.e3_32 + rep.e3_14;
  const int max_rank = std::min(rep.e3_42, rep.e3_14);

  switch (twist) {
    case TwistKind::None:
      rep.d3_rank = max_rank;
      rep.d3_policy = "d3: E3(4,2) -> E3(1,4) of maximal rank";
      break;
    case TwistKind::TwoEta:
      rep.d3_rank = 0;
      rep.d3_policy = "d3: E3(4,2) -> E3(1,4) trivial";
      break;
    case TwistKind::Gamma: {
      const int wanted = total - log2_exact(rep.expected);
      if (wanted < 0 || wanted > max_rank) {
        throw Error(ErrorCode::ConsistencyFailure,
                    "no d3: E3(4,2) -> E3(1,4) of rank 0.." +
                        std::to_string(max_rank) + " gives order " +
                        std::to_string(rep.expected) + " for gamma, r = " +
                        std::to_string(r));
      }
      rep.d3_rank = wanted;
      rep.d3_policy = "d3: E3(4,2) -> E3(1,4) of rank " + std::to_string(wanted) +
                      ", fixed by the extension over Omega_4^Pinc";
      break;
    }
  }
  rep.log2_order = total - rep.d3_rank;
  rep.order = pow2(rep.log2_order);
  rep.structure = group_structure(r, twist);
  return rep;
}

std::uint64_t omega5_order(int r, TwistKind twist) { return omega5(r, twist).order; }

std::string dump(const Page& page) {
  std::ostringstream os;
  constexpr int kWidth = 14;
  auto table = [&](const std::string& title, auto cell) {
    os << title << " (r = " << page.r << ", twist " << to_string(page.twist)
       << ")\n";
    os << std::setw(5) << "q\\p" << " |";
    for (int p = 0; p <= Page::kMaxTotal; ++p) os << std::setw(kWidth) << p;
    os << '\n' << std::string(7 + kWidth * (Page::kMaxTotal + 1), '-') << '\n';
    for (int q = 5; q >= 0; --q) {
      os << std::setw(5) << q << " |";
      for (int p = 0; p <= Page::kMaxTotal; ++p) {
        auto it = page.e2.find({p, q});
        os << std::setw(kWidth) << (it == page.e2.end() ? std::string() : cell(p, q));
      }
      os << '\n';
    }
    os << '\n';
  };

  table("E2", [&](int p, int q) {
    const PageEntry& e = page.e2.at({p, q});
    return describe(e.group);
  });
  table("E3", [&](int p, int q) {
    const E3Entry& e = page.e3.at({p, q});
    return describe(IntegralHomology{e.free_rank, e.log2_torsion});
  });

  os << "d2 ranks\n";
  for (const Differential& d : page.d2) {
    os << "  d2: (" << d.p << "," << d.q << ") -> (" << d.p - 2 << ","
       << d.q + 1 << ")  " << d.matrix.rows() << "x" << d.matrix.cols()
       << "  rank " << d.rank << '\n';
  }
  os << '\n';

  os << "E2 bases (dual monomials)\n";
  for (const auto& [pq, e] : page.e2) {
    if (e.basis.empty()) continue;
    os << "  (" << pq.first << "," << pq.second << "): ";
    for (std::size_t i = 0; i < e.basis.size(); ++i)
      os << (i ? ", " : "") << e.basis[i].to_string();
    os << '\n';
  }
  os << '\n';
  os << "E3 representatives\n";
  for (const auto& [pq, e] : page.e3) {
    if (e.representatives.empty()) continue;
    os << "  (" << pq.first << "," << pq.second << "): ";
    for (std::size_t i = 0; i < e.representatives.size(); ++i)
      os << (i ? ", " : "") << to_string(e.representatives[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace fiveclass::ahss
