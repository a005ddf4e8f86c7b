#pragma once

// Desk-scale Atiyah-Hirzebruch spectral sequence for
//   Omega_5^Spin(RP^inf x (CP^inf)^r ; twist)
// with E^2_{p,q} = H_p(RP^inf x (CP^inf)^r ; Omega_q^Spin), Omega_q^Spin =
// Z, Z/2, Z/2, 0, Z, 0 for q = 0..5. Mod-2 cohomology is F_2[alpha, beta_1,
// ..., beta_r] with |alpha| = 1, |beta_i| = 2; homology classes are written
// in the basis dual to the monomials. d_2 is the dual of Sq^2 + w (w = 0,
// alpha^2 or beta_1, after the Thom isomorphism), composed with mod-2
// reduction on the bottom row.
//
// Only orders are computed. The single d_3 that matters on the line p+q = 5,
// E^3_{4,2} -> E^3_{1,4}, is not computed but fixed by a declared policy
// (see omega5).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fiveclass/gf2.hpp"

namespace fiveclass::ahss {

inline constexpr int kMaxDegree = 7;
inline constexpr int kMaxFactors = 6;
inline constexpr int kMaxOrderFactors = 4;

struct Monomial {
  int a = 0;           // exponent of alpha
  std::vector<int> b;  // exponents of beta_1..beta_r

  int degree() const;
  Monomial operator*(const Monomial& other) const;
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// F_2-linear combination of monomials, sorted, without repeats.
using Polynomial = std::vector<Monomial>;

std::string to_string(const Polynomial& p);

enum class TwistKind { None, TwoEta, Gamma };

std::string to_string(TwistKind t);
TwistKind parse_twist(const std::string& text);

enum class Coefficients { Mod2, Integral };

/// Monomials of total degree `degree` in alpha, beta_1..beta_r, ordered by
/// descending alpha exponent, then descending beta exponents.
std::vector<Monomial> monomials(int degree, int r);

struct IntegralHomology {
  int free_rank = 0;
  int torsion = 0;  // number of Z/2 summands
};

struct HomologyBasis {
  int degree = 0;
  int r = 0;
  Coefficients coefficients = Coefficients::Mod2;
  std::vector<Monomial> mod2;  // dual basis, for Mod2
  IntegralHomology integral;   // for Integral
};

/// Throws RangeExceeded outside 0 <= p <= 7, 0 <= r <= 6.
HomologyBasis homology_basis(int p, int r, Coefficients coefficients);

/// Sq^j of a monomial by the Cartan formula.
Polynomial steenrod_square(int j, const Monomial& m);
Polynomial sq2(const Monomial& m);

/// The w2 class of the twist, or nothing for TwistKind::None.
std::vector<Monomial> twist_class(TwistKind twist, int r);

/// Matrix of Sq^2 + w : H^{p-2} -> H^p in monomial bases (rows index H^p).
gf2::Matrix cohomology_operation(int p, int r, TwistKind twist);

/// Matrix of Sq^1 : H^{p-1} -> H^p.
gf2::Matrix sq1_matrix(int p, int r);

/// Basis of the image of H_p(;Z) -> H_p(;Z/2) (= kernel of the homology
/// Bockstein), as vectors in the dual-monomial basis of H_p(;Z/2).
std::vector<std::vector<std::uint8_t>> integral_image_basis(int p, int r);

/// d_2 : E^2_{p,q} -> E^2_{p-2,q+1} for q in {0,1}. Rows index the dual
/// monomial basis of H_{p-2}; columns index H_p(;Z/2) (q = 1) or the basis of
/// integral_image_basis(p, r) (q = 0).
gf2::Matrix d2_matrix(int p, int q, int r, TwistKind twist);

struct PageEntry {
  int p = 0;
  int q = 0;
  bool integral = false;  // q in {0, 4}
  IntegralHomology group;  // integral entries; for mod-2 entries torsion = dim
  std::vector<Monomial> basis;  // mod-2 entries
};

// E^3 entry: Z^free_rank + (Z/2)^log2_torsion.
struct E3Entry {
  int free_rank = 0;
  int log2_torsion = 0;
  /// Representatives of the Z/2 summands for mod-2 entries.
  std::vector<Polynomial> representatives;
};

struct Differential {
  int p = 0;  // source (p, q) -> target (p-2, q+1)
  int q = 0;
  gf2::Matrix matrix;
  std::size_t rank = 0;
};

// E^2 and E^3 in total degrees p + q <= 6.
struct Page {
  int r = 0;
  TwistKind twist = TwistKind::None;
  std::map<std::pair<int, int>, PageEntry> e2;
  std::map<std::pair<int, int>, E3Entry> e3;
  std::vector<Differential> d2;

  static constexpr int kMaxTotal = 6;
};

Page compute_page(int r, TwistKind twist);

struct Omega5Report {
  int r = 0;
  TwistKind twist = TwistKind::None;
  int e3_50 = 0;  // log2 orders on the line p + q = 5
  int e3_41 = 0;
  int e3_32 = 0;
  int e3_14 = 0;
  int e3_42 = 0;  // source of the declared d_3
  int d3_rank = 0;
  int log2_order = 0;
  std::uint64_t order = 0;
  std::uint64_t expected = 0;  // closed form
  std::string d3_policy;
  std::string structure;
};

/// Throws RangeExceeded for r > 4 or (Gamma, r = 0), and ConsistencyFailure
/// when no admissible d_3 reproduces the closed form in the Gamma case.
Omega5Report omega5(int r, TwistKind twist);
std::uint64_t omega5_order(int r, TwistKind twist);

/// 4^r 2^{r(r-1)/2}, times 16 (TwoEta) or times 16 / 4 (Gamma).
std::uint64_t closed_form_order(int r, TwistKind twist);

/// Group structure as known from the literature (not computed).
std::string group_structure(int r, TwistKind twist);

/// Text dump of E^2, d_2 ranks and E^3.
std::string dump(const Page& page);

}  // namespace fiveclass::ahss
