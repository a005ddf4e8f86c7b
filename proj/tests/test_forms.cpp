#include <gtest/gtest.h>

#include <numeric>

#include "fiveclass/error.hpp"
#include "fiveclass/forms.hpp"
#include "fiveclass/sampling.hpp"
#include "seeded.hpp"

using namespace fiveclass;
using namespace fiveclass::forms;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  Matrix m;
  for (auto r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

CohomologyClass cls(std::initializer_list<int> v) {
  return CohomologyClass(std::vector<Integer>(v.begin(), v.end()));
}

// Independent oracle: determinant by cofactor expansion along the first row.
Integer laplace_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Integer d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const Integer term = m[0][j] * laplace_det(minor);
    d += (j % 2 == 0) ? term : Integer(-term);
  }
  return d;
}

Matrix leading(const Matrix& m, std::size_t k) {
  Matrix out(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i][j] = m[i][j];
  return out;
}

// E8 written out by hand from the Dynkin diagram with the trivalent node in
// the middle of the long arm: 1-2-3-4-5-6-7 and 5-8 (1-based).
Matrix hand_e8() {
  Matrix m(8, std::vector<Integer>(8, 0));
  for (int i = 0; i < 8; ++i) m[i][i] = 2;
  const int edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
  for (auto [a, b] : edges) m[a][b] = m[b][a] = -1;
  return m;
}

// Q^{-1} by adjugate (cofactors via laplace_det), then p^T Q^{-1} p.
Integer adjugate_square(const Matrix& q, const std::vector<Integer>& p) {
  const std::size_t n = q.size();
  const Integer det = laplace_det(q);
  Integer acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer cof;
      if (n == 1) {
        cof = 1;
      } else {
        Matrix minor;
        for (std::size_t a = 0; a < n; ++a) {
          if (a == j) continue;
          std::vector<Integer> row;
          for (std::size_t b = 0; b < n; ++b)
            if (b != i) row.push_back(q[a][b]);
          minor.push_back(row);
        }
        cof = laplace_det(minor);
        if ((i + j) % 2) cof = -cof;
      }
      acc += p[i] * cof * p[j];
    }
  }
  return acc / det;
}

int block_signature(NamedBlock b) {
  switch (b) {
    case NamedBlock::Plus: return 1;
    case NamedBlock::Minus: return -1;
    case NamedBlock::Hyperbolic: return 0;
    case NamedBlock::E8: return 8;
    case NamedBlock::NegE8: return -8;
  }
  return 0;
}

Integer mod(const Integer& x, int m) {
  Integer r = x % m;
  return r < 0 ? Integer(r + m) : r;
}

}  // namespace

TEST(Validate, AcceptsUnimodular) {
  EXPECT_NO_THROW(validate(mat({{1}})));
  EXPECT_NO_THROW(validate(mat({{0, 1}, {1, 0}})));
}

TEST(Validate, RejectsDeterminantTwo) {
  try {
    validate(mat({{2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUnimodular);
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos);
  }
}

TEST(Validate, RejectsAsymmetricAndEmpty) {
  try {
    validate(mat({{1, 1}, {0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
  EXPECT_THROW(validate(Matrix{}), Error);
}

TEST(Determinant, MatchesCofactorExpansion) {
  sampling::Rng rng(test_seed());
  for (int t = 0; t < 40; ++t) {
    Matrix m(5, std::vector<Integer>(5));
    for (auto& row : m)
      for (auto& x : row) x = std::uniform_int_distribution<int>(-9, 9)(rng);
    EXPECT_EQ(determinant(m), laplace_det(m));
  }
}

TEST(Signature, SmallForms) {
  EXPECT_EQ(signature(IntersectionForm(mat({{1}}))), 1);
  EXPECT_EQ(signature(IntersectionForm(mat({{0, 1}, {1, 0}}))), 0);
  EXPECT_EQ(signature(IntersectionForm(mat({{-1}}))), -1);
}

TEST(Signature, E8LeadingMinorsOracle) {
  const Matrix e8 = hand_e8();
  // Sylvester: all leading principal minors positive => positive definite.
  for (std::size_t k = 1; k <= 8; ++k) EXPECT_GT(laplace_det(leading(e8, k)), 0);
  EXPECT_EQ(laplace_det(e8), 1);
  EXPECT_EQ(signature(IntersectionForm(e8)), 8);
  EXPECT_EQ(signature(IntersectionForm::block(NamedBlock::E8)), 8);
  EXPECT_EQ(signature(IntersectionForm::block(NamedBlock::NegE8)), -8);
  EXPECT_EQ(determinant(IntersectionForm::block(NamedBlock::E8).matrix()), 1);
}

TEST(Signature, AllDiagonalZeroNeedsHyperbolicSplit) {
  // Zero diagonal everywhere: H + H in a scrambled basis.
  const Matrix q = mat({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  EXPECT_EQ(signature(IntersectionForm(q)), 0);
}

TEST(Parity, EvenAndOdd) {
  EXPECT_TRUE(is_even(IntersectionForm(mat({{0, 1}, {1, 0}}))));
  EXPECT_FALSE(is_even(IntersectionForm(mat({{1}}))));
  EXPECT_TRUE(is_even(IntersectionForm::block(NamedBlock::E8)));
}

TEST(Divisibility, Examples) {
  EXPECT_EQ(divisibility(cls({2, 4})), 2);
  EXPECT_EQ(divisibility(cls({1, 0, 0})), 1);
  EXPECT_EQ(divisibility(cls({0, 0})), 0);
  EXPECT_EQ(divisibility(cls({-6, 9})), 3);
}

TEST(Square, Examples) {
  EXPECT_EQ(square(IntersectionForm(mat({{1}})), cls({2})), 4);
  EXPECT_EQ(square(IntersectionForm(mat({{0, 1}, {1, 0}})), cls({1, 1})), 2);
  EXPECT_EQ(square(IntersectionForm(mat({{1, 0}, {0, 1}})), cls({1, 2})), 5);
}

TEST(Square, MatchesAdjugateOracle) {
  sampling::Rng rng(test_seed() + 1);
  for (int t = 0; t < 60; ++t) {
    const auto s = sampling::random_form(rng, 6);
    const auto p = sampling::random_primitive(rng, s.form.rank(), 7);
    EXPECT_EQ(square(s.form, p), adjugate_square(s.form.matrix(), p.pairings()));
  }
}

TEST(Square, LengthMismatchThrows) {
  EXPECT_THROW(square(IntersectionForm(mat({{1}})), cls({1, 1})), Error);
}

TEST(Characteristic, Examples) {
  EXPECT_TRUE(is_characteristic(IntersectionForm(mat({{1}})), cls({1})));
  EXPECT_TRUE(is_characteristic(IntersectionForm(mat({{0, 1}, {1, 0}})), cls({0, 0})));
  EXPECT_FALSE(is_characteristic(IntersectionForm(mat({{1, 0}, {0, 1}})), cls({1, 0})));
}

TEST(Blocks, ParseAndRender) {
  for (NamedBlock b : {NamedBlock::Plus, NamedBlock::Minus, NamedBlock::Hyperbolic,
                       NamedBlock::E8, NamedBlock::NegE8})
    EXPECT_EQ(parse_block(block_name(b)), b);
  EXPECT_THROW(parse_block("E7"), Error);
}

TEST(ChangeBasis, RejectsNonUnimodular) {
  const IntersectionForm q(mat({{1, 0}, {0, 1}}));
  EXPECT_THROW(q.change_basis(mat({{2, 0}, {0, 1}})), Error);
}

// Properties over seeded random forms assembled from <1>, <-1>, H, E8.

TEST(Property, SignatureIsSumOfBlockSignatures) {
  sampling::Rng rng(test_seed() + 2);
  for (int t = 0; t < 100; ++t) {
    const auto s = sampling::random_form(rng);
    int expected = 0;
    for (NamedBlock b : s.blocks) expected += block_signature(b);
    EXPECT_EQ(signature(s.form), expected);
  }
}

TEST(Property, VanDerBlij) {
  sampling::Rng rng(test_seed() + 3);
  for (int t = 0; t < 200; ++t) {
    const auto s = sampling::random_form(rng);
    const auto c = sampling::random_characteristic(rng, s.form);
    ASSERT_TRUE(is_characteristic(s.form, c));
    const Integer sq = square(s.form, c);
    EXPECT_EQ(mod(sq - signature(s.form), 8), 0);
    EXPECT_EQ(mod(sq - static_cast<int>(s.form.rank()), 2), 0);
  }
}

TEST(Property, SquareInvariantUnderBasisChange) {
  sampling::Rng rng(test_seed() + 4);
  for (int t = 0; t < 60; ++t) {
    const auto s = sampling::random_form(rng, 16, false);
    const auto p = sampling::random_primitive(rng, s.form.rank());
    const Matrix u = sampling::random_unimodular(rng, s.form.rank(), 20);
    const IntersectionForm moved = s.form.change_basis(u);
    const CohomologyClass q = p.transported(u);
    EXPECT_EQ(square(moved, q), square(s.form, p));
    EXPECT_EQ(divisibility(q), divisibility(p));
    EXPECT_EQ(is_characteristic(moved, q), is_characteristic(s.form, p));
    EXPECT_EQ(signature(moved), signature(s.form));
  }
}

TEST(Property, EvenFormsHaveZeroCharacteristic) {
  sampling::Rng rng(test_seed() + 5);
  for (int t = 0; t < 60; ++t) {
    const auto s = sampling::random_form(rng);
    if (is_even(s.form)) {
      EXPECT_TRUE(is_characteristic(s.form, CohomologyClass::zero(s.form.rank())));
      EXPECT_EQ(s.form.rank() % 2, 0u);
    }
  }
}

TEST(Solve, RecoversRightHandSide) {
  sampling::Rng rng(test_seed() + 6);
  for (int t = 0; t < 30; ++t) {
    const auto s = sampling::random_form(rng, 12);
    const auto p = sampling::random_primitive(rng, s.form.rank());
    const auto x = solve(s.form, p.pairings());
    for (std::size_t i = 0; i < s.form.rank(); ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < s.form.rank(); ++j) acc += s.form(i, j) * x[j];
      EXPECT_EQ(acc, p[i]);
    }
  }
}
