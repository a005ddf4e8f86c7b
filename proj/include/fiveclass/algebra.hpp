#pragma once

// Circle connected sums of the building-block 5-manifolds, their complete
// invariants (w2-type, rank of H_2, bordism class of the characteristic
// submanifold, KS) and the standard forms they normalize to.

#include <string>
#include <vector>

#include "fiveclass/bordism.hpp"

namespace fiveclass::algebra {

using bordism::BordismElement;
using bordism::CanonicalClass;
using bordism::Category;

enum class W2Type { I, II, III };

std::string to_string(W2Type t);
W2Type parse_w2type(const std::string& text);

/// Flavor of the characteristic-submanifold bordism group for a type.
bordism::Flavor flavor_of(W2Type t);

enum class BlockKind { FakeRP5, S2xRP3, StarS2xRP3, CP2xS1, S2xS2xS1 };

// One #_{S^1} summand.
//   FakeRP5     X(q) (smooth, q in Z/16) or X(p,q) (top, p = KS, q in Z/8);
//               odd q is a genuine fake RP5, even q a composite X(l) # X(l').
//   S2xRP3      S^2 x RP^3
//   StarS2xRP3  the non-smoothable *(S^2 x RP^3), top only
//   CP2xS1      CP^2 x S^1 (fundamental group Z)
//   S2xS2xS1    (#_k S^2 x S^2) x S^1 with k = count >= 1 (group Z)
struct Block {
  BlockKind kind = BlockKind::S2xRP3;
  int ks = 0;
  int q = 0;
  int count = 0;

  static Block fake_rp5(Category category, int q, int ks = 0);
  static Block s2xrp3() { return Block{BlockKind::S2xRP3, 0, 0, 0}; }
  static Block star_s2xrp3() { return Block{BlockKind::StarS2xRP3, 0, 0, 0}; }
  static Block cp2xs1() { return Block{BlockKind::CP2xS1, 0, 0, 0}; }
  static Block s2xs2xs1(int k) { return Block{BlockKind::S2xS2xS1, 0, 0, k}; }

  bool has_z2_fundamental_group() const;
  int h2_rank() const;

  friend bool operator==(const Block&, const Block&) = default;
};

// blocks[0] #_{f_0} blocks[1] #_{f_1} ... , read left to right. The framing
// bit f_i of the join in front of blocks[i+1] negates that block's
// contribution to the characteristic bordism class.
struct ManifoldExpression {
  Category category = Category::Smooth;
  std::vector<Block> blocks;
  std::vector<int> framings;

  static ManifoldExpression single(Category category, Block b);

  /// Grammar text, e.g. "X(3) # S2xRP3 #~ 2*(S2xS2)xS1".
  std::string to_string() const;

  friend bool operator==(const ManifoldExpression&,
                         const ManifoldExpression&) = default;
};

/// Throws InvalidExpression / StarInSmooth.
void validate(const ManifoldExpression& e);

struct Invariants {
  Category category = Category::Smooth;
  W2Type type = W2Type::II;
  int r = 0;
  BordismElement p_class = BordismElement::zero({Category::Smooth,
                                                 bordism::Flavor::PinMinus});
  int ks = 0;

  CanonicalClass canonical() const { return bordism::canonicalize(p_class); }
  /// The same invariants seen in the topological category.
  Invariants to_top() const;
  std::string to_string() const;
};

/// Equal as classified objects: type, r and the +- class agree.
bool same_class(const Invariants& a, const Invariants& b);

Invariants invariants(const ManifoldExpression& e);

/// a #_{S^1} b; framing 1 negates the whole right operand's contribution.
ManifoldExpression connected_sum(const ManifoldExpression& a,
                                 const ManifoldExpression& b, int framing);

enum class Family {
  TypeI_S2xRP3,   // X(q) # S2xRP3 # k(S2xS2)xS1
  TypeI_CP2xS1,   // X(q) # CP2xS1 # k(S2xS2)xS1
  TypeII,         // S2xRP3 # k(S2xS2)xS1
  TypeII_Star,    // *S2xRP3 # k(S2xS2)xS1 (top only)
  TypeIII,        // X(q) # k(S2xS2)xS1
};

struct StandardForm {
  Category category = Category::Smooth;
  Family family = Family::TypeII;
  int p = 0;  // KS of the fake RP5 summand (top only)
  int q = 0;  // canonical class: 0..8 smooth type III, otherwise 0..4
  int k = 0;

  W2Type type() const;
  int s() const { return family == Family::TypeI_CP2xS1 ? 1 : 0; }
  int r() const;

  ManifoldExpression expression() const;
  Invariants invariants() const;
  std::string to_string() const { return expression().to_string(); }
  /// Typeset description, e.g. "X⁵(3) #_{S¹} ((#₁ S²×S²)×S¹)".
  std::string pretty() const;

  friend bool operator==(const StandardForm&, const StandardForm&) = default;
  friend auto operator<=>(const StandardForm&, const StandardForm&) = default;
};

std::string to_string(Family f);

/// The unique standard form with the given invariants. Throws
/// NoStandardForm if none exists and NonIntegralK if the rank formula of
/// the matching family does not invert to an integer.
StandardForm standard_form(const Invariants& inv);

StandardForm normalize(const ManifoldExpression& e);

/// All standard forms with r <= r_max, ordered by (r, type, q, s, p).
std::vector<StandardForm> enumerate(int r_max, Category category);

enum class Level { Diffeo, Homeo, Homotopy };

std::string to_string(Level l);
Level parse_level(const std::string& text);

/// Throws CategoryMismatch for Diffeo on a topological input.
bool equivalent(const Invariants& a, const Invariants& b, Level level);
bool equivalent(const StandardForm& a, const StandardForm& b, Level level);

/// The parity relations between q, s and r for each w2-type.
bool check_relations(const Invariants& inv);

/// q and s read off the canonical class (q = RP4 coordinate, s = CP2
/// coordinate, 0 where absent).
int q_of(const Invariants& inv);
int s_of(const Invariants& inv);

}  // namespace fiveclass::algebra
