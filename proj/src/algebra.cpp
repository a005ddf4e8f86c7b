#include "fiveclass/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "fiveclass/error.hpp"

namespace fiveclass::algebra {

using bordism::Flavor;
using bordism::GroupKind;

namespace {

int mod(int x, int m) {
  const int r = x % m;
  return r < 0 ? r + m : r;
}

std::string subscript(int n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  const std::string plain = std::to_string(n);
  std::string out;
  for (char ch : plain) out += digits[ch - '0'];
  return out;
}

// Contribution of one block to the characteristic bordism class in the group
// of the given kind, before the framing sign is applied.
BordismElement contribution(const Block& b, GroupKind kind) {
  const bool top = kind.category == Category::Top;
  std::vector<int> v(bordism::group_info(kind).orders.size(), 0);
  switch (kind.flavor) {
    case Flavor::PinPlus:
      if (b.kind == BlockKind::FakeRP5) {
        if (top) {
          v = {b.ks, b.q};
        } else {
          v = {b.q};
        }
      }
      break;
    case Flavor::PinC:
      // X(q) -> RP4 coordinate q mod 8, CP2 x S1 -> the CP2 generator,
      // S2 x RP3 -> 0; *(S2 x RP3) and topological X(1,q) carry KS.
      if (b.kind == BlockKind::FakeRP5) {
        if (top) {
          v = {b.ks, b.q, 0};
        } else {
          v = {mod(b.q, 8), 0};
        }
      } else if (b.kind == BlockKind::CP2xS1) {
        v.back() = 1;
      } else if (b.kind == BlockKind::StarS2xRP3) {
        v.front() = 1;
      }
      break;
    case Flavor::PinMinus:
      if (b.kind == BlockKind::StarS2xRP3) v = {1};
      break;
  }
  return BordismElement::reduce(kind, v);
}

void require_framing_bit(int f) {
  if (f != 0 && f != 1) {
    throw Error(ErrorCode::InvalidExpression, "framing bit must be 0 or 1");
  }
}

}  // namespace

std::string to_string(W2Type t) {
  switch (t) {
    case W2Type::I: return "I";
    case W2Type::II: return "II";
    case W2Type::III: return "III";
  }
  return "?";
}

W2Type parse_w2type(const std::string& text) {
  if (text == "I" || text == "1") return W2Type::I;
  if (text == "II" || text == "2") return W2Type::II;
  if (text == "III" || text == "3") return W2Type::III;
  throw Error(ErrorCode::SemanticError,
              "unknown w2-type '" + text + "' (expected I, II or III)");
}

Flavor flavor_of(W2Type t) {
  switch (t) {
    case W2Type::I: return Flavor::PinC;
    case W2Type::II: return Flavor::PinMinus;
    case W2Type::III: return Flavor::PinPlus;
  }
  return Flavor::PinMinus;
}

Block Block::fake_rp5(Category category, int q, int ks) {
  if (category == Category::Smooth) {
    if (ks != 0) {
      throw Error(ErrorCode::SemanticError,
                  "a smooth fake RP5 has Kirby-Siebenmann invariant 0");
    }
    return Block{BlockKind::FakeRP5, 0, mod(q, 16), 0};
  }
  if (ks != 0 && ks != 1) {
    throw Error(ErrorCode::SemanticError, "KS must be 0 or 1");
  }
  return Block{BlockKind::FakeRP5, ks, mod(q, 8), 0};
}

bool Block::has_z2_fundamental_group() const {
  return kind == BlockKind::FakeRP5 || kind == BlockKind::S2xRP3 ||
         kind == BlockKind::StarS2xRP3;
}

int Block::h2_rank() const {
  switch (kind) {
    case BlockKind::FakeRP5: return q % 2 == 0 ? 1 : 0;
    case BlockKind::S2xRP3:
    case BlockKind::StarS2xRP3:
    case BlockKind::CP2xS1: return 1;
    case BlockKind::S2xS2xS1: return 2 * count;
  }
  return 0;
}

ManifoldExpression ManifoldExpression::single(Category category, Block b) {
  ManifoldExpression e;
  e.category = category;
  e.blocks.push_back(b);
  return e;
}

std::string ManifoldExpression::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) os << (framings[i - 1] ? " #~ " : " # ");
    const Block& b = blocks[i];
    switch (b.kind) {
      case BlockKind::FakeRP5:
        if (category == Category::Top) {
          os << "X(" << b.ks << ',' << b.q << ')';
        } else {
          os << "X(" << b.q << ')';
        }
        break;
      case BlockKind::S2xRP3: os << "S2xRP3"; break;
      case BlockKind::StarS2xRP3: os << "*S2xRP3"; break;
      case BlockKind::CP2xS1: os << "CP2xS1"; break;
      case BlockKind::S2xS2xS1: os << b.count << "*(S2xS2)xS1"; break;
    }
  }
  return os.str();
}

void validate(const ManifoldExpression& e) {
  if (e.blocks.empty()) {
    throw Error(ErrorCode::InvalidExpression, "empty expression");
  }
  if (e.framings.size() + 1 != e.blocks.size()) {
    throw Error(ErrorCode::InvalidExpression,
                "expected one framing bit per join");
  }
  for (int f : e.framings) require_framing_bit(f);
  bool has_z2 = false;
  for (const Block& b : e.blocks) {
    has_z2 = has_z2 || b.has_z2_fundamental_group();
    if (b.kind == BlockKind::StarS2xRP3 && e.category == Category::Smooth) {
      throw Error(ErrorCode::StarInSmooth,
                  "*S2xRP3 is not smoothable; use the top category");
    }
    if (b.kind == BlockKind::S2xS2xS1 && b.count < 1) {
      throw Error(ErrorCode::InvalidExpression,
                  "(#_k S2xS2)xS1 needs k >= 1");
    }
    if (b.kind == BlockKind::FakeRP5) {
      const int modulus = e.category == Category::Smooth ? 16 : 8;
      if (b.q < 0 || b.q >= modulus || b.ks < 0 || b.ks > 1 ||
          (e.category == Category::Smooth && b.ks != 0)) {
        throw Error(ErrorCode::InvalidExpression, "fake RP5 class out of range");
      }
    }
  }
  if (!has_z2) {
    throw Error(ErrorCode::InvalidExpression,
                "no summand with fundamental group Z/2 (the result would have "
                "fundamental group Z)");
  }
}

Invariants Invariants::to_top() const {
  if (category == Category::Top) return *this;
  Invariants out = *this;
  out.category = Category::Top;
  out.p_class = bordism::forget_smooth(p_class);
  out.ks = 0;
  return out;
}

std::string Invariants::to_string() const {
  std::ostringstream os;
  const CanonicalClass c = canonical();
  os << bordism::to_string(category) << " type " << algebra::to_string(type)
     << ", r=" << r << ", [P]=" << p_class.to_string()
     << " (+-class " << c.element().to_string() << ")";
  if (category == Category::Top) os << ", KS=" << ks;
  return os.str();
}

bool same_class(const Invariants& a, const Invariants& b) {
  return a.category == b.category && a.type == b.type && a.r == b.r &&
         a.canonical() == b.canonical();
}

Invariants invariants(const ManifoldExpression& e) {
  validate(e);
  bool has_fake = false, has_s2 = false, has_cp2 = false;
  int z2_blocks = 0;
  int rank = 0;
  for (const Block& b : e.blocks) {
    has_fake = has_fake || b.kind == BlockKind::FakeRP5;
    has_s2 = has_s2 || b.kind == BlockKind::S2xRP3 ||
             b.kind == BlockKind::StarS2xRP3;
    has_cp2 = has_cp2 || b.kind == BlockKind::CP2xS1;
    if (b.has_z2_fundamental_group()) ++z2_blocks;
    rank += b.h2_rank();
  }
  Invariants inv;
  inv.category = e.category;
  if (has_cp2 || (has_fake && has_s2)) {
    inv.type = W2Type::I;
  } else if (has_fake) {
    inv.type = W2Type::III;
  } else {
    inv.type = W2Type::II;
  }
  // Each join of two Z/2 summands adds one to rk H_2; joins with a Z summand
  // add nothing.
  inv.r = rank + (z2_blocks - 1);

  const GroupKind kind{e.category, flavor_of(inv.type)};
  BordismElement sum = BordismElement::zero(kind);
  for (std::size_t i = 0; i < e.blocks.size(); ++i) {
    BordismElement c = contribution(e.blocks[i], kind);
    if (i > 0 && e.framings[i - 1] == 1) c = bordism::neg(c);
    sum = bordism::add(sum, c);
  }
  inv.p_class = sum;
  inv.ks = e.category == Category::Top ? sum.coords().front() : 0;
  return inv;
}

ManifoldExpression connected_sum(const ManifoldExpression& a,
                                 const ManifoldExpression& b, int framing) {
  require_framing_bit(framing);
  if (a.category != b.category) {
    throw Error(ErrorCode::CategoryMismatch,
                "cannot join a smooth and a topological expression");
  }
  validate(a);
  validate(b);
  ManifoldExpression out = a;
  out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
  out.framings.push_back(framing);
  // The join bit negates b's first block; flipping b's own bits negates
  // the rest of b, so the whole right operand changes sign.
  for (int f : b.framings) out.framings.push_back(framing ? 1 - f : f);
  return out;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::TypeI_S2xRP3: return "I(S2xRP3)";
    case Family::TypeI_CP2xS1: return "I(CP2xS1)";
    case Family::TypeII: return "II";
    case Family::TypeII_Star: return "II(*)";
    case Family::TypeIII: return "III";
  }
  return "?";
}

W2Type StandardForm::type() const {
  switch (family) {
    case Family::TypeI_S2xRP3:
    case Family::TypeI_CP2xS1: return W2Type::I;
    case Family::TypeII:
    case Family::TypeII_Star: return W2Type::II;
    case Family::TypeIII: return W2Type::III;
  }
  return W2Type::II;
}

namespace {

// r = 2k + offset for each family; offset depends on the parity of q.
int rank_offset(Family f, int q) {
  const bool even = q % 2 == 0;
  switch (f) {
    case Family::TypeI_S2xRP3: return even ? 3 : 2;  // (5 + (-1)^q) / 2
    case Family::TypeI_CP2xS1: return even ? 2 : 1;  // (3 + (-1)^q) / 2
    case Family::TypeII:
    case Family::TypeII_Star: return 1;
    case Family::TypeIII: return even ? 1 : 0;  // (1 + (-1)^q) / 2
  }
  return 0;
}

}  // namespace

int StandardForm::r() const { return 2 * k + rank_offset(family, q); }

ManifoldExpression StandardForm::expression() const {
  ManifoldExpression e;
  e.category = category;
  switch (family) {
    case Family::TypeI_S2xRP3:
      e.blocks = {Block::fake_rp5(category, q, p), Block::s2xrp3()};
      break;
    case Family::TypeI_CP2xS1:
      e.blocks = {Block::fake_rp5(category, q, p), Block::cp2xs1()};
      break;
    case Family::TypeII: e.blocks = {Block::s2xrp3()}; break;
    case Family::TypeII_Star: e.blocks = {Block::star_s2xrp3()}; break;
    case Family::TypeIII: e.blocks = {Block::fake_rp5(category, q, p)}; break;
  }
  if (k > 0) e.blocks.push_back(Block::s2xs2xs1(k));
  e.framings.assign(e.blocks.size() - 1, 0);
  return e;
}

Invariants StandardForm::invariants() const {
  return algebra::invariants(expression());
}

std::string StandardForm::pretty() const {
  std::vector<std::string> parts;
  switch (family) {
    case Family::TypeI_S2xRP3:
    case Family::TypeI_CP2xS1:
    case Family::TypeIII: {
      std::ostringstream os;
      if (category == Category::Top) {
        os << "X⁵(" << p << ',' << q << ')';
      } else {
        os << "X⁵(" << q << ')';
      }
      parts.push_back(os.str());
      break;
    }
    default: break;
  }
  if (family == Family::TypeI_S2xRP3 || family == Family::TypeII) {
    parts.push_back("(S²×ℝP³)");
  } else if (family == Family::TypeII_Star) {
    parts.push_back("*(S²×ℝP³)");
  } else if (family == Family::TypeI_CP2xS1) {
    parts.push_back("(ℂP²×S¹)");
  }
  if (k > 0) parts.push_back("((#" + subscript(k) + " S²×S²)×S¹)");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " #_{S¹} ";
    out += parts[i];
  }
  return out;
}

int q_of(const Invariants& inv) {
  const std::vector<int> c = inv.canonical().rep;
  const bool top = inv.category == Category::Top;
  switch (inv.p_class.kind().flavor) {
    case Flavor::PinC:
    case Flavor::PinPlus: return top ? c[1] : c[0];
    case Flavor::PinMinus: return 0;
  }
  return 0;
}

int s_of(const Invariants& inv) {
  const std::vector<int> c = inv.canonical().rep;
  if (inv.p_class.kind().flavor != Flavor::PinC) return 0;
  return c.back();
}

StandardForm standard_form(const Invariants& inv) {
  if (inv.p_class.kind() != GroupKind{inv.category, flavor_of(inv.type)}) {
    throw Error(ErrorCode::KindMismatch,
                "bordism class " + inv.p_class.to_string() +
                    " does not belong to the group of type " +
                    to_string(inv.type));
  }
  const std::vector<int> c = inv.canonical().rep;
  const bool top = inv.category == Category::Top;
  StandardForm f;
  f.category = inv.category;
  f.p = top ? c.front() : 0;
  switch (inv.type) {
    case W2Type::I:
      f.q = q_of(inv);
      f.family = s_of(inv) ? Family::TypeI_CP2xS1 : Family::TypeI_S2xRP3;
      break;
    case W2Type::II:
      f.q = 0;
      f.family = f.p ? Family::TypeII_Star : Family::TypeII;
      break;
    case W2Type::III:
      f.q = q_of(inv);
      f.family = Family::TypeIII;
      break;
  }
  const int twice_k = inv.r - rank_offset(f.family, f.q);
  if (twice_k < 0) {
    throw Error(ErrorCode::NoStandardForm,
                "no standard form has invariants " + inv.to_string());
  }
  if (twice_k % 2 != 0) {
    throw Error(ErrorCode::NonIntegralK,
                "rank formula gives a non-integral k for " + inv.to_string());
  }
  f.k = twice_k / 2;
  return f;
}

StandardForm normalize(const ManifoldExpression& e) {
  return standard_form(invariants(e));
}

std::vector<StandardForm> enumerate(int r_max, Category category) {
  std::vector<StandardForm> out;
  const bool top = category == Category::Top;
  const std::vector<int> ps = top ? std::vector<int>{0, 1} : std::vector<int>{0};
  auto emit = [&](Family family, int p, int q) {
    for (int k = 0;; ++k) {
      StandardForm f{category, family, p, q, k};
      if (f.r() > r_max) break;
      out.push_back(f);
    }
  };
  for (int p : ps) {
    for (int q = 0; q <= 4; ++q) {
      emit(Family::TypeI_S2xRP3, p, q);
      emit(Family::TypeI_CP2xS1, p, q);
    }
    emit(p ? Family::TypeII_Star : Family::TypeII, p, 0);
    for (int q = 0; q <= (top ? 4 : 8); ++q) emit(Family::TypeIII, p, q);
  }
  auto key = [](const StandardForm& f) {
    return std::make_tuple(f.r(), static_cast<int>(f.type()), f.q, f.s(), f.p);
  };
  std::sort(out.begin(), out.end(), [&](const StandardForm& a, const StandardForm& b) {
    return key(a) < key(b);
  });
  return out;
}

std::string to_string(Level l) {
  switch (l) {
    case Level::Diffeo: return "diffeo";
    case Level::Homeo: return "homeo";
    case Level::Homotopy: return "homotopy";
  }
  return "?";
}

Level parse_level(const std::string& text) {
  if (text == "diffeo" || text == "diff") return Level::Diffeo;
  if (text == "homeo" || text == "top") return Level::Homeo;
  if (text == "homotopy" || text == "htpy") return Level::Homotopy;
  throw Error(ErrorCode::SemanticError,
              "unknown level '" + text + "' (expected diffeo, homeo, homotopy)");
}

bool equivalent(const Invariants& a, const Invariants& b, Level level) {
  switch (level) {
    case Level::Diffeo:
      if (a.category != Category::Smooth || b.category != Category::Smooth) {
        throw Error(ErrorCode::CategoryMismatch,
                    "diffeomorphism needs two smooth manifolds");
      }
      return same_class(a, b);
    case Level::Homeo:
      return same_class(a.to_top(), b.to_top());
    case Level::Homotopy:
      if (a.type != b.type || a.r != b.r) return false;
      // Type I: <w2^2 t + t^5, [M]> equals (q + s) mod 2.
      if (a.type == W2Type::I) {
        return (q_of(a) + s_of(a)) % 2 == (q_of(b) + s_of(b)) % 2;
      }
      return true;
  }
  return false;
}

bool equivalent(const StandardForm& a, const StandardForm& b, Level level) {
  return equivalent(a.invariants(), b.invariants(), level);
}

bool check_relations(const Invariants& inv) {
  switch (inv.type) {
    case W2Type::I: return (q_of(inv) + s_of(inv) + inv.r) % 2 == 1;
    case W2Type::II: return inv.r % 2 == 1;
    case W2Type::III: return (q_of(inv) + inv.r) % 2 == 1;
  }
  return false;
}

}  // namespace fiveclass::algebra
