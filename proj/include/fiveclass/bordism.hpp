#pragma once

// The six 4-dimensional Pin bordism groups (smooth and topological, for
// Pin^c, Pin^+ and Pin^-), written as products of cyclic groups:
//
//   Smooth Pin^c  Z/8 + Z/2        (arf, w2^2)        RP4, CP2
//   Smooth Pin^+  Z/16             (generator-relative) RP4
//   Smooth Pin^-  0
//   Top Pin^c     Z/2 + Z/8 + Z/2  (KS, arf, w2^2)    E8, RP4, CP2
//   Top Pin^+     Z/2 + Z/8        (KS, arf)          E8, RP4
//   Top Pin^-     Z/2              (KS)               E8
//
// Elements are full group elements; the quotient by +-1 that appears in the
// classification is applied only through `canonicalize`.

#include <compare>
#include <string>
#include <vector>

namespace fiveclass::bordism {

enum class Category { Smooth, Top };
enum class Flavor { PinC, PinPlus, PinMinus };

std::string to_string(Category c);
std::string to_string(Flavor f);
Category parse_category(const std::string& text);

struct GroupKind {
  Category category;
  Flavor flavor;

  friend auto operator<=>(const GroupKind&, const GroupKind&) = default;
};

/// All six kinds, smooth first, in the order PinC, PinPlus, PinMinus.
const std::vector<GroupKind>& all_kinds();

/// Short name used by the textual notation: "pinc", "pin+", "top-pin-", ...
std::string kind_name(GroupKind k);
GroupKind parse_kind(const std::string& text);

struct GroupInfo {
  GroupKind kind;
  std::vector<int> orders;
  std::vector<std::string> generators;
  std::vector<std::string> invariants;

  int group_order() const;
};

GroupInfo group_info(GroupKind kind);

class BordismElement {
 public:
  /// Throws InvalidElement unless coords has the right length and every
  /// residue lies in [0, order).
  BordismElement(GroupKind kind, std::vector<int> coords);

  /// Reduces arbitrary integers into range.
  static BordismElement reduce(GroupKind kind, const std::vector<int>& values);
  static BordismElement zero(GroupKind kind);

  GroupKind kind() const { return kind_; }
  const std::vector<int>& coords() const { return coords_; }

  /// Text form, e.g. "pin+:7", "pinc:(1,1)", "top-pin-:(1)".
  std::string to_string() const;
  static BordismElement parse(const std::string& text);

  friend bool operator==(const BordismElement&,
                         const BordismElement&) = default;
  friend auto operator<=>(const BordismElement&,
                          const BordismElement&) = default;

 private:
  GroupKind kind_;
  std::vector<int> coords_;
};

/// Every element of the group, in lexicographic order of coordinates.
std::vector<BordismElement> elements(GroupKind kind);

/// Throws KindMismatch when the kinds differ.
BordismElement add(const BordismElement& a, const BordismElement& b);
BordismElement neg(const BordismElement& a);
BordismElement scale(const BordismElement& a, int k);

/// An element of the quotient by +-1, stored as its lexicographically
/// smallest representative.
struct CanonicalClass {
  GroupKind kind;
  std::vector<int> rep;

  BordismElement element() const { return BordismElement(kind, rep); }
  friend bool operator==(const CanonicalClass&,
                         const CanonicalClass&) = default;
  friend auto operator<=>(const CanonicalClass&,
                          const CanonicalClass&) = default;
};

CanonicalClass canonicalize(const BordismElement& a);

/// Smooth -> topological forgetful map (KS of a smooth manifold is 0; the
/// Pin^+ map tracks RP4 to RP4, reducing Z/16 to Z/8). Throws
/// CategoryMismatch on a topological input.
BordismElement forget_smooth(const BordismElement& a);

/// Identity on topological elements, forget_smooth on smooth ones.
BordismElement to_top(const BordismElement& a);

}  // namespace fiveclass::bordism
