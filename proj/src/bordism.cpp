#include "fiveclass/bordism.hpp"

#include <cctype>
#include <sstream>

#include "fiveclass/error.hpp"

namespace fiveclass::bordism {

namespace {

int mod(int x, int m) {
  const int r = x % m;
  return r < 0 ? r + m : r;
}

void require_same_kind(const BordismElement& a, const BordismElement& b) {
  if (a.kind() != b.kind()) {
    throw Error(ErrorCode::KindMismatch, "cannot combine " + a.to_string() +
                                             " and " + b.to_string());
  }
}

}  // namespace

std::string to_string(Category c) {
  return c == Category::Smooth ? "smooth" : "top";
}

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::PinC: return "Pin^c";
    case Flavor::PinPlus: return "Pin^+";
    case Flavor::PinMinus: return "Pin^-";
  }
  return "?";
}

Category parse_category(const std::string& text) {
  if (text == "smooth" || text == "diff" || text == "pl") return Category::Smooth;
  if (text == "top" || text == "topological") return Category::Top;
  throw Error(ErrorCode::SemanticError,
              "unknown category '" + text + "' (expected smooth or top)");
}

const std::vector<GroupKind>& all_kinds() {
  static const std::vector<GroupKind> kinds = {
      {Category::Smooth, Flavor::PinC},  {Category::Smooth, Flavor::PinPlus},
      {Category::Smooth, Flavor::PinMinus}, {Category::Top, Flavor::PinC},
      {Category::Top, Flavor::PinPlus},  {Category::Top, Flavor::PinMinus},
  };
  return kinds;
}

std::string kind_name(GroupKind k) {
  std::string base;
  switch (k.flavor) {
    case Flavor::PinC: base = "pinc"; break;
    case Flavor::PinPlus: base = "pin+"; break;
    case Flavor::PinMinus: base = "pin-"; break;
  }
  return k.category == Category::Top ? "top-" + base : base;
}

GroupKind parse_kind(const std::string& text) {
  for (const GroupKind& k : all_kinds()) {
    if (kind_name(k) == text) return k;
  }
  throw Error(ErrorCode::InvalidElement,
              "unknown bordism group '" + text +
                  "' (expected pinc, pin+, pin-, top-pinc, top-pin+, top-pin-)");
}

int GroupInfo::group_order() const {
  int n = 1;
  for (int o : orders) n *= o;
  return n;
}

GroupInfo group_info(GroupKind kind) {
  const bool top = kind.category == Category::Top;
  GroupInfo info{kind, {}, {}, {}};
  if (top) {
    info.orders.push_back(2);
    info.generators.push_back("E8");
    info.invariants.push_back("KS");
  }
  switch (kind.flavor) {
    case Flavor::PinC:
      info.orders.insert(info.orders.end(), {8, 2});
      info.generators.insert(info.generators.end(), {"RP4", "CP2"});
      info.invariants.insert(info.invariants.end(), {"arf", "w2^2"});
      break;
    case Flavor::PinPlus:
      info.orders.push_back(top ? 8 : 16);
      info.generators.push_back("RP4");
      // No intrinsic invariant is known for smooth Z/16; the coordinate is
      // relative to the generator RP4.
      info.invariants.push_back(top ? "arf" : "?");
      break;
    case Flavor::PinMinus:
      break;
  }
  return info;
}

BordismElement::BordismElement(GroupKind kind, std::vector<int> coords)
    : kind_(kind), coords_(std::move(coords)) {
  const std::vector<int> orders = group_info(kind_).orders;
  if (coords_.size() != orders.size()) {
    throw Error(ErrorCode::InvalidElement,
                "wrong number of coordinates for " + kind_name(kind_));
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (coords_[i] < 0 || coords_[i] >= orders[i]) {
      std::ostringstream os;
      os << "coordinate " << coords_[i] << " out of range Z/" << orders[i]
         << " in " << kind_name(kind_);
      throw Error(ErrorCode::InvalidElement, os.str());
    }
  }
}

BordismElement BordismElement::reduce(GroupKind kind,
                                      const std::vector<int>& values) {
  const std::vector<int> orders = group_info(kind).orders;
  if (values.size() != orders.size()) {
    throw Error(ErrorCode::InvalidElement,
                "wrong number of coordinates for " + kind_name(kind));
  }
  std::vector<int> c(values.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(values[i], orders[i]);
  return BordismElement(kind, std::move(c));
}

BordismElement BordismElement::zero(GroupKind kind) {
  return BordismElement(kind,
                        std::vector<int>(group_info(kind).orders.size(), 0));
}

std::string BordismElement::to_string() const {
  std::ostringstream os;
  os << kind_name(kind_) << ':';
  if (coords_.size() == 1) {
    os << coords_[0];
    return os.str();
  }
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

BordismElement BordismElement::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::InvalidElement,
                "expected <group>:<coords>, got '" + text + "'");
  }
  const GroupKind kind = parse_kind(s.substr(0, colon));
  std::string body = s.substr(colon + 1);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') {
      throw Error(ErrorCode::InvalidElement, "unbalanced parentheses in '" + text + "'");
    }
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> coords;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t comma = body.find(',', pos);
    const std::string part =
        body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (part.empty()) {
      throw Error(ErrorCode::InvalidElement, "empty coordinate in '" + text + "'");
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size()) {
      throw Error(ErrorCode::InvalidElement,
                  "bad coordinate '" + part + "' in '" + text + "'");
    }
    coords.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  // The trivial group also accepts "pin-:0".
  if (group_info(kind).orders.empty() && coords == std::vector<int>{0}) {
    coords.clear();
  }
  return BordismElement(kind, std::move(coords));
}

std::vector<BordismElement> elements(GroupKind kind) {
  const std::vector<int> orders = group_info(kind).orders;
  std::vector<BordismElement> out;
  std::vector<int> c(orders.size(), 0);
  while (true) {
    out.emplace_back(kind, c);
    std::size_t i = c.size();
    while (i > 0) {
      --i;
      if (++c[i] < orders[i]) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (c.empty()) return out;
  }
}

BordismElement add(const BordismElement& a, const BordismElement& b) {
  require_same_kind(a, b);
  std::vector<int> c(a.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords()[i] + b.coords()[i];
  return BordismElement::reduce(a.kind(), c);
}

BordismElement neg(const BordismElement& a) {
  std::vector<int> c = a.coords();
  for (int& x : c) x = -x;
  return BordismElement::reduce(a.kind(), c);
}

BordismElement scale(const BordismElement& a, int k) {
  std::vector<int> c = a.coords();
  for (int& x : c) x *= k;
  return BordismElement::reduce(a.kind(), c);
}

CanonicalClass canonicalize(const BordismElement& a) {
  const BordismElement n = neg(a);
  return CanonicalClass{a.kind(), std::min(a.coords(), n.coords())};
}

BordismElement forget_smooth(const BordismElement& a) {
  if (a.kind().category != Category::Smooth) {
    throw Error(ErrorCode::CategoryMismatch,
                "forget_smooth needs a smooth element, got " + a.to_string());
  }
  const GroupKind top{Category::Top, a.kind().flavor};
  std::vector<int> c{0};  // KS of a smooth manifold
  c.insert(c.end(), a.coords().begin(), a.coords().end());
  return BordismElement::reduce(top, c);
}

BordismElement to_top(const BordismElement& a) {
  return a.kind().category == Category::Top ? a : forget_smooth(a);
}

}  // namespace fiveclass::bordism
