#include "fiveclass/bundle.hpp"

#include <algorithm>
#include <sstream>

#include "fiveclass/error.hpp"

namespace fiveclass::bundle {

using algebra::Family;
using bordism::Category;

namespace {

int residue(const Integer& x, int m) {
  int r = static_cast<int>(x % m);
  return r < 0 ? r + m : r;
}

// Smallest representative of {x, -x} in Z/m.
int plus_minus(int x, int m) {
  x %= m;
  if (x < 0) x += m;
  return std::min(x, (m - x) % m);
}

std::string describe(const Integer& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

// k from rk H_2(X) = 2k + offset; a failure means an internal relation
// between the type, q and the rank of the base has been violated.
int invert_rank(int rank, int offset, const char* formula) {
  const int twice_k = rank - offset;
  if (twice_k < 0 || twice_k % 2 != 0) {
    std::ostringstream os;
    os << "k-formula " << formula << " gives k = " << twice_k << "/2 for rk H2 = "
       << rank;
    throw Error(ErrorCode::NonIntegralK, os.str());
  }
  return twice_k / 2;
}

}  // namespace

W2Type w2_type(const IntersectionForm& q, const CohomologyClass& c1) {
  if (c1.size() != q.rank()) {
    throw Error(ErrorCode::InvalidForm,
                "c1 length does not match the rank of the form");
  }
  const Integer m = forms::divisibility(c1);
  if (m != 2) {
    throw Error(ErrorCode::WrongDivisibility,
                "c1 must be twice a primitive class (divisibility " +
                    describe(m) + ")");
  }
  if (forms::is_even(q)) return W2Type::II;
  if (forms::is_characteristic(q, c1.divided(2))) return W2Type::III;
  return W2Type::I;
}

bool is_smoothable(int ks, const CohomologyClass& c1) {
  const Integer m = forms::divisibility(c1);
  if (m == 0) {
    throw Error(ErrorCode::ZeroClass, "c1 = 0 has no divisibility");
  }
  if (m % 2 == 1) return true;
  return ks == 0;
}

Classification classify(const BundleInput& in) {
  const IntersectionForm& form = in.form;
  if (in.c1.size() != form.rank()) {
    throw Error(ErrorCode::InvalidForm,
                "c1 length does not match the rank of the form");
  }
  if (in.ks != 0 && in.ks != 1) {
    throw Error(ErrorCode::InvalidForm, "KS must be 0 or 1");
  }
  const Integer m = forms::divisibility(in.c1);
  if (m == 0) {
    throw Error(ErrorCode::WrongDivisibility,
                "c1 = 0: the total space X x S1 has fundamental group Z");
  }
  if (m == 1) {
    throw Error(ErrorCode::NotSupported,
                "c1 is primitive: the total space is simply connected "
                "(Smale-Barden / Duan-Liang classification), not handled here");
  }
  if (m != 2) {
    throw Error(ErrorCode::NotSupported,
                "c1 has divisibility " + describe(m) +
                    ": fundamental group Z/" + describe(m) +
                    " is outside this classification");
  }

  Classification out;
  out.m = m;
  out.type = w2_type(form, in.c1);
  const int rank = static_cast<int>(form.rank());
  out.r = rank - 1;
  out.c_tilde_square = forms::square(form, in.c1.divided(2));
  out.q = plus_minus(residue(out.c_tilde_square, 8), 8);
  out.smoothable = is_smoothable(in.ks, in.c1);

  Family family = Family::TypeII;
  std::string rule;
  switch (out.type) {
    case W2Type::II:
      family = in.ks ? Family::TypeII_Star : Family::TypeII;
      out.k = invert_rank(rank, 2, "k = rk/2 - 1");
      rule = in.ks ? "Theorem type II(2)" : "Theorem type II(1)";
      break;
    case W2Type::III:
      family = Family::TypeIII;
      out.k = invert_rank(rank, out.q % 2 == 0 ? 2 : 1,
                          "k = (rk - (3 + (-1)^q)/2)/2");
      rule = in.ks ? "Theorem type III(2)" : "Theorem type III(1) and (2)";
      break;
    case W2Type::I:
      // <w2^2,[X]> = rk H2 (mod 2); the family is selected by comparing it
      // with <c~^2,[X]>.
      out.s = residue(out.c_tilde_square + rank, 2);
      if (out.s == 0) {
        family = Family::TypeI_S2xRP3;
        out.k = invert_rank(rank, out.q % 2 == 0 ? 4 : 3,
                            "k = (rk - (7 + (-1)^q)/2)/2");
      } else {
        family = Family::TypeI_CP2xS1;
        out.k = invert_rank(rank, out.q % 2 == 0 ? 3 : 2,
                            "k = (rk - (5 + (-1)^q)/2)/2");
      }
      rule = std::string(in.ks ? "Theorem type I(2)" : "Theorem type I(1)") +
             (out.s ? ", CP2 x S1 family" : ", S2 x RP3 family");
      break;
  }
  out.rule = rule;

  const int p = out.type == W2Type::II ? 0 : in.ks;
  const int q_top = out.type == W2Type::II ? 0 : out.q;
  out.homeo_form = StandardForm{Category::Top, family, p, q_top, out.k};
  out.invariants = out.homeo_form.invariants();
  if (out.invariants.r != out.r || out.invariants.ks != in.ks) {
    throw Error(ErrorCode::ConsistencyFailure,
                "standard form " + out.homeo_form.to_string() +
                    " does not reproduce rk H2 / KS of the bundle");
  }
  if (!algebra::check_relations(out.invariants)) {
    throw Error(ErrorCode::ConsistencyFailure,
                "parity relation violated by " + out.invariants.to_string());
  }

  if (out.smoothable) {
    if (out.type == W2Type::III) {
      const int q16 = residue(out.c_tilde_square, 16);
      std::vector<int> qs = {plus_minus(q16, 16), plus_minus(q16 + 8, 16)};
      std::sort(qs.begin(), qs.end());
      qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
      for (int q : qs) {
        out.smooth_forms.push_back(
            StandardForm{Category::Smooth, Family::TypeIII, 0, q, out.k});
      }
    } else {
      out.smooth_forms.push_back(
          StandardForm{Category::Smooth, family, 0, q_top, out.k});
    }
    for (const StandardForm& f : out.smooth_forms) {
      if (!algebra::equivalent(f.invariants(), out.invariants,
                               algebra::Level::Homeo)) {
        throw Error(ErrorCode::ConsistencyFailure,
                    "smooth candidate " + f.to_string() +
                        " is not homeomorphic to " + out.homeo_form.to_string());
      }
    }
  }
  return out;
}

}  // namespace fiveclass::bundle
