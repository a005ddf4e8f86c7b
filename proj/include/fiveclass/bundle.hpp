#pragma once

// Total spaces of circle bundles over closed simply-connected 4-manifolds
// whose Chern class is twice a primitive class (fundamental group Z/2).

#include <string>
#include <vector>

#include "fiveclass/algebra.hpp"
#include "fiveclass/forms.hpp"

namespace fiveclass::bundle {

using algebra::StandardForm;
using algebra::W2Type;
using forms::CohomologyClass;
using forms::Integer;
using forms::IntersectionForm;

struct BundleInput {
  IntersectionForm form;
  int ks = 0;  // Kirby-Siebenmann invariant of the base
  CohomologyClass c1;
};

struct Classification {
  Integer m;  // divisibility of c1
  int r = 0;
  W2Type type = W2Type::II;
  int q = 0;    // <c~^2,[X]> in (Z/8)/+-
  int s = 0;    // type I family selector
  int k = 0;
  Integer c_tilde_square;
  bool smoothable = false;
  StandardForm homeo_form;
  /// Present iff smoothable. Two entries only for type III, where the smooth
  /// structure is determined up to the kernel of Z/16 -> Z/8.
  std::vector<StandardForm> smooth_forms;
  /// Topological invariants of the total space.
  algebra::Invariants invariants;
  /// Name of the governing statement, for reports.
  std::string rule;
};

/// Throws WrongDivisibility unless c1 = 2 * primitive.
W2Type w2_type(const IntersectionForm& q, const CohomologyClass& c1);

/// Throws ZeroClass for c1 = 0.
bool is_smoothable(int ks, const CohomologyClass& c1);

/// Throws NotSupported for divisibility 1 or >= 3, WrongDivisibility for
/// c1 = 0, InvalidForm for a length mismatch, NonIntegralK /
/// ConsistencyFailure if an internal relation fails.
Classification classify(const BundleInput& in);

}  // namespace fiveclass::bundle
