#pragma once

// Input files describing a closed simply-connected 4-manifold:
//   {"form": {"blocks": ["1", "-1", "H", "E8", "-E8", ...]}
//          | {"matrix": [[...], ...]},
//    "ks": 0 | 1,
//    "c1": [...]}                                   (optional)
// Blocks expand by direct sum in the listed order. Matrix entries may be
// JSON integers or decimal strings (for entries beyond 64 bits).

#include <optional>
#include <string_view>

#include "fiveclass/forms.hpp"

namespace fiveclass {

struct ManifoldFile {
  forms::IntersectionForm form;
  int ks = 0;
  std::optional<forms::CohomologyClass> c1;
};

/// Throws Error(InvalidForm) for malformed JSON or schema violations, and
/// the forms errors (NotSymmetric, NotUnimodular) for bad matrices.
ManifoldFile parse_manifold_json(std::string_view text);

/// Comma-separated integers, e.g. "2,0,0".
forms::CohomologyClass parse_class(std::string_view text);

}  // namespace fiveclass
