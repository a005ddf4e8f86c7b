#pragma once

// Seeded generators for forms, classes and bundle inputs. Used by the
// randomized tests, the acceptance suite and `fiveclass selftest`.

#include <cstdint>
#include <random>
#include <vector>

#include "fiveclass/bundle.hpp"
#include "fiveclass/forms.hpp"

namespace fiveclass::sampling {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240501;

struct FormSample {
  std::vector<forms::NamedBlock> blocks;  // before the change of basis
  forms::IntersectionForm form;
};

/// Direct sum of random blocks from {<1>, <-1>, H, E8} with total rank in
/// [1, max_rank], optionally followed by a random unimodular change of basis.
FormSample random_form(Rng& rng, int max_rank = 24, bool scramble = true);

/// Product of random elementary and signed permutation matrices.
forms::Matrix random_unimodular(Rng& rng, std::size_t n, int steps);

/// Random class with entries in [-bound, bound] and gcd 1.
forms::CohomologyClass random_primitive(Rng& rng, std::size_t n, int bound = 5);

/// Random characteristic class (p_i = Q_ii mod 2) with entries in
/// [-bound, bound].
forms::CohomologyClass random_characteristic(Rng& rng,
                                             const forms::IntersectionForm& q,
                                             int bound = 5);

/// A realizable bundle input with c1 = 2 * primitive. For even forms the KS
/// invariant is forced to sigma/8 mod 2; for odd forms it is random.
bundle::BundleInput random_bundle_input(Rng& rng, int max_rank = 24);

}  // namespace fiveclass::sampling
