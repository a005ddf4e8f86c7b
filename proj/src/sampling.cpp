#include "fiveclass/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace fiveclass::sampling {

using forms::Integer;
using forms::NamedBlock;

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

int rank_of(NamedBlock b) {
  switch (b) {
    case NamedBlock::Plus:
    case NamedBlock::Minus: return 1;
    case NamedBlock::Hyperbolic: return 2;
    case NamedBlock::E8:
    case NamedBlock::NegE8: return 8;
  }
  return 0;
}

}  // namespace

forms::Matrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  forms::Matrix u(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  if (n == 0) return u;
  const int last = static_cast<int>(n) - 1;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, last));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, last));
    switch (uniform(rng, 0, 2)) {
      case 0:  // column j += +-column i
        if (i != j) {
          const int sign = uniform(rng, 0, 1) ? 1 : -1;
          for (std::size_t r = 0; r < n; ++r) u[r][j] += sign * u[r][i];
        }
        break;
      case 1:
        for (std::size_t r = 0; r < n; ++r) std::swap(u[r][i], u[r][j]);
        break;
      default:
        for (std::size_t r = 0; r < n; ++r) u[r][i] = -u[r][i];
        break;
    }
  }
  return u;
}

FormSample random_form(Rng& rng, int max_rank, bool scramble) {
  const int target = uniform(rng, 1, std::max(1, max_rank));
  FormSample out{{}, forms::IntersectionForm::block(NamedBlock::Plus)};
  int rank = 0;
  while (rank < target) {
    std::vector<NamedBlock> fitting;
    for (NamedBlock b : {NamedBlock::Plus, NamedBlock::Minus,
                         NamedBlock::Hyperbolic, NamedBlock::E8}) {
      if (rank + rank_of(b) <= target) fitting.push_back(b);
    }
    const NamedBlock b =
        fitting[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(fitting.size()) - 1))];
    out.blocks.push_back(b);
    rank += rank_of(b);
  }
  out.form = forms::IntersectionForm::from_blocks(out.blocks);
  if (scramble) {
    out.form = out.form.change_basis(
        random_unimodular(rng, out.form.rank(), 2 * static_cast<int>(out.form.rank())));
  }
  return out;
}

forms::CohomologyClass random_primitive(Rng& rng, std::size_t n, int bound) {
  while (true) {
    std::vector<Integer> p(n);
    for (auto& x : p) x = uniform(rng, -bound, bound);
    forms::CohomologyClass c(std::move(p));
    if (forms::divisibility(c) == 1) return c;
  }
}

forms::CohomologyClass random_characteristic(Rng& rng,
                                             const forms::IntersectionForm& q,
                                             int bound) {
  std::vector<Integer> p(q.rank());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const bool odd = (q(i, i) % 2) != 0;
    int x = uniform(rng, -bound, bound);
    if (((x % 2) != 0) != odd) x += (x < bound) ? 1 : -1;
    p[i] = x;
  }
  return forms::CohomologyClass(std::move(p));
}

bundle::BundleInput random_bundle_input(Rng& rng, int max_rank) {
  FormSample s = random_form(rng, max_rank);
  bundle::BundleInput in{s.form, 0, {}};
  if (forms::is_even(s.form)) {
    in.ks = ((forms::signature(s.form) / 8) % 2 + 2) % 2;
  } else {
    in.ks = uniform(rng, 0, 1);
  }
  // Characteristic c~ (type III) is rare among random classes; ask for it
  // directly a third of the time. Even forms have no primitive
  // characteristic class.
  if (!forms::is_even(s.form) && uniform(rng, 0, 2) == 0) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      forms::CohomologyClass c = random_characteristic(rng, s.form);
      if (forms::divisibility(c) == 1) {
        in.c1 = c.scaled(2);
        return in;
      }
    }
  }
  in.c1 = random_primitive(rng, s.form.rank()).scaled(2);
  return in;
}

}  // namespace fiveclass::sampling
