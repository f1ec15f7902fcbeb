#pragma once

#include <random>
#include <vector>

#include "category.hpp"

namespace adh {

  // A finite family of morphisms d: D' -> D into a fixed target. Used to
  // finitize "stable under pullback": every pullback is taken along each
  // probe in turn.
  struct ProbeSet {
    ObjRef                target;
    std::vector<Morphism> probes;
    int                   bound = 0;
  };

  // All morphisms into `target` from objects of carrier size <= bound,
  // domains in canonical order. With `up_to_aut`, one probe per orbit of
  // Aut(D') acting on the domain; pulling back along h and h.s gives
  // isomorphic cubes, so checks quantified over probes are unaffected.
  ProbeSet exhaustive_probes(Category const& cat,
                             ObjRef const&   target,
                             int             bound,
                             bool            up_to_aut = true);

  // `count` probes drawn uniformly from the exhaustive family (with
  // replacement), plus the identity.
  ProbeSet random_probes(Category const& cat,
                         ObjRef const&   target,
                         int             bound,
                         int             count,
                         std::mt19937&   rng);

  ProbeSet user_probes(ObjRef target, std::vector<Morphism> probes);

}  // namespace adh
