#include "adhesive/probes.hpp"

namespace adh {

  ProbeSet exhaustive_probes(Category const& cat,
                             ObjRef const&   target,
                             int             bound,
                             bool            up_to_aut) {
    ProbeSet set{target, {}, bound};
    for (auto const& x : cat.objects(bound)) {
      auto homs = up_to_aut ? cat.homs_up_to_domain_aut(x, target) : cat.homs(x, target);
      for (auto& h : homs) {
        set.probes.push_back(std::move(h));
      }
    }
    return set;
  }

  ProbeSet random_probes(Category const& cat,
                         ObjRef const&   target,
                         int             bound,
                         int             count,
                         std::mt19937&   rng) {
    auto     all = exhaustive_probes(cat, target, bound, false);
    ProbeSet set{target, {cat.identity(target)}, bound};
    if (all.probes.empty()) {
      return set;
    }
    std::uniform_int_distribution<std::size_t> pick(0, all.probes.size() - 1);
    for (int k = 0; k < count; ++k) {
      set.probes.push_back(all.probes[pick(rng)]);
    }
    return set;
  }

  ProbeSet user_probes(ObjRef target, std::vector<Morphism> probes) {
    for (auto const& p : probes) {
      if (!same_object(p.cod, target)) {
        throw Error(ErrorKind::type_mismatch, "probe does not land in the target");
      }
    }
    return ProbeSet{std::move(target), std::move(probes), 0};
  }

}  // namespace adh
