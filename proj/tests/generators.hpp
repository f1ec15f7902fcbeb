#pragma once

// Random inputs for property tests. Objects are drawn from the canonical
// enumeration, morphisms from the brute-force hom sets.

#include <optional>
#include <random>

#include <adhesive/adhesion.hpp>

#include "oracle.hpp"

namespace gen {

  using adh::Category;
  using adh::Morphism;
  using adh::ObjRef;

  inline ObjRef object(Category const& cat, int bound, std::mt19937& rng) {
    auto const& objs = cat.objects(bound);
    return objs[std::uniform_int_distribution<std::size_t>(0, objs.size() - 1)(rng)];
  }

  inline std::optional<Morphism> hom(ObjRef const& x, ObjRef const& y, std::mt19937& rng) {
    auto all = oracle::homs(x, y);
    if (all.empty()) {
      return std::nullopt;
    }
    return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  }

  template <class Pred>
  std::optional<Morphism> hom_if(ObjRef const& x, ObjRef const& y, std::mt19937& rng, Pred pred) {
    auto all = oracle::homs(x, y);
    std::erase_if(all, [&](Morphism const& h) { return !pred(h); });
    if (all.empty()) {
      return std::nullopt;
    }
    return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  }

  // A morphism between random objects of size <= bound satisfying pred.
  template <class Pred>
  Morphism morphism(Category const& cat, int bound, std::mt19937& rng, Pred pred) {
    while (true) {
      auto x = object(cat, bound, rng);
      auto y = object(cat, bound, rng);
      if (auto h = hom_if(x, y, rng, pred)) {
        return *h;
      }
    }
  }

  // A morphism out of x into a random object of size <= bound.
  inline Morphism out_of(Category const& cat, ObjRef const& x, int bound, std::mt19937& rng) {
    while (true) {
      if (auto h = hom(x, object(cat, bound, rng), rng)) {
        return *h;
      }
    }
  }

  // A morphism into y from a random object of size <= bound.
  inline Morphism into(Category const& cat, ObjRef const& y, int bound, std::mt19937& rng) {
    while (true) {
      if (auto h = hom(object(cat, bound, rng), y, rng)) {
        return *h;
      }
    }
  }

  // Data for the cancellation lemma around a pushout along a mono. The
  // right square is (first.u, second.u, f, q) for u: A' -> A'' into the
  // pullback A'' of (f, q); u is the identity half of the time and random
  // otherwise. Left squares are pullbacks by construction; the composite
  // rectangles are not checked here.
  inline adh::CancellationConfig cancellation(Category const& cat, int bound, std::mt19937& rng) {
    auto b1 = morphism(cat, bound, rng, [&](Morphism const& h) { return cat.is_mono(h); });
    auto b2 = out_of(cat, b1.dom, bound, rng);
    auto po = cat.pushout_along(b1, b2);
    adh::Square sq{b1, b2, po.first, po.second};
    auto f  = out_of(cat, po.apex, bound, rng);
    auto q  = into(cat, f.cod, bound, rng);
    auto pb = cat.pullback(f, q);
    auto u  = std::bernoulli_distribution(0.5)(rng) ? cat.identity(pb.apex) : into(cat, pb.apex, bound, rng);
    auto p  = cat.compose(pb.first, u);
    auto fp = cat.compose(pb.second, u);
    auto l1 = cat.pullback(po.first, p);
    auto l2 = cat.pullback(po.second, p);
    return adh::CancellationConfig{sq, l1.first, l2.first, l1.second, l2.second, p, fp, f, q};
  }

}  // namespace gen
