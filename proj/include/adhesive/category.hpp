#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "object.hpp"

namespace adh {

  // P with projections first: P -> X, second: P -> Y.
  struct PullbackCone {
    ObjRef   apex;
    Morphism first;
    Morphism second;
  };

  // D with injections first: A -> D, second: B -> D.
  struct PushoutCocone {
    ObjRef   apex;
    Morphism first;
    Morphism second;
  };

  struct Equalizer {
    ObjRef   apex;
    Morphism incl;
  };

  struct Coequalizer {
    ObjRef   apex;
    Morphism quot;
  };

  // The contract every concrete instance satisfies. All instances are
  // concrete over (multi-sorted) finite sets: limits are computed on
  // carriers with induced structure, colimits as carrier quotients with
  // image structure followed by `reflect`.
  class Category {
   public:
    virtual ~Category() = default;

    virtual Kind             kind() const noexcept = 0;
    virtual std::string_view name() const noexcept = 0;

    int sorts() const noexcept {
      return sort_count(kind());
    }

    // Throws ErrorKind::invalid_object if `x` is not an object of this
    // category.
    virtual void validate(Object const& x) const;

    // Assumes a well-formed table and checks structure preservation.
    bool preserves_structure(Object const&           dom,
                             Object const&           cod,
                             std::vector<int> const& map) const;

    // The class of legs m along which pushout_along accepts pushouts.
    virtual bool admissible(Morphism const& m) const = 0;

    virtual bool is_epi(Morphism const& f) const;

    // Objects of carrier size <= bound, one per isomorphism class, in
    // canonical order (size, then structure).
    virtual std::vector<ObjRef> objects(int bound) const = 0;

    // Quotient map onto the reflection of `x` into this category. The
    // identity everywhere except the acyclic-relation category.
    virtual Morphism reflect(ObjRef const& x) const;

    // Carrier size used for every "size <= bound" quantifier. For graphs
    // this is |V| + |E|.
    int carrier_size(Object const& x) const noexcept {
      return x.total_size();
    }

    Morphism make_morphism(ObjRef dom, ObjRef cod, std::vector<int> map) const;
    Morphism identity(ObjRef const& x) const;
    // g . f
    Morphism compose(Morphism const& g, Morphism const& f) const;

    bool is_mono(Morphism const& f) const;
    bool is_surjective(Morphism const& f) const;
    bool is_iso(Morphism const& f) const;
    std::optional<Morphism> inverse(Morphism const& f) const;

    PullbackCone pullback(Morphism const& f, Morphism const& g) const;
    Equalizer    equalizer(Morphism const& u, Morphism const& v) const;

    // Canonical pushout of the span (m, f) regardless of admissibility.
    PushoutCocone pushout(Morphism const& m, Morphism const& f) const;
    // As pushout, but throws not_admissible if m is outside the class.
    PushoutCocone pushout_along(Morphism const& m, Morphism const& f) const;
    Coequalizer   coequalizer(Morphism const& u, Morphism const& v) const;
    PushoutCocone coproduct(ObjRef const& x, ObjRef const& y) const;

    // The unique u: dom(x) -> cone.apex with first.u = x and second.u = y,
    // if it exists in this category.
    std::optional<Morphism> lift_to_pullback(PullbackCone const& cone,
                                             Morphism const&     x,
                                             Morphism const&     y) const;
    // The unique w: cocone.apex -> cod(u) with w.first = u and
    // w.second = v, if it exists.
    std::optional<Morphism> lift_from_pushout(PushoutCocone const& cocone,
                                              Morphism const&      u,
                                              Morphism const&      v) const;
    // Factor f through a mono `incl` (f = incl . result), if possible.
    std::optional<Morphism> factor_through(Morphism const& incl,
                                           Morphism const& f) const;

    std::vector<Morphism> homs(ObjRef const& x, ObjRef const& y) const;
    // Stops early when `fn` returns false.
    void for_each_hom(ObjRef const&                               x,
                      ObjRef const&                               y,
                      std::function<bool(std::vector<int> const&)> const& fn) const;
    std::vector<Morphism> automorphisms(ObjRef const& x) const;
    // Homs x -> y with one representative per orbit of Aut(x) acting by
    // precomposition.
    std::vector<Morphism> homs_up_to_domain_aut(ObjRef const& x,
                                                ObjRef const& y) const;

    // Some isomorphism x -> y, if any.
    std::optional<Morphism> find_iso(ObjRef const& x, ObjRef const& y) const;

   protected:
    ObjRef finish_object(Object&& x) const;
  };

  void require_composable(Morphism const& f, Morphism const& g);

}  // namespace adh
