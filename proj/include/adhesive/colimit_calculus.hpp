#pragma once

#include <optional>

#include "diagram.hpp"
#include "probes.hpp"
#include "serialize.hpp"

namespace adh {

  // Pullback of f: C -> B along itself: apex C2, projections f1, f2 and the
  // diagonal gamma: C -> C2 with f1.gamma = f2.gamma = id.
  struct KernelPair {
    ObjRef   apex;
    Morphism first;
    Morphism second;
    Morphism diagonal;
  };

  KernelPair kernel_pair(Category const& cat, Morphism const& f);

  // Pushout of m: C -> A along itself, with the codiagonal A1 -> A.
  struct CokernelPair {
    ObjRef   apex;
    Morphism i;
    Morphism j;
    Morphism codiagonal;
  };

  // Throws not_admissible if the category cannot push out along m.
  CokernelPair cokernel_pair(Category const& cat, Morphism const& m);

  // Passes iff m is the equalizer of its own cokernel pair. A non-mono
  // fails without forming the cokernel pair.
  Witness is_regular_mono(Category const& cat, Morphism const& m);

  // A mono into a fixed object, normalized so that its table is increasing
  // on every sort: two monos represent the same subobject iff their
  // normalized forms are equal.
  struct Subobject {
    Morphism mono;

    ObjRef const& domain() const noexcept {
      return mono.dom;
    }
    ObjRef const& ambient() const noexcept {
      return mono.cod;
    }
  };

  // Throws invalid_morphism if m is not mono.
  Subobject subobject(Category const& cat, Morphism const& m);
  bool      operator==(Subobject const& a, Subobject const& b);

  Subobject intersection(Category const& cat, Subobject const& a, Subobject const& b);

  struct Union {
    PullbackCone            meet;     // intersection A0 with legs to A1, A2
    PushoutCocone           join;     // pushout D over the intersection
    Morphism                induced;  // x: D -> X
    std::optional<Subobject> sub;     // set when x is mono
    Witness                 witness;
  };

  // The pushout over the intersection and its comparison to X; the
  // witness passes iff the comparison is mono.
  Union union_effective(Category const& cat, Subobject const& a, Subobject const& b);

  // The diagram built from a span (m: C -> A, f: C -> B) with pushout D:
  // kernel pairs (f1, f2) of f and (g1, g2) of g, diagonals gamma, delta,
  // and the induced m2: C2 -> A2. Squares, oriented as in Square:
  //   left      (m, gamma, delta, m2)
  //   central1  (m2, f1, g1, m)
  //   central2  (m2, f2, g2, m)
  //   right     (m, f, g, n)
  struct BasicLemma {
    PushoutCocone pushout;
    KernelPair    kf;
    KernelPair    kg;
    Morphism      m2;
    Square        left;
    Square        central1;
    Square        central2;
    Square        right;
    Witness       witness;  // all four squares are pushouts and pullbacks
  };

  BasicLemma basic_lemma_squares(Category const& cat, Morphism const& m, Morphism const& f);

  // Every stage of the construction factoring the union m: A -> X of two
  // regular subobjects as a regular mono n: B -> X after e: A -> B.
  struct FactorizationTrace {
    Subobject     m1;
    Subobject     m2;
    Union         uni;
    CokernelPair  coker;  // i, j: X => X1 and e1
    PullbackCone  pulled; // X2 with ell: X2 -> X1 and e2: X2 -> A2
    Morphism      i2;
    Morphism      j2;
    PushoutCocone glued;  // Y with q: X1 -> Y and k: A2 -> Y
    Equalizer     eq;     // n: B -> X
    Morphism      e;
    Witness       n_regular;
    bool          e_epi = false;
    Witness       stable;  // e epi and n regular after each probe pullback

    Morphism const& m() const noexcept {
      return uni.induced;
    }
    Morphism const& n() const noexcept {
      return eq.incl;
    }
    bool ok() const noexcept {
      return n_regular.pass && e_epi && stable.pass;
    }
    Diagram diagram(Category const& cat) const;
  };

  // Throws not_regular if either input fails is_regular_mono and
  // precondition_unmet if their union is not effective.
  FactorizationTrace stable_factorization(Category const& cat,
                                          Subobject const& m1,
                                          Subobject const& m2,
                                          ProbeSet const*  probes = nullptr);

  // For every probe h: T -> A2, the pullbacks of delta: A -> A2 and
  // m2: C2 -> A2 along h jointly cover T.
  Witness stably_jointly_epi(Category const& cat,
                             Morphism const& m,
                             Morphism const& f,
                             int             bound);
  Witness stably_jointly_epi(Category const& cat,
                             Morphism const& m,
                             Morphism const& f,
                             ProbeSet const& probes);

  bool jointly_surjective(Morphism const& a, Morphism const& b);

  Diagram morphism_diagram(Category const& cat, Morphism const& m);

}  // namespace adh
