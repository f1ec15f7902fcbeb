#pragma once

#include <map>
#include <string>

#include "colimit_calculus.hpp"
#include "probes.hpp"

namespace adh {

  // The cube over `bottom` whose top is obtained by pulling back along
  // d: D' -> D. Left, back, front and right faces are pullbacks.
  // Throws type_mismatch unless cod(d) is the corner D of `bottom`.
  Cube pullback_cube(Category const& cat, Square const& bottom, Morphism const& d);

  // Whether the top face of pullback_cube(bottom, d) is a pushout. Exact;
  // avoids building the cube in the set-like instances.
  bool pulled_back_is_pushout(Category const& cat, Square const& bottom, Morphism const& d);

  // Throws not_a_pushout unless sq is a pushout.
  Witness is_stable_pushout(Category const& cat, Square const& sq, ProbeSet const& probes);
  Witness is_stable_pushout(Category const& cat, Square const& sq, int bound);

  // For a cube whose left and back faces are pullbacks: the top is a
  // pushout iff the front and right faces are pullbacks.
  // Throws precondition_unmet if the cube does not commute or a left/back
  // face is not a pullback.
  Witness check_cube(Category const& cat, Cube const& cube);

  // Both directions of the van Kampen condition at `bound`:
  //  - every cube pulled back along a probe into D has a pushout top;
  //  - every commuting cube with pullback left/back faces, pushout top and
  //    all four top objects of carrier size <= bound has pullback front/right faces.
  // Cubes are enumerated up to isomorphism. Throws not_a_pushout.
  Witness is_van_kampen(Category const& cat, Square const& sq, int bound);

  // The first pushout along a (regular) mono, with all objects of carrier
  // size <= bound, that fails is_van_kampen. Squares are visited by
  // increasing |A| + |B|, then in canonical order.
  std::optional<Witness> first_non_van_kampen(Category const& cat, int bound, bool regular_only);

  // Pushouts along m of every f: C -> B with B of carrier size <= bound
  // (up to automorphisms of B) exist, are pullbacks, and are stable under
  // pullback along probes of carrier size <= bound.
  Witness is_pre_adhesive(Category const& cat, Morphism const& m, int bound);

  // m and all its pullbacks along h: A' -> A (A' of carrier size <= bound)
  // are pre-adhesive.
  Witness is_adhesive_morphism(Category const& cat, Morphism const& m, int bound);

  // Canonical key of the arrow m up to isomorphism of domain and codomain.
  // Only meaningful for monos.
  std::string mono_key(Category const& cat, Morphism const& m);

  // Shared state for repeated adhesion checks at one bound: pre-adhesive
  // verdicts are memoized per isomorphism class of mono.
  class AdhesionChecker {
   public:
    AdhesionChecker(Category const& cat, int bound) : _cat(cat), _bound(bound) {}

    Witness pre_adhesive(Morphism const& m);
    Witness adhesive(Morphism const& m);
    // All pushouts along m (same f range as pre_adhesive) are van Kampen.
    Witness van_kampen(Morphism const& m);

    int bound() const noexcept {
      return _bound;
    }

   private:
    Category const&                _cat;
    int                            _bound;
    std::map<std::string, Witness> _pre;
  };

  struct Flag {
    bool    verified = true;
    Witness witness;
    int     checked = 0;  // number of morphisms or pairs examined
  };

  struct Classification {
    std::string category;
    int         bound = 0;
    Flag        adhesive;
    Flag        rm_adhesive;
    Flag        q_adhesive;

    nlohmann::json to_json() const;
  };

  // Homs x -> y, one per orbit of Aut(y) acting by postcomposition
  // (lexicographically least table).
  std::vector<Morphism> homs_up_to_codomain_aut(Category const& cat, ObjRef const& x, ObjRef const& y);

  // Monos into objects of carrier size <= bound, one per isomorphism class
  // of arrow, in canonical order (codomain, then domain, then table).
  std::vector<Morphism> monos_up_to_iso(Category const& cat, int bound);

  // Verdicts at `bound`:
  //  q-adhesive   every regular mono is an adhesive morphism
  //  adhesive     every mono is an adhesive morphism
  //  rm-adhesive  q-adhesive, and unions of regular subobjects are regular
  // Each flag reports the first counterexample in canonical order.
  Classification classify(Category const& cat, int bound);

  // Data of the cancellation lemma:
  //
  //   A0 -b2-> A2       A'i -a'i-> A' -f'-> B'
  //   |b1      |a2      |pi        |p       |q
  //   A1 -a1-> A        Ai  -ai->  A  -f->  B      (i = 1, 2)
  //
  // `pushout` is the square (b1, b2, a1, a2).
  struct CancellationConfig {
    Square   pushout;
    Morphism p1;
    Morphism p2;
    Morphism a1_prime;
    Morphism a2_prime;
    Morphism p;
    Morphism f_prime;
    Morphism f;
    Morphism q;
  };

  // Passes iff the square (p, f', f, q) is a pullback. Throws
  // precondition_unmet if the left square is not a stable pushout (probes
  // at `bound`) or a left square / composite on the right is not a
  // pullback.
  Witness cancellation_lemma_check(Category const& cat, CancellationConfig const& config, int bound = 2);

  Diagram cancellation_diagram(Category const& cat, CancellationConfig const& config);
  CancellationConfig cancellation_from(Diagram const& d);

}  // namespace adh
