#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "category.hpp"
#include "diagram.hpp"

namespace adh {

  // A rewriting rule L <-l- K -r-> R. The left leg must be mono; the right
  // leg may identify (e.g. edge contraction).
  struct Rule {
    Morphism l;
    Morphism r;

    ObjRef const& K() const noexcept {
      return l.dom;
    }
    ObjRef const& L() const noexcept {
      return l.cod;
    }
    ObjRef const& R() const noexcept {
      return r.cod;
    }
  };

  // Throws precondition_unmet if l is not mono or the legs do not share a
  // domain, and type_mismatch outside FinSet and FinGraph.
  Rule make_rule(Category const& cat, Morphism l, Morphism r);

  // The square (l, k, match, d): K -> L, K -> D, L -> G, D -> G.
  struct Complement {
    ObjRef   D;
    Morphism k;
    Morphism d;
    Witness  pushout;

    Square square(Morphism const& l, Morphism const& match) const {
      return Square{l, k, match, d};
    }
  };

  // Either a complement certified by is_pushout, or the reason none exists
  // (identification or dangling condition violated).
  struct ComplementResult {
    std::optional<Complement> complement;
    std::string               reason;
  };

  ComplementResult pushout_complement(Category const& cat, Morphism const& l, Morphism const& match);

  // Searches all D' of carrier size <= bound with k', d' making
  // (l, k', match, d') a pushout, and fails on one not isomorphic to c over
  // K and G.
  Witness complement_unique(Category const&   cat,
                            Morphism const&   l,
                            Morphism const&   match,
                            Complement const& c,
                            int               bound);

  struct Derivation {
    bool        applicable = false;
    std::string reason;
    Square      left;   // (l, k, match, d)
    Square      right;  // (k, r, h, m*): D -> H, R -> H
    Witness     left_pushout;
    Witness     left_pullback;
    Witness     right_pushout;
    Witness     right_pullback;

    ObjRef const& H() const noexcept {
      return right.g.cod;
    }
  };

  // Inapplicable derivations carry only `reason`.
  Derivation     dpo_step(Category const& cat, Rule const& rule, Morphism const& match);
  nlohmann::json to_json(Category const& cat, Derivation const& d);

  // Host graph files: {"graph": object, "match": morphism from L}. The
  // match is optional.
  struct Host {
    ObjRef                  G;
    std::optional<Morphism> match;
  };

  Host host_from_json(Category const& cat, Rule const& rule, nlohmann::json const& j);

  // Rule files are diagrams with objects K, L, R and morphisms l, r.
  Rule           rule_from_json(nlohmann::json const& j);
  nlohmann::json to_json(Category const& cat, Rule const& rule);

}  // namespace adh
