#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "category.hpp"
#include "diagram.hpp"
#include "presentation.hpp"

namespace adh {

  // A declared pushout square in a presentation, oriented as in Square:
  // m: C -> A, f: C -> B, g: A -> D, n: B -> D.
  struct DeclaredSquare {
    std::string name;
    int         m = 0;
    int         f = 0;
    int         g = 0;
    int         n = 0;

    // Kernel pair (g1, g2): A2 -> A of g and (f1, f2): C2 -> C of f, when
    // the presentation has them, with delta: A -> A2 the diagonal and
    // m2: C2 -> A2 induced by m.
    std::optional<Presentation::Span> a2;
    std::optional<Presentation::Span> c2;
    int                               delta = -1;
    int                               m2    = -1;

    bool has_kernel_pairs() const noexcept {
      return a2 && c2;
    }
  };

  // A presentation with declared squares. Each square must commute, be a
  // pushout in the presentation (invalid_square otherwise) and have its m
  // in the admissible class (not_admissible). The class is the given list
  // of arrows intersected with the monos, or all monos when no list is
  // given.
  //
  // JSON: the presentation object plus
  //   "squares": [{"name", "m", "f", "g", "n"}], "admissible": [arrow]
  class Site {
   public:
    struct SquareSpec {
      std::string name;
      int         m, f, g, n;
    };

    Site(Presentation p, std::vector<SquareSpec> const& squares, std::optional<std::vector<int>> admissible = {});

    static Site    from_json(nlohmann::json const& j);
    nlohmann::json to_json() const;

    Presentation const& presentation() const noexcept {
      return _p;
    }
    std::vector<DeclaredSquare> const& squares() const noexcept {
      return _squares;
    }
    bool admissible(int m) const;

   private:
    Presentation                    _p;
    std::vector<DeclaredSquare>     _squares;
    std::optional<std::vector<int>> _admissible;
  };

  struct CoveringFamily {
    int              target = 0;
    std::vector<int> members;
    std::string      origin;  // "j-basic", "k-basic" or "pullback-of-basic"
    std::string      square;  // declared square it comes from
  };

  nlohmann::json to_json(Presentation const& p, CoveringFamily const& c);

  // {g, n} for each declared square, plus its pullbacks along every arrow
  // into D for which both pullbacks exist. Duplicates are dropped.
  std::vector<CoveringFamily> j_families(Site const& site);
  // The j-families plus {m2, delta} for each square and its pullbacks
  // along arrows into A2. Throws missing_kernel_pair if a square lacks
  // kernel pairs.
  std::vector<CoveringFamily> k_families(Site const& site);

  // Per square, FD must be the limit of FA, FB, FC, FA2 under Fm, Ff, Fg1,
  // Fg2, with FD mapping in by Fg, Fn. Throws missing_kernel_pair.
  Witness is_j_sheaf(Site const& site, Presheaf const& f);
  // Whether Fdelta and Fm2 are jointly monic for every square.
  bool kernel_hypothesis(Site const& site, Presheaf const& f);
  // Per square, FD -> FA x_FC FB must be a bijection. Throws
  // hypothesis_failed unless kernel_hypothesis holds. The witness data
  // records the full verdict alongside for every square ("agreement").
  Witness simplified_sheaf_check(Site const& site, Presheaf const& f);
  // FT -> product of F(U_i) injective.
  Witness is_separated(Site const& site, Presheaf const& f, CoveringFamily const& family);
  Witness is_k_separated(Site const& site, Presheaf const& f);

  // The full subcategory of an instance on objects(bound), with one
  // declared square per admissible mono m (up to iso) and f: C -> B (up to
  // Aut B) whose pushout stays within the bound. Admissible means mono for
  // adhesive instances and regular mono otherwise. Pushouts and kernel
  // pairs that leave the bound are listed in `overflow`. Throws
  // unsupported_limit when the fragment has more than 4000 arrows.
  struct InstanceSite {
    Site                  site;
    std::vector<ObjRef>   objects;
    std::vector<Square>   squares;  // instance squares, parallel to site.squares()
    char                  theorem = 'C';
    nlohmann::json        overflow = nlohmann::json::array();
  };

  InstanceSite instance_site(Category const& cat, int bound);

  // Evidence for the embedding theorems on a bounded fragment: per square,
  // whether representables are j-sheaves (and k-separated on the quasitopos
  // path) and whether the restricted Yoneda image of the square is a
  // pullback. Only these checkable halves are reported; no sheaf category
  // is constructed.
  nlohmann::json embedding_report(Category const& cat, int bound);

}  // namespace adh
