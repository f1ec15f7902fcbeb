#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "error.hpp"

namespace adh {

  // A finite category given by its full composition table.
  //
  // JSON:
  //   {"objects": [id],
  //    "arrows": [{"id", "src", "tgt"}],
  //    "compose": [[f, g, h]],          h = g . f (f first)
  //    "identities": {obj: id}}
  //
  // Identity arrows may be left out of "arrows", and composites with an
  // identity out of "compose". Every other composable pair must appear
  // exactly once. Unit and associativity laws are checked on construction
  // (invalid_object otherwise).
  class Presentation {
   public:
    struct Arrow {
      std::string name;
      int         src = 0;
      int         tgt = 0;
    };

    // Pullback of (u, v) inside the presentation: apex P with
    // first: P -> src u and second: P -> src v.
    struct Span {
      int apex   = 0;
      int first  = 0;
      int second = 0;
    };

    // `table[g * arrows + f]` is g . f, or -1 when not composable.
    Presentation(std::vector<std::string> objects,
                 std::vector<Arrow>       arrows,
                 std::vector<int>         identities,
                 std::vector<int>         table);

    static Presentation from_json(nlohmann::json const& j);
    nlohmann::json      to_json() const;

    int object_count() const noexcept {
      return static_cast<int>(_objects.size());
    }
    int arrow_count() const noexcept {
      return static_cast<int>(_arrows.size());
    }
    std::string const& object_name(int x) const {
      return _objects.at(x);
    }
    Arrow const& arrow(int f) const {
      return _arrows.at(f);
    }
    int src(int f) const {
      return _arrows.at(f).src;
    }
    int tgt(int f) const {
      return _arrows.at(f).tgt;
    }
    int identity(int x) const {
      return _identities.at(x);
    }
    bool is_identity(int f) const {
      return _identities.at(src(f)) == f;
    }

    // Throw parse_error for unknown names.
    int find_object(std::string_view name) const;
    int find_arrow(std::string_view name) const;

    // g . f; throws not_composable.
    int compose(int g, int f) const;
    std::vector<int> const& hom(int x, int y) const;

    bool is_mono(int f) const;
    bool is_iso(int f) const;
    bool commutes(int m, int f, int g, int n) const;
    // Universal property checked against every object.
    bool is_pushout(int m, int f, int g, int n) const;
    bool is_pullback(int m, int f, int g, int n) const;
    // First pullback in object order, if any. Memoized.
    std::optional<Span> pullback(int u, int v) const;
    // The unique arrow w: src(x) -> cone apex with first.w = x, second.w = y.
    std::optional<int> lift(Span const& cone, int x, int y) const;

   private:
    std::vector<std::string>                              _objects;
    std::vector<Arrow>                                    _arrows;
    std::vector<int>                                      _identities;
    std::vector<int>                                      _table;
    std::vector<std::vector<int>>                         _homs;
    mutable std::map<std::pair<int, int>, std::optional<Span>> _pullbacks;
  };

  // A set-valued contravariant functor. elements[x] names F(x); maps[a]
  // is F(a): F(tgt a) -> F(src a) as a table.
  //
  // JSON: {"sets": {obj: [elem]}, "maps": {arrow: {elem: elem}}}.
  // Maps of identities may be omitted, as may maps of composites of arrows
  // that are given.
  struct Presheaf {
    std::vector<std::vector<std::string>> elements;
    std::vector<std::vector<int>>         maps;

    int size(int x) const {
      return static_cast<int>(elements.at(x).size());
    }
  };

  Presheaf       presheaf_from_json(Presentation const& p, nlohmann::json const& j);
  nlohmann::json to_json(Presentation const& p, Presheaf const& f);

  // Throws invalid_object unless F(id) = id and F(g . f) = F(f) . F(g).
  void validate(Presentation const& p, Presheaf const& f);

  // y(x) = hom(-, x), elements named by arrow.
  Presheaf representable(Presentation const& p, int x);
  Presheaf terminal_presheaf(Presentation const& p);

  // Every presheaf whose value sets have at most `max_size` elements (named
  // 0, 1, ...), in a fixed order. Stops early when fn returns false.
  // Throws unsupported_limit if the search space is too large to scan.
  void for_each_presheaf(Presentation const&                         p,
                         int                                         max_size,
                         std::function<bool(Presheaf const&)> const& fn);

}  // namespace adh
