#pragma once

#include <string>

#include <json.hpp>

#include "category.hpp"

namespace adh {

  // A commuting square, always oriented as
  //
  //      C --f--> B
  //      |        |
  //      m        n
  //      v        v
  //      A --g--> D
  //
  // with n.f = g.m. Pushout/pullback questions are asked of this square
  // as drawn: the pushout of the span (m, f), the pullback of the
  // cospan (g, n).
  struct Square {
    Morphism m;
    Morphism f;
    Morphism g;
    Morphism n;

    ObjRef const& C() const noexcept {
      return m.dom;
    }
    ObjRef const& A() const noexcept {
      return m.cod;
    }
    ObjRef const& B() const noexcept {
      return f.cod;
    }
    ObjRef const& D() const noexcept {
      return g.cod;
    }
  };

  // Throws not_composable if the edges do not typecheck and not_commuting
  // if n.f != g.m.
  Square make_square(Category const& cat, Morphism m, Morphism f, Morphism g, Morphism n);
  bool   well_typed(Square const& sq);
  bool   commutes(Category const& cat, Square const& sq);
  // Reflect in the diagonal through C and D (swaps m/f and g/n).
  Square transpose(Square const& sq);

  // A cube over `bottom`:
  //
  //          C' --f'--> B'
  //         /|         /|
  //       m' c       n' b
  //       /  v       /  v
  //     A' --g'--> D'   B        top: (m', f', g', n')
  //     |   C --f--|-> /         verticals a: A'->A, b: B'->B,
  //     a  /       d  n                    c: C'->C, d: D'->D
  //     v m        v /
  //     A ---g---> D
  struct Cube {
    Square   bottom;
    Square   top;
    Morphism a;
    Morphism b;
    Morphism c;
    Morphism d;

    // C' -> A' -> A  over  C' -> C -> A
    Square left_face() const;
    // C' -> B' -> B  over  C' -> C -> B
    Square back_face() const;
    // A' -> D' -> D  over  A' -> A -> D
    Square front_face() const;
    // B' -> D' -> D  over  B' -> B -> D
    Square right_face() const;
  };

  bool commutes(Category const& cat, Cube const& cube);

  // The verdict of every checker. A failing witness carries the offending
  // diagram in `data` (see serialize.hpp), and replaying it reproduces the
  // failure.
  struct Witness {
    bool           pass = true;
    std::string    check;
    std::string    reason;
    nlohmann::json data = nlohmann::json::object();
    int            bound = 0;

    explicit operator bool() const noexcept {
      return pass;
    }
  };

  Witness passed(std::string check, int bound = 0);
  Witness failed(std::string check, std::string reason, nlohmann::json data, int bound = 0);

  nlohmann::json to_json(Witness const& w);
  Witness        witness_from_json(nlohmann::json const& j);

}  // namespace adh
