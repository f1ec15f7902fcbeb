#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "diagram.hpp"

namespace adh {

  // Instance objects:
  //   finset      {"elems": [...]}
  //   fingraph    {"V": [...], "E": [...], "src": {e: v}, "tgt": {e: v}}
  //   relset      {"elems": [...], "rel": [[x, y], ...]}
  //   acyclicrel  as relset; the diagonal is added on input
  // Morphisms: {"on": {x: y}} or, for graphs, {"onV": {...}, "onE": {...}}.
  // Element names may be strings or integers. Parse failures throw
  // ErrorKind::parse_error; structurally invalid input throws
  // invalid_object / invalid_morphism.
  nlohmann::json to_json(Object const& x);
  ObjRef         object_from_json(Category const& cat, nlohmann::json const& j);

  nlohmann::json to_json(Morphism const& f);
  Morphism       morphism_from_json(Category const&       cat,
                                    ObjRef const&         dom,
                                    ObjRef const&         cod,
                                    nlohmann::json const& j);

  // A named collection of objects and morphisms in one instance:
  //   {"category": name,
  //    "objects": {name: object},
  //    "morphisms": {name: {"src": name, "tgt": name, "on": ...}}}
  class Diagram {
   public:
    explicit Diagram(Category const& cat) : _cat(&cat) {}

    Category const& category() const noexcept {
      return *_cat;
    }

    void add(std::string name, ObjRef x);
    void add(std::string name, std::string src, std::string tgt, Morphism f);

    ObjRef const&   object(std::string const& name) const;
    Morphism const& morphism(std::string const& name) const;
    bool            has_morphism(std::string const& name) const;

    nlohmann::json to_json() const;
    static Diagram from_json(nlohmann::json const& j);

   private:
    struct Arrow {
      std::string name;
      std::string src;
      std::string tgt;
      Morphism    mor;
    };

    Category const*                             _cat;
    std::vector<std::pair<std::string, ObjRef>> _objects;
    std::vector<Arrow>                          _arrows;
  };

  // Objects C, A, B, D and morphisms m, f, g, n.
  Diagram square_diagram(Category const& cat, Square const& sq);
  Square  square_from(Diagram const& d);
  // Additionally C', A', B', D', m', f', g', n' and verticals a, b, c, d.
  Diagram cube_diagram(Category const& cat, Cube const& cube);
  Cube    cube_from(Diagram const& d);

  std::string label_of(nlohmann::json const& j);

}  // namespace adh
