#include "adhesive/serialize.hpp"

#include <map>

#include "adhesive/instances.hpp"

namespace adh {

  using nlohmann::json;

  namespace {

    [[noreturn]] void parse_fail(std::string const& msg) {
      throw Error(ErrorKind::parse_error, msg);
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        parse_fail(std::string("missing field '") + key + "'");
      }
      return j.at(key);
    }

    json element(Object const& x, int sort, int i) {
      if (x.has_labels()) {
        return x.labels[sort][i];
      }
      return i;
    }

    // Reads a list of element names; returns the labels and a name->index map.
    std::vector<std::string> read_elements(json const&                 list,
                                           std::map<std::string, int>& index) {
      if (!list.is_array()) {
        parse_fail("element list is not an array");
      }
      std::vector<std::string> labels;
      for (auto const& e : list) {
        auto name = label_of(e);
        if (!index.emplace(name, static_cast<int>(labels.size())).second) {
          parse_fail("duplicate element '" + name + "'");
        }
        labels.push_back(name);
      }
      return labels;
    }

    int lookup(std::map<std::string, int> const& index, json const& e) {
      auto name = label_of(e);
      auto it   = index.find(name);
      if (it == index.end()) {
        throw Error(ErrorKind::invalid_object, "unknown element '" + name + "'");
      }
      return it->second;
    }

    std::map<std::string, int> index_of(Object const& x, int sort) {
      std::map<std::string, int> index;
      for (int i = 0; i < x.card[sort]; ++i) {
        index.emplace(x.label(sort, i), i);
      }
      return index;
    }

    json table(Morphism const& f, int sort) {
      json on = json::object();
      for (int i = 0; i < f.dom->card[sort]; ++i) {
        on[f.dom->label(sort, i)] = element(*f.cod, sort, f(sort, i));
      }
      return on;
    }

    void read_table(json const&       on,
                    Object const&     dom,
                    Object const&     cod,
                    int               sort,
                    std::vector<int>& map,
                    int               offset) {
      if (!on.is_object()) {
        parse_fail("morphism table is not an object");
      }
      auto dom_index = index_of(dom, sort);
      auto cod_index = index_of(cod, sort);
      std::vector<bool> seen(dom.card[sort], false);
      for (auto const& [key, value] : on.items()) {
        auto it = dom_index.find(key);
        if (it == dom_index.end()) {
          throw Error(ErrorKind::invalid_morphism, "unknown domain element '" + key + "'");
        }
        auto jt = cod_index.find(label_of(value));
        if (jt == cod_index.end()) {
          throw Error(ErrorKind::invalid_morphism,
                      "unknown codomain element '" + label_of(value) + "'");
        }
        map[offset + it->second] = jt->second;
        seen[it->second]         = true;
      }
      for (bool s : seen) {
        if (!s) {
          throw Error(ErrorKind::invalid_morphism, "mapping is not total");
        }
      }
    }

  }  // namespace

  std::string label_of(json const& j) {
    if (j.is_string()) {
      return j.get<std::string>();
    }
    if (j.is_number_integer()) {
      return std::to_string(j.get<long long>());
    }
    parse_fail("element name must be a string or integer");
  }

  json to_json(Object const& x) {
    json j;
    auto elems = [&](int sort) {
      json list = json::array();
      for (int i = 0; i < x.card[sort]; ++i) {
        list.push_back(element(x, sort, i));
      }
      return list;
    };
    switch (x.kind) {
      case Kind::fin_set:
        j["elems"] = elems(0);
        break;
      case Kind::fin_graph: {
        j["V"]   = elems(0);
        j["E"]   = elems(1);
        json src = json::object();
        json tgt = json::object();
        for (int e = 0; e < x.card[1]; ++e) {
          src[x.label(1, e)] = element(x, 0, x.src[e]);
          tgt[x.label(1, e)] = element(x, 0, x.tgt[e]);
        }
        j["src"] = src;
        j["tgt"] = tgt;
        break;
      }
      case Kind::rel_set:
      case Kind::acyclic_rel: {
        j["elems"] = elems(0);
        json rel   = json::array();
        for (int a = 0; a < x.card[0]; ++a) {
          for (int b = 0; b < x.card[0]; ++b) {
            if (x.related(a, b)) {
              rel.push_back(json::array({element(x, 0, a), element(x, 0, b)}));
            }
          }
        }
        j["rel"] = rel;
        break;
      }
    }
    return j;
  }

  ObjRef object_from_json(Category const& cat, json const& j) {
    Object x;
    x.kind = cat.kind();
    try {
      if (cat.kind() == Kind::fin_graph) {
        std::map<std::string, int> vindex;
        std::map<std::string, int> eindex;
        auto vs = read_elements(field(j, "V"), vindex);
        auto es = read_elements(field(j, "E"), eindex);
        x.card  = {static_cast<int>(vs.size()), static_cast<int>(es.size())};
        x.src.assign(es.size(), -1);
        x.tgt.assign(es.size(), -1);
        for (auto [key, ends] : {std::pair{"src", &x.src}, std::pair{"tgt", &x.tgt}}) {
          auto const& m = field(j, key);
          if (!m.is_object()) {
            parse_fail(std::string(key) + " is not an object");
          }
          for (auto const& [e, v] : m.items()) {
            auto it = eindex.find(e);
            if (it == eindex.end()) {
              throw Error(ErrorKind::invalid_object, "unknown edge '" + e + "'");
            }
            (*ends)[it->second] = lookup(vindex, v);
          }
        }
        x.labels = {vs, es};
      } else {
        std::map<std::string, int> index;
        auto elems = read_elements(field(j, "elems"), index);
        x.card     = {static_cast<int>(elems.size())};
        x.labels   = {elems};
        if (cat.kind() != Kind::fin_set) {
          if (x.card[0] > max_relation_carrier) {
            throw Error(ErrorKind::invalid_object, "relation carrier too large");
          }
          x.rel.assign(x.card[0], 0);
          json const empty = json::array();
          json const& rel  = j.contains("rel") ? j.at("rel") : empty;
          if (!rel.is_array()) {
            parse_fail("rel is not an array");
          }
          for (auto const& pair : rel) {
            if (!pair.is_array() || pair.size() != 2) {
              parse_fail("relation pairs must be [x, y]");
            }
            x.rel[lookup(index, pair[0])] |= std::uint64_t{1} << lookup(index, pair[1]);
          }
          if (cat.kind() == Kind::acyclic_rel) {
            for (int i = 0; i < x.card[0]; ++i) {
              x.rel[i] |= std::uint64_t{1} << i;
            }
          }
        }
      }
    } catch (json::exception const& e) {
      parse_fail(e.what());
    }
    cat.validate(x);
    return std::make_shared<Object const>(std::move(x));
  }

  json to_json(Morphism const& f) {
    json j;
    if (f.kind() == Kind::fin_graph) {
      j["onV"] = table(f, 0);
      j["onE"] = table(f, 1);
    } else {
      j["on"] = table(f, 0);
    }
    return j;
  }

  Morphism morphism_from_json(Category const& cat,
                              ObjRef const&   dom,
                              ObjRef const&   cod,
                              json const&     j) {
    std::vector<int> map(dom->total_size(), -1);
    if (cat.kind() == Kind::fin_graph) {
      read_table(field(j, "onV"), *dom, *cod, 0, map, 0);
      read_table(field(j, "onE"), *dom, *cod, 1, map, dom->card[0]);
    } else {
      read_table(field(j, "on"), *dom, *cod, 0, map, 0);
    }
    return cat.make_morphism(dom, cod, std::move(map));
  }

  void Diagram::add(std::string name, ObjRef x) {
    for (auto& [n, obj] : _objects) {
      if (n == name) {
        obj = std::move(x);
        return;
      }
    }
    _objects.emplace_back(std::move(name), std::move(x));
  }

  void Diagram::add(std::string name, std::string src, std::string tgt, Morphism f) {
    if (!same_object(object(src), f.dom) || !same_object(object(tgt), f.cod)) {
      throw Error(ErrorKind::not_composable, "morphism '" + name + "' endpoints do not match");
    }
    _arrows.push_back(Arrow{std::move(name), std::move(src), std::move(tgt), std::move(f)});
  }

  ObjRef const& Diagram::object(std::string const& name) const {
    for (auto const& [n, obj] : _objects) {
      if (n == name) {
        return obj;
      }
    }
    throw Error(ErrorKind::parse_error, "diagram has no object '" + name + "'");
  }

  Morphism const& Diagram::morphism(std::string const& name) const {
    for (auto const& a : _arrows) {
      if (a.name == name) {
        return a.mor;
      }
    }
    throw Error(ErrorKind::parse_error, "diagram has no morphism '" + name + "'");
  }

  bool Diagram::has_morphism(std::string const& name) const {
    for (auto const& a : _arrows) {
      if (a.name == name) {
        return true;
      }
    }
    return false;
  }

  json Diagram::to_json() const {
    json j;
    j["category"] = std::string(_cat->name());
    json objs     = json::object();
    for (auto const& [n, obj] : _objects) {
      objs[n] = adh::to_json(*obj);
    }
    json mors = json::object();
    for (auto const& a : _arrows) {
      json m   = adh::to_json(a.mor);
      m["src"] = a.src;
      m["tgt"] = a.tgt;
      mors[a.name] = m;
    }
    j["objects"]   = objs;
    j["morphisms"] = mors;
    return j;
  }

  Diagram Diagram::from_json(json const& j) {
    auto const& name = field(j, "category");
    if (!name.is_string()) {
      parse_fail("category must be a string");
    }
    auto const* cat = find_instance(name.get<std::string>());
    if (cat == nullptr) {
      parse_fail("unknown category '" + name.get<std::string>() + "'");
    }
    Diagram d(*cat);
    for (auto const& [n, obj] : field(j, "objects").items()) {
      d.add(n, object_from_json(*cat, obj));
    }
    for (auto const& [n, mor] : field(j, "morphisms").items()) {
      auto src = label_of(field(mor, "src"));
      auto tgt = label_of(field(mor, "tgt"));
      d.add(n, src, tgt, morphism_from_json(*cat, d.object(src), d.object(tgt), mor));
    }
    return d;
  }

  Diagram square_diagram(Category const& cat, Square const& sq) {
    Diagram d(cat);
    d.add("C", sq.C());
    d.add("A", sq.A());
    d.add("B", sq.B());
    d.add("D", sq.D());
    d.add("m", "C", "A", sq.m);
    d.add("f", "C", "B", sq.f);
    d.add("g", "A", "D", sq.g);
    d.add("n", "B", "D", sq.n);
    return d;
  }

  Square square_from(Diagram const& d) {
    return Square{d.morphism("m"), d.morphism("f"), d.morphism("g"), d.morphism("n")};
  }

  Diagram cube_diagram(Category const& cat, Cube const& cube) {
    Diagram d = square_diagram(cat, cube.bottom);
    d.add("C'", cube.top.C());
    d.add("A'", cube.top.A());
    d.add("B'", cube.top.B());
    d.add("D'", cube.top.D());
    d.add("m'", "C'", "A'", cube.top.m);
    d.add("f'", "C'", "B'", cube.top.f);
    d.add("g'", "A'", "D'", cube.top.g);
    d.add("n'", "B'", "D'", cube.top.n);
    d.add("a", "A'", "A", cube.a);
    d.add("b", "B'", "B", cube.b);
    d.add("c", "C'", "C", cube.c);
    d.add("d", "D'", "D", cube.d);
    return d;
  }

  Cube cube_from(Diagram const& d) {
    Square top{d.morphism("m'"), d.morphism("f'"), d.morphism("g'"), d.morphism("n'")};
    return Cube{square_from(d),
                top,
                d.morphism("a"),
                d.morphism("b"),
                d.morphism("c"),
                d.morphism("d")};
  }

}  // namespace adh
