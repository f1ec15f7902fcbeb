#include "adhesive/presentation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace adh {

  using nlohmann::json;

  namespace {

    [[noreturn]] void invalid(std::string const& msg) {
      throw Error(ErrorKind::invalid_object, msg);
    }

    [[noreturn]] void parse(std::string const& msg) {
      throw Error(ErrorKind::parse_error, msg);
    }

    std::string name_of(json const& e) {
      return e.is_string() ? e.get<std::string>() : e.dump();
    }

    int index_in(std::vector<std::string> const& names, std::string const& n) {
      auto it = std::find(names.begin(), names.end(), n);
      return it == names.end() ? -1 : static_cast<int>(it - names.begin());
    }

  }  // namespace

  Presentation::Presentation(std::vector<std::string> objects,
                             std::vector<Arrow>       arrows,
                             std::vector<int>         identities,
                             std::vector<int>         table)
      : _objects(std::move(objects)),
        _arrows(std::move(arrows)),
        _identities(std::move(identities)),
        _table(std::move(table)) {
    int const n_obj = object_count();
    int const n     = arrow_count();
    if (static_cast<int>(_identities.size()) != n_obj) {
      invalid("one identity per object required");
    }
    if (_table.size() != static_cast<std::size_t>(n) * n) {
      invalid("composition table has the wrong size");
    }
    for (auto const& a : _arrows) {
      if (a.src < 0 || a.src >= n_obj || a.tgt < 0 || a.tgt >= n_obj) {
        invalid("arrow " + a.name + " has an unknown endpoint");
      }
    }
    for (int x = 0; x < n_obj; ++x) {
      int i = _identities[x];
      if (i < 0 || i >= n || src(i) != x || tgt(i) != x) {
        invalid("identity of " + _objects[x] + " is not an endomorphism of it");
      }
    }
    for (int g = 0; g < n; ++g) {
      for (int f = 0; f < n; ++f) {
        int h = _table[g * n + f];
        if ((tgt(f) == src(g)) != (h >= 0)) {
          invalid("composite " + _arrows[g].name + " . " + _arrows[f].name +
                  (h >= 0 ? " given for a non-composable pair" : " missing"));
        }
        if (h >= n || (h >= 0 && (src(h) != src(f) || tgt(h) != tgt(g)))) {
          invalid("composite " + _arrows[g].name + " . " + _arrows[f].name + " has the wrong type");
        }
      }
    }
    for (int f = 0; f < n; ++f) {
      if (_table[identity(tgt(f)) * n + f] != f || _table[f * n + identity(src(f))] != f) {
        invalid("unit law fails at " + _arrows[f].name);
      }
    }
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        int gf = _table[g * n + f];
        if (gf < 0) {
          continue;
        }
        for (int h = 0; h < n; ++h) {
          int hg = _table[h * n + g];
          if (hg >= 0 && _table[h * n + gf] != _table[hg * n + f]) {
            invalid("associativity fails at " + _arrows[h].name + ", " + _arrows[g].name + ", " +
                    _arrows[f].name);
          }
        }
      }
    }
    _homs.assign(static_cast<std::size_t>(n_obj) * n_obj, {});
    for (int f = 0; f < n; ++f) {
      _homs[src(f) * n_obj + tgt(f)].push_back(f);
    }
  }

  Presentation Presentation::from_json(json const& j) {
    if (!j.is_object() || !j.contains("objects") || !j.contains("arrows")) {
      parse("presentation needs \"objects\" and \"arrows\"");
    }
    std::vector<std::string> objects;
    for (auto const& o : j.at("objects")) {
      objects.push_back(name_of(o));
    }
    if (std::set<std::string>(objects.begin(), objects.end()).size() != objects.size()) {
      parse("duplicate object id");
    }
    auto obj = [&](json const& e) {
      int i = index_in(objects, name_of(e));
      if (i < 0) {
        parse("unknown object " + name_of(e));
      }
      return i;
    };

    std::vector<Arrow> arrows;
    for (auto const& a : j.at("arrows")) {
      if (!a.contains("id") || !a.contains("src") || !a.contains("tgt")) {
        parse("arrow needs id, src and tgt");
      }
      arrows.push_back({name_of(a.at("id")), obj(a.at("src")), obj(a.at("tgt"))});
    }
    std::vector<int> identities(objects.size(), -1);
    auto const       ids = j.value("identities", json::object());
    for (std::size_t x = 0; x < objects.size(); ++x) {
      std::string id = ids.contains(objects[x]) ? name_of(ids.at(objects[x])) : "id_" + objects[x];
      auto        it = std::find_if(arrows.begin(), arrows.end(), [&](Arrow const& a) { return a.name == id; });
      if (it == arrows.end()) {
        arrows.push_back({id, static_cast<int>(x), static_cast<int>(x)});
        it = std::prev(arrows.end());
      }
      identities[x] = static_cast<int>(it - arrows.begin());
    }
    std::set<std::string> names;
    for (auto const& a : arrows) {
      if (!names.insert(a.name).second) {
        parse("duplicate arrow id " + a.name);
      }
    }
    int const n = static_cast<int>(arrows.size());
    auto      arr = [&](json const& e) {
      auto it = std::find_if(arrows.begin(), arrows.end(), [&](Arrow const& a) { return a.name == name_of(e); });
      if (it == arrows.end()) {
        parse("unknown arrow " + name_of(e));
      }
      return static_cast<int>(it - arrows.begin());
    };

    std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
    for (int f = 0; f < n; ++f) {
      table[identities[arrows[f].tgt] * n + f] = f;
      table[f * n + identities[arrows[f].src]] = f;
    }
    for (auto const& c : j.value("compose", json::array())) {
      if (!c.is_array() || c.size() != 3) {
        parse("compose entries are [f, g, g.f]");
      }
      int f = arr(c[0]), g = arr(c[1]), h = arr(c[2]);
      if (arrows[f].tgt != arrows[g].src) {
        parse("compose entry " + c.dump() + " is not composable");
      }
      int& slot = table[g * n + f];
      if (slot >= 0 && slot != h) {
        parse("compose entry " + c.dump() + " contradicts an earlier one");
      }
      slot = h;
    }
    return Presentation(std::move(objects), std::move(arrows), std::move(identities), std::move(table));
  }

  json Presentation::to_json() const {
    json objs = json::array();
    for (auto const& o : _objects) {
      objs.push_back(o);
    }
    json arrs = json::array();
    for (auto const& a : _arrows) {
      arrs.push_back({{"id", a.name}, {"src", _objects[a.src]}, {"tgt", _objects[a.tgt]}});
    }
    json ids = json::object();
    for (int x = 0; x < object_count(); ++x) {
      ids[_objects[x]] = _arrows[_identities[x]].name;
    }
    json comp = json::array();
    int  n    = arrow_count();
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        int h = _table[g * n + f];
        if (h >= 0 && !is_identity(f) && !is_identity(g)) {
          comp.push_back({_arrows[f].name, _arrows[g].name, _arrows[h].name});
        }
      }
    }
    return {{"objects", objs}, {"arrows", arrs}, {"compose", comp}, {"identities", ids}};
  }

  int Presentation::find_object(std::string_view name) const {
    int i = index_in(_objects, std::string(name));
    if (i < 0) {
      parse("unknown object " + std::string(name));
    }
    return i;
  }

  int Presentation::find_arrow(std::string_view name) const {
    for (int f = 0; f < arrow_count(); ++f) {
      if (_arrows[f].name == name) {
        return f;
      }
    }
    parse("unknown arrow " + std::string(name));
  }

  int Presentation::compose(int g, int f) const {
    int h = _table.at(static_cast<std::size_t>(g) * arrow_count() + f);
    if (h < 0) {
      throw Error(ErrorKind::not_composable, _arrows[g].name + " . " + _arrows[f].name);
    }
    return h;
  }

  std::vector<int> const& Presentation::hom(int x, int y) const {
    return _homs.at(static_cast<std::size_t>(x) * object_count() + y);
  }

  bool Presentation::is_mono(int f) const {
    for (int z = 0; z < object_count(); ++z) {
      std::set<int> seen;
      for (int u : hom(z, src(f))) {
        if (!seen.insert(compose(f, u)).second) {
          return false;
        }
      }
    }
    return true;
  }

  bool Presentation::is_iso(int f) const {
    for (int g : hom(tgt(f), src(f))) {
      if (compose(g, f) == identity(src(f)) && compose(f, g) == identity(tgt(f))) {
        return true;
      }
    }
    return false;
  }

  bool Presentation::commutes(int m, int f, int g, int n) const {
    return src(m) == src(f) && tgt(m) == src(g) && tgt(f) == src(n) && tgt(g) == tgt(n) &&
           compose(g, m) == compose(n, f);
  }

  bool Presentation::is_pullback(int m, int f, int g, int n) const {
    if (!commutes(m, f, g, n)) {
      return false;
    }
    for (int q = 0; q < object_count(); ++q) {
      for (int x : hom(q, tgt(m))) {
        for (int y : hom(q, tgt(f))) {
          if (compose(g, x) != compose(n, y)) {
            continue;
          }
          int count = 0;
          for (int w : hom(q, src(m))) {
            count += compose(m, w) == x && compose(f, w) == y;
          }
          if (count != 1) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool Presentation::is_pushout(int m, int f, int g, int n) const {
    if (!commutes(m, f, g, n)) {
      return false;
    }
    for (int z = 0; z < object_count(); ++z) {
      for (int u : hom(tgt(m), z)) {
        for (int v : hom(tgt(f), z)) {
          if (compose(u, m) != compose(v, f)) {
            continue;
          }
          int count = 0;
          for (int w : hom(tgt(g), z)) {
            count += compose(w, g) == u && compose(w, n) == v;
          }
          if (count != 1) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::optional<Presentation::Span> Presentation::pullback(int u, int v) const {
    if (tgt(u) != tgt(v)) {
      throw Error(ErrorKind::not_composable, "pullback of arrows with different targets");
    }
    auto key = std::make_pair(u, v);
    if (auto it = _pullbacks.find(key); it != _pullbacks.end()) {
      return it->second;
    }
    // A pullback P has exactly as many arrows from each Q as there are
    // commuting pairs over Q; that filters candidates cheaply.
    int const        n_obj = object_count();
    std::vector<int> cones(n_obj, 0);
    for (int q = 0; q < n_obj; ++q) {
      for (int x : hom(q, src(u))) {
        for (int y : hom(q, src(v))) {
          cones[q] += compose(u, x) == compose(v, y);
        }
      }
    }
    std::optional<Span> found;
    for (int p = 0; p < n_obj && !found; ++p) {
      bool fits = true;
      for (int q = 0; q < n_obj && fits; ++q) {
        fits = static_cast<int>(hom(q, p).size()) == cones[q];
      }
      if (!fits) {
        continue;
      }
      for (int p1 : hom(p, src(u))) {
        for (int p2 : hom(p, src(v))) {
          if (!found && is_pullback(p1, p2, u, v)) {
            found = Span{p, p1, p2};
          }
        }
      }
    }
    _pullbacks.emplace(key, found);
    return found;
  }

  std::optional<int> Presentation::lift(Span const& cone, int x, int y) const {
    for (int w : hom(src(x), cone.apex)) {
      if (compose(cone.first, w) == x && compose(cone.second, w) == y) {
        return w;
      }
    }
    return std::nullopt;
  }

  Presheaf presheaf_from_json(Presentation const& p, json const& j) {
    if (!j.is_object() || !j.contains("sets")) {
      parse("presheaf needs \"sets\"");
    }
    Presheaf f;
    f.elements.resize(p.object_count());
    f.maps.resize(p.arrow_count());
    auto const& sets = j.at("sets");
    for (int x = 0; x < p.object_count(); ++x) {
      if (!sets.contains(p.object_name(x))) {
        parse("presheaf has no set for " + p.object_name(x));
      }
      for (auto const& e : sets.at(p.object_name(x))) {
        f.elements[x].push_back(name_of(e));
      }
      if (std::set<std::string>(f.elements[x].begin(), f.elements[x].end()).size() != f.elements[x].size()) {
        parse("duplicate element in F(" + p.object_name(x) + ")");
      }
    }
    std::vector<bool> known(p.arrow_count(), false);
    auto const        given = j.value("maps", json::object());
    for (auto const& [name, table] : given.items()) {
      int a   = p.find_arrow(name);
      int s   = p.src(a);
      int t   = p.tgt(a);
      auto& m = f.maps[a];
      m.assign(f.size(t), -1);
      for (auto const& [from, to] : table.items()) {
        int i = index_in(f.elements[t], from);
        int k = index_in(f.elements[s], name_of(to));
        if (i < 0 || k < 0) {
          parse("map of " + name + " mentions an unknown element");
        }
        m[i] = k;
      }
      if (std::count(m.begin(), m.end(), -1) > 0) {
        parse("map of " + name + " is not total");
      }
      known[a] = true;
    }
    for (int x = 0; x < p.object_count(); ++x) {
      int i = p.identity(x);
      if (!known[i]) {
        f.maps[i].resize(f.size(x));
        for (int e = 0; e < f.size(x); ++e) {
          f.maps[i][e] = e;
        }
        known[i] = true;
      }
    }
    // Fill in composites of given maps until nothing changes.
    for (bool grew = true; grew;) {
      grew = false;
      for (int a = 0; a < p.arrow_count(); ++a) {
        for (int b = 0; b < p.arrow_count(); ++b) {
          if (!known[a] || !known[b] || p.tgt(a) != p.src(b)) {
            continue;
          }
          int h = p.compose(b, a);
          if (known[h]) {
            continue;
          }
          f.maps[h].resize(f.size(p.tgt(b)));
          for (int e = 0; e < f.size(p.tgt(b)); ++e) {
            f.maps[h][e] = f.maps[a][f.maps[b][e]];
          }
          known[h] = grew = true;
        }
      }
    }
    for (int a = 0; a < p.arrow_count(); ++a) {
      if (!known[a]) {
        parse("presheaf gives no map for " + p.arrow(a).name);
      }
    }
    validate(p, f);
    return f;
  }

  json to_json(Presentation const& p, Presheaf const& f) {
    json sets = json::object();
    for (int x = 0; x < p.object_count(); ++x) {
      sets[p.object_name(x)] = f.elements[x];
    }
    json maps = json::object();
    for (int a = 0; a < p.arrow_count(); ++a) {
      if (p.is_identity(a)) {
        continue;
      }
      json m = json::object();
      for (int e = 0; e < f.size(p.tgt(a)); ++e) {
        m[f.elements[p.tgt(a)][e]] = f.elements[p.src(a)][f.maps[a][e]];
      }
      maps[p.arrow(a).name] = m;
    }
    return {{"sets", sets}, {"maps", maps}};
  }

  void validate(Presentation const& p, Presheaf const& f) {
    if (static_cast<int>(f.elements.size()) != p.object_count() ||
        static_cast<int>(f.maps.size()) != p.arrow_count()) {
      invalid("presheaf does not match the presentation");
    }
    for (int a = 0; a < p.arrow_count(); ++a) {
      auto const& m = f.maps[a];
      if (static_cast<int>(m.size()) != f.size(p.tgt(a))) {
        invalid("F(" + p.arrow(a).name + ") has the wrong domain");
      }
      for (int e = 0; e < static_cast<int>(m.size()); ++e) {
        if (m[e] < 0 || m[e] >= f.size(p.src(a)) || (p.is_identity(a) && m[e] != e)) {
          invalid("F(" + p.arrow(a).name + ") is not a valid map");
        }
      }
    }
    for (int a = 0; a < p.arrow_count(); ++a) {
      for (int b = 0; b < p.arrow_count(); ++b) {
        if (p.tgt(a) != p.src(b)) {
          continue;
        }
        int h = p.compose(b, a);
        for (int e = 0; e < f.size(p.tgt(b)); ++e) {
          if (f.maps[h][e] != f.maps[a][f.maps[b][e]]) {
            invalid("not functorial at " + p.arrow(b).name + " . " + p.arrow(a).name);
          }
        }
      }
    }
  }

  Presheaf representable(Presentation const& p, int x) {
    Presheaf f;
    f.elements.resize(p.object_count());
    f.maps.resize(p.arrow_count());
    for (int y = 0; y < p.object_count(); ++y) {
      for (int h : p.hom(y, x)) {
        f.elements[y].push_back(p.arrow(h).name);
      }
    }
    for (int a = 0; a < p.arrow_count(); ++a) {
      auto const& from = p.hom(p.tgt(a), x);
      auto const& to   = p.hom(p.src(a), x);
      for (int h : from) {
        int k = p.compose(h, a);
        f.maps[a].push_back(static_cast<int>(std::find(to.begin(), to.end(), k) - to.begin()));
      }
    }
    return f;
  }

  Presheaf terminal_presheaf(Presentation const& p) {
    Presheaf f;
    f.elements.assign(p.object_count(), {"*"});
    f.maps.assign(p.arrow_count(), {0});
    return f;
  }

  void for_each_presheaf(Presentation const&                         p,
                         int                                         max_size,
                         std::function<bool(Presheaf const&)> const& fn) {
    int const        n_obj = p.object_count();
    int const        n     = p.arrow_count();
    std::vector<int> free;  // non-identity arrows, assigned in this order
    for (int a = 0; a < n; ++a) {
      if (!p.is_identity(a)) {
        free.push_back(a);
      }
    }
    double space = std::pow(max_size + 1.0, n_obj);
    space *= std::pow(std::pow(max_size, max_size), static_cast<double>(free.size()));
    if (space > 5e7) {
      throw Error(ErrorKind::unsupported_limit, "too many candidate presheaves to scan");
    }
    // Constraint (a, b) with h = b . a can be tested once the last of the
    // three arrows in `free` order is assigned.
    std::vector<int> order(n, -1);
    for (int i = 0; i < static_cast<int>(free.size()); ++i) {
      order[free[i]] = i;
    }
    std::vector<std::vector<std::pair<int, int>>> checks(free.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (p.tgt(a) != p.src(b) || p.is_identity(a) || p.is_identity(b)) {
          continue;
        }
        int last = std::max({order[a], order[b], order[p.compose(b, a)]});
        checks[last].emplace_back(a, b);
      }
    }

    Presheaf f;
    f.elements.resize(n_obj);
    f.maps.resize(n);
    std::vector<int> sizes(n_obj, 0);
    bool             stop = false;

    auto consistent = [&](int i) {
      for (auto [a, b] : checks[i]) {
        int h = p.compose(b, a);
        for (int e = 0; e < sizes[p.tgt(b)]; ++e) {
          if (f.maps[h][e] != f.maps[a][f.maps[b][e]]) {
            return false;
          }
        }
      }
      return true;
    };

    std::function<void(int)> assign = [&](int i) {
      if (stop) {
        return;
      }
      if (i == static_cast<int>(free.size())) {
        stop = !fn(f);
        return;
      }
      int  a   = free[i];
      int  dom = sizes[p.tgt(a)];
      int  cod = sizes[p.src(a)];
      auto& m  = f.maps[a];
      m.assign(dom, 0);
      if (dom > 0 && cod == 0) {
        return;
      }
      while (true) {
        if (consistent(i)) {
          assign(i + 1);
          if (stop) {
            return;
          }
        }
        int k = 0;
        while (k < dom && ++m[k] == cod) {
          m[k++] = 0;
        }
        if (k == dom) {
          return;
        }
      }
    };

    while (!stop) {
      for (int x = 0; x < n_obj; ++x) {
        f.elements[x].clear();
        for (int e = 0; e < sizes[x]; ++e) {
          f.elements[x].push_back(std::to_string(e));
        }
        f.maps[p.identity(x)].resize(sizes[x]);
        for (int e = 0; e < sizes[x]; ++e) {
          f.maps[p.identity(x)][e] = e;
        }
      }
      assign(0);
      int x = 0;
      while (x < n_obj && ++sizes[x] > max_size) {
        sizes[x++] = 0;
      }
      if (x == n_obj) {
        break;
      }
    }
  }

}  // namespace adh
