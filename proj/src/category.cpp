#include "adhesive/category.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace adh {

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(int n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      int find(int x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      void unite(int x, int y) {
        x = find(x);
        y = find(y);
        // keep the smaller index as root so classes are named by their
        // least member
        if (x < y) {
          _parent[y] = x;
        } else if (y < x) {
          _parent[x] = y;
        }
      }

     private:
      std::vector<int> _parent;
    };

    struct Identification {
      int sort;
      int lhs;  // global index within the sort
      int rhs;
    };

    struct Glued {
      Object                        obj;
      std::vector<std::vector<int>> inj;  // flat tables, one per part
    };

    // Disjoint union of `parts` quotiented by the equivalence generated by
    // `ids`, with image structure.
    Glued glue(Kind                             kind,
               std::vector<Object const*> const& parts,
               std::vector<Identification> const& ids) {
      int const nsorts = sort_count(kind);
      // offsets[s][p] = global index of element 0 of part p in sort s
      std::vector<std::vector<int>> offsets(nsorts);
      std::vector<int>              totals(nsorts, 0);
      for (int s = 0; s < nsorts; ++s) {
        for (auto const* p : parts) {
          offsets[s].push_back(totals[s]);
          totals[s] += p->card[s];
        }
      }
      std::vector<UnionFind> uf;
      for (int s = 0; s < nsorts; ++s) {
        uf.emplace_back(totals[s]);
      }
      for (auto const& id : ids) {
        uf[id.sort].unite(id.lhs, id.rhs);
      }
      Glued result;
      Object& obj = result.obj;
      obj.kind    = kind;
      obj.card.assign(nsorts, 0);
      std::vector<std::vector<int>> cls(nsorts);
      std::vector<std::vector<int>> rep(nsorts);  // class -> global index
      for (int s = 0; s < nsorts; ++s) {
        cls[s].assign(totals[s], -1);
        for (int x = 0; x < totals[s]; ++x) {
          int root = uf[s].find(x);
          if (cls[s][root] == -1) {
            cls[s][root] = obj.card[s]++;
            rep[s].push_back(root);
          }
          cls[s][x] = cls[s][root];
        }
      }

      auto part_of = [&](int s, int global) {
        int p = static_cast<int>(parts.size()) - 1;
        while (offsets[s][p] > global) {
          --p;
        }
        return std::pair{p, global - offsets[s][p]};
      };

      if (kind == Kind::fin_graph) {
        obj.src.resize(obj.card[1]);
        obj.tgt.resize(obj.card[1]);
        for (int e = 0; e < obj.card[1]; ++e) {
          auto [p, local] = part_of(1, rep[1][e]);
          obj.src[e]      = cls[0][offsets[0][p] + parts[p]->src[local]];
          obj.tgt[e]      = cls[0][offsets[0][p] + parts[p]->tgt[local]];
        }
      } else if (kind == Kind::rel_set || kind == Kind::acyclic_rel) {
        if (obj.card[0] > max_relation_carrier) {
          throw Error(ErrorKind::invalid_object, "relation carrier too large");
        }
        obj.rel.assign(obj.card[0], 0);
        for (std::size_t p = 0; p < parts.size(); ++p) {
          auto const& part = *parts[p];
          for (int i = 0; i < part.card[0]; ++i) {
            for (int j = 0; j < part.card[0]; ++j) {
              if (part.related(i, j)) {
                obj.rel[cls[0][offsets[0][p] + i]]
                    |= std::uint64_t{1} << cls[0][offsets[0][p] + j];
              }
            }
          }
        }
      }

      bool labelled = std::any_of(
          parts.begin(), parts.end(), [](auto const* p) { return p->has_labels(); });
      if (labelled) {
        obj.labels.resize(nsorts);
        for (int s = 0; s < nsorts; ++s) {
          std::set<std::string> used;
          for (int c = 0; c < obj.card[s]; ++c) {
            auto [p, local]   = part_of(s, rep[s][c]);
            std::string label = parts[p]->label(s, local);
            while (used.count(label) != 0) {
              label += "'";
            }
            used.insert(label);
            obj.labels[s].push_back(std::move(label));
          }
        }
      }

      for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<int> table;
        for (int s = 0; s < nsorts; ++s) {
          for (int i = 0; i < parts[p]->card[s]; ++i) {
            table.push_back(cls[s][offsets[s][p] + i]);
          }
        }
        result.inj.push_back(std::move(table));
      }
      return result;
    }

    void require_kind(Category const& cat, Object const& x) {
      if (x.kind != cat.kind()) {
        throw Error(ErrorKind::type_mismatch,
                    "object of " + std::string(to_string(x.kind))
                        + " used in " + std::string(cat.name()));
      }
    }

    void require_parallel(Morphism const& u, Morphism const& v) {
      if (!same_object(u.dom, v.dom) || !same_object(u.cod, v.cod)) {
        throw Error(ErrorKind::type_mismatch, "morphisms are not parallel");
      }
    }

  }  // namespace

  void require_composable(Morphism const& f, Morphism const& g) {
    if (!same_object(f.cod, g.dom)) {
      throw Error(ErrorKind::not_composable, "codomain/domain mismatch");
    }
  }

  void Category::validate(Object const& x) const {
    auto fail = [](std::string const& msg) {
      throw Error(ErrorKind::invalid_object, msg);
    };
    if (x.kind != kind()) {
      fail("object kind does not match category");
    }
    if (static_cast<int>(x.card.size()) != sorts()) {
      fail("wrong number of sorts");
    }
    for (int c : x.card) {
      if (c < 0) {
        fail("negative carrier size");
      }
    }
    if (x.has_labels()) {
      if (static_cast<int>(x.labels.size()) != sorts()) {
        fail("labels do not match sorts");
      }
      for (int s = 0; s < sorts(); ++s) {
        if (static_cast<int>(x.labels[s].size()) != x.card[s]) {
          fail("labels do not match carrier");
        }
      }
    }
    switch (kind()) {
      case Kind::fin_set:
        break;
      case Kind::fin_graph:
        if (static_cast<int>(x.src.size()) != x.card[1]
            || static_cast<int>(x.tgt.size()) != x.card[1]) {
          fail("source/target maps are not total");
        }
        for (int e = 0; e < x.card[1]; ++e) {
          if (x.src[e] < 0 || x.src[e] >= x.card[0] || x.tgt[e] < 0
              || x.tgt[e] >= x.card[0]) {
            fail("edge endpoint out of range");
          }
        }
        break;
      case Kind::rel_set:
      case Kind::acyclic_rel:
        if (x.card[0] > max_relation_carrier) {
          fail("relation carrier too large");
        }
        if (static_cast<int>(x.rel.size()) != x.card[0]) {
          fail("relation rows do not match carrier");
        }
        for (auto row : x.rel) {
          if (x.card[0] < 64 && (row >> x.card[0]) != 0) {
            fail("relation pair out of range");
          }
        }
        break;
    }
  }

  bool Category::preserves_structure(Object const&           dom,
                                     Object const&           cod,
                                     std::vector<int> const& map) const {
    switch (kind()) {
      case Kind::fin_set:
        return true;
      case Kind::fin_graph: {
        int const nv = dom.card[0];
        for (int e = 0; e < dom.card[1]; ++e) {
          int fe = map[nv + e];
          if (cod.src[fe] != map[dom.src[e]] || cod.tgt[fe] != map[dom.tgt[e]]) {
            return false;
          }
        }
        return true;
      }
      case Kind::rel_set:
      case Kind::acyclic_rel:
        for (int i = 0; i < dom.card[0]; ++i) {
          auto row = dom.rel[i];
          while (row != 0) {
            int j = std::countr_zero(row);
            row &= row - 1;
            if (!cod.related(map[i], map[j])) {
              return false;
            }
          }
        }
        return true;
    }
    return false;
  }

  bool Category::is_epi(Morphism const& f) const {
    return is_surjective(f);
  }

  Morphism Category::reflect(ObjRef const& x) const {
    return identity(x);
  }

  ObjRef Category::finish_object(Object&& x) const {
    return std::make_shared<Object const>(std::move(x));
  }

  Morphism Category::make_morphism(ObjRef dom, ObjRef cod, std::vector<int> map) const {
    require_kind(*this, *dom);
    require_kind(*this, *cod);
    if (static_cast<int>(map.size()) != dom->total_size()) {
      throw Error(ErrorKind::invalid_morphism, "mapping is not total");
    }
    int idx = 0;
    for (int s = 0; s < sorts(); ++s) {
      for (int i = 0; i < dom->card[s]; ++i, ++idx) {
        if (map[idx] < 0 || map[idx] >= cod->card[s]) {
          throw Error(ErrorKind::invalid_morphism, "image outside codomain");
        }
      }
    }
    if (!preserves_structure(*dom, *cod, map)) {
      throw Error(ErrorKind::invalid_morphism, "map does not preserve structure");
    }
    return Morphism{std::move(dom), std::move(cod), std::move(map)};
  }

  Morphism Category::identity(ObjRef const& x) const {
    std::vector<int> map;
    map.reserve(x->total_size());
    for (int s = 0; s < sorts(); ++s) {
      for (int i = 0; i < x->card[s]; ++i) {
        map.push_back(i);
      }
    }
    return Morphism{x, x, std::move(map)};
  }

  Morphism Category::compose(Morphism const& g, Morphism const& f) const {
    require_composable(f, g);
    std::vector<int> map(f.map.size());
    int              idx = 0;
    for (int s = 0; s < sorts(); ++s) {
      for (int i = 0; i < f.dom->card[s]; ++i, ++idx) {
        map[idx] = g(s, f.map[idx]);
      }
    }
    return Morphism{f.dom, g.cod, std::move(map)};
  }

  bool Category::is_mono(Morphism const& f) const {
    for (int s = 0; s < sorts(); ++s) {
      std::vector<char> hit(f.cod->card[s], 0);
      for (int i = 0; i < f.dom->card[s]; ++i) {
        int y = f(s, i);
        if (hit[y]) {
          return false;
        }
        hit[y] = 1;
      }
    }
    return true;
  }

  bool Category::is_surjective(Morphism const& f) const {
    for (int s = 0; s < sorts(); ++s) {
      std::vector<char> hit(f.cod->card[s], 0);
      int               count = 0;
      for (int i = 0; i < f.dom->card[s]; ++i) {
        int y = f(s, i);
        if (!hit[y]) {
          hit[y] = 1;
          ++count;
        }
      }
      if (count != f.cod->card[s]) {
        return false;
      }
    }
    return true;
  }

  std::optional<Morphism> Category::inverse(Morphism const& f) const {
    if (f.dom->card != f.cod->card || !is_mono(f)) {
      return std::nullopt;
    }
    std::vector<int> inv(f.map.size());
    int              off = 0;
    for (int s = 0; s < sorts(); ++s) {
      for (int i = 0; i < f.dom->card[s]; ++i) {
        inv[off + f(s, i)] = i;
      }
      off += f.dom->card[s];
    }
    if (!preserves_structure(*f.cod, *f.dom, inv)) {
      return std::nullopt;
    }
    return Morphism{f.cod, f.dom, std::move(inv)};
  }

  bool Category::is_iso(Morphism const& f) const {
    return inverse(f).has_value();
  }

  PullbackCone Category::pullback(Morphism const& f, Morphism const& g) const {
    require_kind(*this, *f.dom);
    if (!same_object(f.cod, g.cod)) {
      throw Error(ErrorKind::type_mismatch, "pullback of morphisms with different codomains");
    }
    Object const& x = *f.dom;
    Object const& y = *g.dom;
    int const     nsorts = sorts();

    Object p;
    p.kind = kind();
    p.card.assign(nsorts, 0);
    // index[s][a * |Y_s| + b] = element of P over (a, b), or -1
    std::vector<std::vector<int>> index(nsorts);
    std::vector<int>              first_map;
    std::vector<int>              second_map;
    std::vector<std::vector<std::pair<int, int>>> pairs(nsorts);
    for (int s = 0; s < nsorts; ++s) {
      index[s].assign(x.card[s] * y.card[s], -1);
      for (int a = 0; a < x.card[s]; ++a) {
        for (int b = 0; b < y.card[s]; ++b) {
          if (f(s, a) == g(s, b)) {
            index[s][a * y.card[s] + b] = p.card[s]++;
            pairs[s].emplace_back(a, b);
          }
        }
      }
    }
    for (int s = 0; s < nsorts; ++s) {
      for (auto [a, b] : pairs[s]) {
        first_map.push_back(a);
        second_map.push_back(b);
      }
    }
    if (kind() == Kind::fin_graph) {
      for (auto [a, b] : pairs[1]) {
        p.src.push_back(index[0][x.src[a] * y.card[0] + y.src[b]]);
        p.tgt.push_back(index[0][x.tgt[a] * y.card[0] + y.tgt[b]]);
      }
    } else if (kind() != Kind::fin_set) {
      if (p.card[0] > max_relation_carrier) {
        throw Error(ErrorKind::unsupported_limit, "relation carrier too large");
      }
      p.rel.assign(p.card[0], 0);
      for (int i = 0; i < p.card[0]; ++i) {
        auto [a, b] = pairs[0][i];
        for (int j = 0; j < p.card[0]; ++j) {
          auto [c, d] = pairs[0][j];
          if (x.related(a, c) && y.related(b, d)) {
            p.rel[i] |= std::uint64_t{1} << j;
          }
        }
      }
    }
    if (x.has_labels() || y.has_labels()) {
      p.labels.resize(nsorts);
      for (int s = 0; s < nsorts; ++s) {
        for (auto [a, b] : pairs[s]) {
          p.labels[s].push_back("(" + x.label(s, a) + "," + y.label(s, b) + ")");
        }
      }
    }
    auto apex = finish_object(std::move(p));
    return PullbackCone{apex,
                        Morphism{apex, f.dom, std::move(first_map)},
                        Morphism{apex, g.dom, std::move(second_map)}};
  }

  Equalizer Category::equalizer(Morphism const& u, Morphism const& v) const {
    require_kind(*this, *u.dom);
    require_parallel(u, v);
    Object const&    x = *u.dom;
    Object           e;
    std::vector<int> incl;
    e.kind = kind();
    e.card.assign(sorts(), 0);
    std::vector<std::vector<int>> index(sorts());
    for (int s = 0; s < sorts(); ++s) {
      index[s].assign(x.card[s], -1);
      for (int i = 0; i < x.card[s]; ++i) {
        if (u(s, i) == v(s, i)) {
          index[s][i] = e.card[s]++;
          incl.push_back(i);
        }
      }
    }
    if (kind() == Kind::fin_graph) {
      for (int k = 0; k < e.card[1]; ++k) {
        int edge = incl[e.card[0] + k];
        e.src.push_back(index[0][x.src[edge]]);
        e.tgt.push_back(index[0][x.tgt[edge]]);
      }
    } else if (kind() != Kind::fin_set) {
      e.rel.assign(e.card[0], 0);
      for (int i = 0; i < e.card[0]; ++i) {
        for (int j = 0; j < e.card[0]; ++j) {
          if (x.related(incl[i], incl[j])) {
            e.rel[i] |= std::uint64_t{1} << j;
          }
        }
      }
    }
    if (x.has_labels()) {
      e.labels.resize(sorts());
      int off = 0;
      for (int s = 0; s < sorts(); ++s) {
        for (int k = 0; k < e.card[s]; ++k) {
          e.labels[s].push_back(x.labels[s][incl[off + k]]);
        }
        off += e.card[s];
      }
    }
    auto apex = finish_object(std::move(e));
    return Equalizer{apex, Morphism{apex, u.dom, std::move(incl)}};
  }

  PushoutCocone Category::pushout(Morphism const& m, Morphism const& f) const {
    require_kind(*this, *m.dom);
    if (!same_object(m.dom, f.dom)) {
      throw Error(ErrorKind::type_mismatch, "pushout of morphisms with different domains");
    }
    std::vector<Identification> ids;
    for (int s = 0; s < sorts(); ++s) {
      for (int c = 0; c < m.dom->card[s]; ++c) {
        ids.push_back({s, m(s, c), m.cod->card[s] + f(s, c)});
      }
    }
    auto glued = glue(kind(), {m.cod.get(), f.cod.get()}, ids);
    auto apex  = finish_object(std::move(glued.obj));
    Morphism g{m.cod, apex, std::move(glued.inj[0])};
    Morphism n{f.cod, apex, std::move(glued.inj[1])};
    auto     r = reflect(apex);
    if (r.cod == apex) {
      return PushoutCocone{apex, std::move(g), std::move(n)};
    }
    return PushoutCocone{r.cod, compose(r, g), compose(r, n)};
  }

  PushoutCocone Category::pushout_along(Morphism const& m, Morphism const& f) const {
    if (!admissible(m)) {
      throw Error(ErrorKind::not_admissible,
                  "pushout along a morphism outside the admissible class of "
                      + std::string(name()));
    }
    return pushout(m, f);
  }

  Coequalizer Category::coequalizer(Morphism const& u, Morphism const& v) const {
    require_kind(*this, *u.dom);
    require_parallel(u, v);
    std::vector<Identification> ids;
    for (int s = 0; s < sorts(); ++s) {
      for (int i = 0; i < u.dom->card[s]; ++i) {
        ids.push_back({s, u(s, i), v(s, i)});
      }
    }
    auto glued = glue(kind(), {u.cod.get()}, ids);
    auto apex  = finish_object(std::move(glued.obj));
    Morphism q{u.cod, apex, std::move(glued.inj[0])};
    auto     r = reflect(apex);
    if (r.cod == apex) {
      return Coequalizer{apex, std::move(q)};
    }
    return Coequalizer{r.cod, compose(r, q)};
  }

  PushoutCocone Category::coproduct(ObjRef const& x, ObjRef const& y) const {
    require_kind(*this, *x);
    require_kind(*this, *y);
    auto glued = glue(kind(), {x.get(), y.get()}, {});
    auto apex  = finish_object(std::move(glued.obj));
    return PushoutCocone{apex,
                         Morphism{x, apex, std::move(glued.inj[0])},
                         Morphism{y, apex, std::move(glued.inj[1])}};
  }

  std::optional<Morphism> Category::lift_to_pullback(PullbackCone const& cone,
                                                     Morphism const&     x,
                                                     Morphism const&     y) const {
    if (!same_object(x.dom, y.dom) || !same_object(x.cod, cone.first.cod)
        || !same_object(y.cod, cone.second.cod)) {
      throw Error(ErrorKind::type_mismatch, "cone does not match pullback");
    }
    std::vector<int> map(x.map.size());
    int              off = 0;
    for (int s = 0; s < sorts(); ++s) {
      int const nx = cone.first.cod->card[s];
      int const ny = cone.second.cod->card[s];
      // (a, b) -> element of apex; -2 marks an ambiguous pair
      std::vector<int> index(nx * ny, -1);
      for (int p = 0; p < cone.apex->card[s]; ++p) {
        int& slot = index[cone.first(s, p) * ny + cone.second(s, p)];
        slot      = slot == -1 ? p : -2;
      }
      for (int t = 0; t < x.dom->card[s]; ++t) {
        int p = index[x(s, t) * ny + y(s, t)];
        if (p < 0) {
          return std::nullopt;
        }
        map[off + t] = p;
      }
      off += x.dom->card[s];
    }
    if (!preserves_structure(*x.dom, *cone.apex, map)) {
      return std::nullopt;
    }
    return Morphism{x.dom, cone.apex, std::move(map)};
  }

  std::optional<Morphism> Category::lift_from_pushout(PushoutCocone const& cocone,
                                                      Morphism const&      u,
                                                      Morphism const&      v) const {
    if (!same_object(u.cod, v.cod) || !same_object(u.dom, cocone.first.dom)
        || !same_object(v.dom, cocone.second.dom)) {
      throw Error(ErrorKind::type_mismatch, "cocone does not match pushout");
    }
    std::vector<int> map(cocone.apex->total_size(), -1);
    int              off = 0;
    for (int s = 0; s < sorts(); ++s) {
      auto assign = [&](Morphism const& leg, Morphism const& val) {
        for (int a = 0; a < leg.dom->card[s]; ++a) {
          int& slot = map[off + leg(s, a)];
          int  w    = val(s, a);
          if (slot == -1) {
            slot = w;
          } else if (slot != w) {
            return false;
          }
        }
        return true;
      };
      if (!assign(cocone.first, u) || !assign(cocone.second, v)) {
        return std::nullopt;
      }
      off += cocone.apex->card[s];
    }
    if (std::find(map.begin(), map.end(), -1) != map.end()) {
      return std::nullopt;
    }
    if (!preserves_structure(*cocone.apex, *u.cod, map)) {
      return std::nullopt;
    }
    return Morphism{cocone.apex, u.cod, std::move(map)};
  }

  std::optional<Morphism> Category::factor_through(Morphism const& incl,
                                                   Morphism const& f) const {
    if (!same_object(incl.cod, f.cod)) {
      throw Error(ErrorKind::type_mismatch, "factorization through a different codomain");
    }
    std::vector<int> map(f.map.size());
    int              off = 0;
    for (int s = 0; s < sorts(); ++s) {
      std::vector<int> pre(incl.cod->card[s], -1);
      for (int e = 0; e < incl.dom->card[s]; ++e) {
        int& slot = pre[incl(s, e)];
        slot      = slot == -1 ? e : -2;
      }
      for (int t = 0; t < f.dom->card[s]; ++t) {
        int e = pre[f(s, t)];
        if (e < 0) {
          return std::nullopt;
        }
        map[off + t] = e;
      }
      off += f.dom->card[s];
    }
    if (!preserves_structure(*f.dom, *incl.dom, map)) {
      return std::nullopt;
    }
    return Morphism{f.dom, incl.dom, std::move(map)};
  }

  void Category::for_each_hom(ObjRef const&                                       x,
                              ObjRef const&                                       y,
                              std::function<bool(std::vector<int> const&)> const& fn) const {
    Object const&    dom = *x;
    Object const&    cod = *y;
    std::vector<int> map(dom.total_size(), 0);
    bool             stop = false;

    switch (kind()) {
      case Kind::fin_set: {
        int const n = dom.card[0];
        int const m = cod.card[0];
        if (n > 0 && m == 0) {
          return;
        }
        while (true) {
          if (!fn(map)) {
            return;
          }
          int i = 0;
          while (i < n && ++map[i] == m) {
            map[i++] = 0;
          }
          if (i == n) {
            return;
          }
        }
      }
      case Kind::rel_set:
      case Kind::acyclic_rel: {
        int const n = dom.card[0];
        int const m = cod.card[0];
        auto      rec = [&](auto&& self, int i) -> void {
          if (stop) {
            return;
          }
          if (i == n) {
            stop = !fn(map);
            return;
          }
          for (int v = 0; v < m && !stop; ++v) {
            if (dom.related(i, i) && !cod.related(v, v)) {
              continue;
            }
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
              if (dom.related(i, j) && !cod.related(v, map[j])) {
                ok = false;
              } else if (dom.related(j, i) && !cod.related(map[j], v)) {
                ok = false;
              }
            }
            if (ok) {
              map[i] = v;
              self(self, i + 1);
            }
          }
        };
        rec(rec, 0);
        return;
      }
      case Kind::fin_graph: {
        int const nv = dom.card[0];
        int const ne = dom.card[1];
        int const mv = cod.card[0];
        int const me = cod.card[1];
        auto      edges = [&](auto&& self, int e) -> void {
          if (stop) {
            return;
          }
          if (e == ne) {
            stop = !fn(map);
            return;
          }
          int s = map[dom.src[e]];
          int t = map[dom.tgt[e]];
          for (int f = 0; f < me && !stop; ++f) {
            if (cod.src[f] == s && cod.tgt[f] == t) {
              map[nv + e] = f;
              self(self, e + 1);
            }
          }
        };
        auto vertices = [&](auto&& self, int v) -> void {
          if (stop) {
            return;
          }
          if (v == nv) {
            edges(edges, 0);
            return;
          }
          for (int w = 0; w < mv && !stop; ++w) {
            map[v] = w;
            self(self, v + 1);
          }
        };
        vertices(vertices, 0);
        return;
      }
    }
  }

  std::vector<Morphism> Category::homs(ObjRef const& x, ObjRef const& y) const {
    std::vector<Morphism> result;
    for_each_hom(x, y, [&](std::vector<int> const& map) {
      result.push_back(Morphism{x, y, map});
      return true;
    });
    return result;
  }

  std::vector<Morphism> Category::automorphisms(ObjRef const& x) const {
    std::vector<Morphism> result;
    for_each_hom(x, x, [&](std::vector<int> const& map) {
      Morphism h{x, x, map};
      if (is_iso(h)) {
        result.push_back(std::move(h));
      }
      return true;
    });
    return result;
  }

  std::vector<Morphism> Category::homs_up_to_domain_aut(ObjRef const& x,
                                                        ObjRef const& y) const {
    auto                  auts = automorphisms(x);
    std::vector<Morphism> result;
    std::vector<int>      moved;
    for_each_hom(x, y, [&](std::vector<int> const& map) {
      for (auto const& sigma : auts) {
        moved.resize(map.size());
        for (std::size_t i = 0; i < map.size(); ++i) {
          moved[i] = map[sigma.map[i] + (i < static_cast<std::size_t>(x->card[0])
                                             ? 0
                                             : x->card[0])];
        }
        if (moved < map) {
          return true;
        }
      }
      result.push_back(Morphism{x, y, map});
      return true;
    });
    return result;
  }

  std::optional<Morphism> Category::find_iso(ObjRef const& x, ObjRef const& y) const {
    if (x->card != y->card || x->kind != y->kind) {
      return std::nullopt;
    }
    std::optional<Morphism> result;
    for_each_hom(x, y, [&](std::vector<int> const& map) {
      Morphism h{x, y, map};
      if (is_iso(h)) {
        result = std::move(h);
        return false;
      }
      return true;
    });
    return result;
  }

}  // namespace adh
