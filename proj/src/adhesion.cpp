#include "adhesive/adhesion.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "adhesive/universal.hpp"

namespace adh {

  using nlohmann::json;

  namespace {

    Morphism must(std::optional<Morphism> m, char const* what) {
      if (!m) {
        throw Error(ErrorKind::precondition_unmet, std::string("no induced map: ") + what);
      }
      return std::move(*m);
    }

    // In the set-like instances, pulling a commuting square back along d
    // yields a pushout iff, for every x in D', the fibre of the bottom
    // square over d(x) is connected (one class of A + B over it) and every
    // related pair x R y lies over a related pair in the image of A or B.
    // Both conditions only depend on the image of d, so they are tabulated
    // once per square.
    struct FibreTable {
      std::vector<std::vector<bool>> ok;  // per sort, per element of D
      std::vector<std::uint64_t>     rel_image;

      bool probe_ok(Morphism const& d) const {
        Object const& t = *d.dom;
        for (std::size_t s = 0; s < ok.size(); ++s) {
          for (int x = 0; x < t.card[s]; ++x) {
            if (!ok[s][d(static_cast<int>(s), x)]) {
              return false;
            }
          }
        }
        if (!rel_image.empty()) {
          for (int x = 0; x < t.card[0]; ++x) {
            for (int y = 0; y < t.card[0]; ++y) {
              if (t.related(x, y) && !((rel_image[d(x)] >> d(y)) & 1U)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      // True if no morphism at all into D can fail.
      bool all_ok(Object const& target) const {
        for (auto const& sort : ok) {
          if (std::find(sort.begin(), sort.end(), false) != sort.end()) {
            return false;
          }
        }
        for (std::size_t u = 0; u < rel_image.size(); ++u) {
          if ((target.rel[u] & ~rel_image[u]) != 0) {
            return false;
          }
        }
        return true;
      }
    };

    std::optional<FibreTable> fibre_table(Category const& cat, Square const& sq) {
      if (cat.kind() == Kind::acyclic_rel) {
        return std::nullopt;
      }
      Object const& a = *sq.A();
      Object const& b = *sq.B();
      Object const& c = *sq.C();
      Object const& d = *sq.D();
      FibreTable    table;
      for (int s = 0; s < cat.sorts(); ++s) {
        int const        na = a.card[s];
        int const        nb = b.card[s];
        std::vector<int> parent(na + nb);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
          while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
          }
          return x;
        };
        for (int k = 0; k < c.card[s]; ++k) {
          parent[find(sq.m(s, k))] = find(na + sq.f(s, k));
        }
        std::vector<std::set<int>> classes(d.card[s]);
        for (int i = 0; i < na; ++i) {
          classes[sq.g(s, i)].insert(find(i));
        }
        for (int i = 0; i < nb; ++i) {
          classes[sq.n(s, i)].insert(find(na + i));
        }
        std::vector<bool> ok(d.card[s]);
        for (int y = 0; y < d.card[s]; ++y) {
          ok[y] = classes[y].size() == 1;
        }
        table.ok.push_back(std::move(ok));
      }
      if (cat.kind() == Kind::rel_set) {
        table.rel_image.assign(d.card[0], 0);
        for (auto const* leg : {&sq.g, &sq.n}) {
          Object const& src = *leg->dom;
          for (int i = 0; i < src.card[0]; ++i) {
            for (int j = 0; j < src.card[0]; ++j) {
              if (src.related(i, j)) {
                table.rel_image[(*leg)(i)] |= std::uint64_t{1} << (*leg)(j);
              }
            }
          }
        }
      }
      return table;
    }

    json square_json(Category const& cat, Square const& sq) {
      return square_diagram(cat, sq).to_json();
    }

    Witness unstable_witness(Category const& cat, Square const& sq, Morphism const& d, int bound) {
      Diagram probe(cat);
      probe.add("D'", d.dom);
      probe.add("D", d.cod);
      probe.add("d", "D'", "D", d);
      return failed("is_stable_pushout",
                    "pullback along the probe is not a pushout",
                    json{{"square", square_json(cat, sq)}, {"probe", probe.to_json()}},
                    bound);
    }

    // First probe (canonical order) whose pulled-back square is not a
    // pushout, if any.
    std::optional<Morphism> first_unstable_probe(Category const& cat,
                                                 Square const&   sq,
                                                 std::vector<Morphism> const* probes,
                                                 int             bound) {
      auto table = fibre_table(cat, sq);
      if (table && table->all_ok(*sq.D())) {
        return std::nullopt;
      }
      auto bad = [&](Morphism const& d) {
        return table ? !table->probe_ok(d) : !pulled_back_is_pushout(cat, sq, d);
      };
      if (probes != nullptr) {
        for (auto const& d : *probes) {
          if (bad(d)) {
            return d;
          }
        }
        return std::nullopt;
      }
      for (auto const& t : cat.objects(bound)) {
        for (auto const& d : cat.homs_up_to_domain_aut(t, sq.D())) {
          if (bad(d)) {
            return d;
          }
        }
      }
      return std::nullopt;
    }

    void require_pushout(Category const& cat, Square const& sq) {
      if (!is_pushout(cat, sq).pass) {
        throw Error(ErrorKind::not_a_pushout, "square is not a pushout");
      }
    }

    void append_ints(std::string& key, std::vector<int> const& v) {
      for (int x : v) {
        key += std::to_string(x);
        key += ',';
      }
      key += ';';
    }

    // Canonical form of p: P -> C up to isomorphism of P over C.
    std::string slice_key(Category const& cat, Morphism const& p) {
      Object const&                 x = *p.dom;
      std::vector<std::vector<int>> perms(cat.sorts());
      for (int s = 0; s < cat.sorts(); ++s) {
        perms[s].resize(x.card[s]);
        std::iota(perms[s].begin(), perms[s].end(), 0);
      }
      std::vector<int> best;
      auto             encode = [&] {
        std::vector<int> code;
        for (int s = 0; s < cat.sorts(); ++s) {
          std::vector<int> img(x.card[s]);
          for (int i = 0; i < x.card[s]; ++i) {
            img[perms[s][i]] = p(s, i);
          }
          code.push_back(x.card[s]);
          code.insert(code.end(), img.begin(), img.end());
        }
        if (cat.kind() == Kind::fin_graph) {
          std::vector<int> ends(2 * x.card[1]);
          for (int e = 0; e < x.card[1]; ++e) {
            ends[2 * perms[1][e]]     = perms[0][x.src[e]];
            ends[2 * perms[1][e] + 1] = perms[0][x.tgt[e]];
          }
          code.insert(code.end(), ends.begin(), ends.end());
        } else if (!x.rel.empty()) {
          int const        n = x.card[0];
          std::vector<int> cells(n * n, 0);
          for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
              cells[perms[0][i] * n + perms[0][j]] = x.related(i, j) ? 1 : 0;
            }
          }
          code.insert(code.end(), cells.begin(), cells.end());
        }
        if (best.empty() || code < best) {
          best = std::move(code);
        }
      };
      // odometer over the product of per-sort permutations
      while (true) {
        encode();
        int s = 0;
        while (s < cat.sorts() && !std::next_permutation(perms[s].begin(), perms[s].end())) {
          ++s;
        }
        if (s == cat.sorts()) {
          break;
        }
      }
      std::string key;
      append_ints(key, best);
      return key;
    }

    json flag_json(Flag const& flag) {
      json j;
      j["verdict"] = flag.verified ? "verified" : "refuted";
      j["checked"] = flag.checked;
      if (!flag.verified) {
        j["witness"] = to_json(flag.witness);
      }
      return j;
    }

  }  // namespace

  Cube pullback_cube(Category const& cat, Square const& bottom, Morphism const& d) {
    if (!same_object(d.cod, bottom.D())) {
      throw Error(ErrorKind::type_mismatch, "probe does not land in the pushout corner");
    }
    auto pa = cat.pullback(bottom.g, d);
    auto pb = cat.pullback(bottom.n, d);
    auto pc = cat.pullback(bottom.m, pa.first);
    auto fp = must(cat.lift_to_pullback(pb,
                                        cat.compose(bottom.f, pc.first),
                                        cat.compose(pa.second, pc.second)),
                   "f'");
    Square top{pc.second, std::move(fp), pa.second, pb.second};
    return Cube{bottom, std::move(top), pa.first, pb.first, pc.first, d};
  }

  bool pulled_back_is_pushout(Category const& cat, Square const& bottom, Morphism const& d) {
    if (auto table = fibre_table(cat, bottom)) {
      return table->probe_ok(d);
    }
    return is_pushout(cat, pullback_cube(cat, bottom, d).top).pass;
  }

  Witness is_stable_pushout(Category const& cat, Square const& sq, ProbeSet const& probes) {
    require_pushout(cat, sq);
    if (auto d = first_unstable_probe(cat, sq, &probes.probes, probes.bound)) {
      return unstable_witness(cat, sq, *d, probes.bound);
    }
    return passed("is_stable_pushout", probes.bound);
  }

  Witness is_stable_pushout(Category const& cat, Square const& sq, int bound) {
    require_pushout(cat, sq);
    if (auto d = first_unstable_probe(cat, sq, nullptr, bound)) {
      return unstable_witness(cat, sq, *d, bound);
    }
    return passed("is_stable_pushout", bound);
  }

  Witness check_cube(Category const& cat, Cube const& cube) {
    if (!commutes(cat, cube)) {
      throw Error(ErrorKind::precondition_unmet, "cube does not commute");
    }
    if (!is_pullback(cat, cube.left_face()).pass || !is_pullback(cat, cube.back_face()).pass) {
      throw Error(ErrorKind::precondition_unmet, "left and back faces must be pullbacks");
    }
    bool const top   = is_pushout(cat, cube.top).pass;
    bool const front = is_pullback(cat, cube.front_face()).pass;
    bool const right = is_pullback(cat, cube.right_face()).pass;
    if (top == (front && right)) {
      return passed("is_van_kampen");
    }
    json data{{"cube", cube_diagram(cat, cube).to_json()},
              {"top_pushout", top},
              {"front_pullback", front},
              {"right_pullback", right}};
    return failed("is_van_kampen",
                  top ? "top is a pushout but a front/right face is not a pullback"
                      : "front and right faces are pullbacks but the top is not a pushout",
                  data);
  }

  Witness is_van_kampen(Category const& cat, Square const& sq, int bound) {
    require_pushout(cat, sq);
    if (auto d = first_unstable_probe(cat, sq, nullptr, bound)) {
      auto w  = check_cube(cat, pullback_cube(cat, sq, *d));
      w.bound = bound;
      return w;
    }
    // Cubes with pullback left and back faces: C' is both pullback(m, a)
    // and pullback(f, b), so a and b are paired through isomorphisms of
    // these objects over C.
    struct Side {
      Morphism     b;
      PullbackCone over;  // first: C' -> C, second: C' -> B'
    };
    std::map<std::string, std::vector<Side>> sides;
    for (auto const& bp : cat.objects(bound)) {
      for (auto const& b : cat.homs_up_to_domain_aut(bp, sq.B())) {
        auto over = cat.pullback(sq.f, b);
        if (cat.carrier_size(*over.apex) > bound) {
          continue;
        }
        auto key = slice_key(cat, over.first);
        sides[key].push_back(Side{b, std::move(over)});
      }
    }
    for (auto const& ap : cat.objects(bound)) {
      for (auto const& a : cat.homs_up_to_domain_aut(ap, sq.A())) {
        auto pc = cat.pullback(sq.m, a);
        auto it = sides.find(slice_key(cat, pc.first));
        if (it == sides.end()) {
          continue;
        }
        auto const& c  = pc.first;
        auto const& mp = pc.second;
        // the pushout of the mono m' has carrier |A'| + |B'| - |C'| before
        // reflection, so larger B' cannot give a top inside the bound
        int const room = bound - cat.carrier_size(*ap) + cat.carrier_size(*pc.apex);
        bool const exact_size = cat.kind() != Kind::acyclic_rel;
        for (auto const& side : it->second) {
          if (exact_size && cat.carrier_size(*side.b.dom) > room) {
            break;
          }
          for (auto const& phi : cat.homs(pc.apex, side.over.apex)) {
            if (!cat.is_iso(phi) || cat.compose(side.over.first, phi).map != c.map) {
              continue;
            }
            auto fp  = cat.compose(side.over.second, phi);
            auto top = cat.pushout(mp, fp);
            if (cat.carrier_size(*top.apex) > bound) {
              continue;
            }
            auto d   = must(cat.lift_from_pushout(top, cat.compose(sq.g, a), cat.compose(sq.n, side.b)), "d");
            Cube cube{sq, Square{mp, fp, top.first, top.second}, a, side.b, c, d};
            if (is_pullback(cat, cube.front_face()).pass && is_pullback(cat, cube.right_face()).pass) {
              continue;
            }
            auto w  = check_cube(cat, cube);
            w.bound = bound;
            return w;
          }
        }
      }
    }
    return passed("is_van_kampen", bound);
  }

  std::string mono_key(Category const& cat, Morphism const& m) {
    std::string key(cat.name());
    key += ':';
    Object const& a = *m.cod;
    Object const& c = *m.dom;
    append_ints(key, a.card);
    append_ints(key, c.card);
    if (!cat.is_mono(m)) {
      key += "raw:";
      append_ints(key, m.map);
      append_ints(key, c.src);
      append_ints(key, c.tgt);
      for (auto row : c.rel) {
        key += std::to_string(row) + ",";
      }
      key += ';';
      append_ints(key, a.src);
      append_ints(key, a.tgt);
      for (auto row : a.rel) {
        key += std::to_string(row) + ",";
      }
      return key;
    }
    int const         n = a.card[0];
    std::vector<bool> in_image(n, false);
    for (int i = 0; i < c.card[0]; ++i) {
      in_image[m(0, i)] = true;
    }
    std::vector<bool> edge_in_image;
    if (cat.kind() == Kind::fin_graph) {
      edge_in_image.assign(a.card[1], false);
      for (int e = 0; e < c.card[1]; ++e) {
        edge_in_image[m(1, e)] = true;
      }
    }
    // relation of the domain, transported into the codomain's indexing
    std::vector<std::uint64_t> dom_rel(n, 0);
    if (!c.rel.empty()) {
      for (int i = 0; i < c.card[0]; ++i) {
        for (int j = 0; j < c.card[0]; ++j) {
          if (c.related(i, j)) {
            dom_rel[m(i)] |= std::uint64_t{1} << m(j);
          }
        }
      }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
      std::vector<int> code;
      for (int i = 0; i < n; ++i) {
        code.push_back(0);
      }
      for (int i = 0; i < n; ++i) {
        code[perm[i]] = in_image[i] ? 1 : 0;
      }
      if (cat.kind() == Kind::fin_graph) {
        std::vector<std::array<int, 3>> edges;
        for (int e = 0; e < a.card[1]; ++e) {
          edges.push_back({perm[a.src[e]], perm[a.tgt[e]], edge_in_image[e] ? 1 : 0});
        }
        std::sort(edges.begin(), edges.end());
        for (auto const& e : edges) {
          code.insert(code.end(), e.begin(), e.end());
        }
      } else if (!a.rel.empty()) {
        std::vector<int> cells(n * n, 0);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            cells[perm[i] * n + perm[j]] = (a.related(i, j) ? 1 : 0) + (((dom_rel[i] >> j) & 1U) ? 2 : 0);
          }
        }
        code.insert(code.end(), cells.begin(), cells.end());
      }
      if (best.empty() || code < best) {
        best = std::move(code);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    append_ints(key, best);
    return key;
  }

  Witness AdhesionChecker::pre_adhesive(Morphism const& m) {
    auto key = mono_key(_cat, m);
    if (auto it = _pre.find(key); it != _pre.end()) {
      return it->second;
    }
    Witness verdict = passed("is_pre_adhesive", _bound);
    for (auto const& b : _cat.objects(_bound)) {
      for (auto const& f : homs_up_to_codomain_aut(_cat, m.dom, b)) {
        auto   po = _cat.pushout(m, f);
        Square sq{m, f, po.first, po.second};
        auto   w = is_pullback(_cat, sq);
        if (w.pass) {
          if (auto d = first_unstable_probe(_cat, sq, nullptr, _bound)) {
            w = unstable_witness(_cat, sq, *d, _bound);
          }
        }
        if (!w.pass) {
          w.bound = _bound;
          verdict = std::move(w);
          break;
        }
      }
      if (!verdict.pass) {
        break;
      }
    }
    _pre.emplace(std::move(key), verdict);
    return verdict;
  }

  Witness AdhesionChecker::adhesive(Morphism const& m) {
    auto w = pre_adhesive(m);
    if (!w.pass) {
      return w;
    }
    for (auto const& ap : _cat.objects(_bound)) {
      for (auto const& h : _cat.homs_up_to_domain_aut(ap, m.cod)) {
        auto pb = _cat.pullback(m, h);
        auto inner = pre_adhesive(pb.second);
        if (!inner.pass) {
          Diagram d(_cat);
          d.add("A", m.cod);
          d.add("A'", ap);
          d.add("h", "A'", "A", h);
          inner.data["pulled_back_along"] = d.to_json();
          return inner;
        }
      }
    }
    return passed("is_adhesive_morphism", _bound);
  }

  Witness AdhesionChecker::van_kampen(Morphism const& m) {
    for (auto const& b : _cat.objects(_bound)) {
      for (auto const& f : homs_up_to_codomain_aut(_cat, m.dom, b)) {
        auto   po = _cat.pushout(m, f);
        Square sq{m, f, po.first, po.second};
        auto   w = is_van_kampen(_cat, sq, _bound);
        if (!w.pass) {
          return w;
        }
      }
    }
    return passed("is_van_kampen", _bound);
  }

  std::optional<Witness> first_non_van_kampen(Category const& cat, int bound, bool regular_only) {
    std::vector<Morphism> monos;
    for (auto const& m : monos_up_to_iso(cat, bound)) {
      if (!regular_only || is_regular_mono(cat, m).pass) {
        monos.push_back(m);
      }
    }
    auto objects = cat.objects(bound);
    for (int total = 0; total <= 2 * bound; ++total) {
      for (auto const& m : monos) {
        for (auto const& b : objects) {
          if (cat.carrier_size(*m.cod) + cat.carrier_size(*b) != total) {
            continue;
          }
          for (auto const& f : homs_up_to_codomain_aut(cat, m.dom, b)) {
            auto   po = cat.pushout(m, f);
            Square sq{m, f, po.first, po.second};
            auto   w = is_van_kampen(cat, sq, bound);
            if (!w.pass) {
              return w;
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  Witness is_pre_adhesive(Category const& cat, Morphism const& m, int bound) {
    return AdhesionChecker(cat, bound).pre_adhesive(m);
  }

  Witness is_adhesive_morphism(Category const& cat, Morphism const& m, int bound) {
    return AdhesionChecker(cat, bound).adhesive(m);
  }

  std::vector<Morphism> homs_up_to_codomain_aut(Category const& cat,
                                                ObjRef const&   x,
                                                ObjRef const&   y) {
    auto                  auts = cat.automorphisms(y);
    std::vector<Morphism> result;
    cat.for_each_hom(x, y, [&](std::vector<int> const& map) {
      Morphism f{x, y, map};
      for (auto const& a : auts) {
        if (cat.compose(a, f).map < map) {
          return true;
        }
      }
      result.push_back(std::move(f));
      return true;
    });
    return result;
  }

  std::vector<Morphism> monos_up_to_iso(Category const& cat, int bound) {
    std::vector<Morphism> result;
    std::set<std::string> seen;
    for (auto const& a : cat.objects(bound)) {
      for (auto const& c : cat.objects(bound)) {
        if (cat.carrier_size(*c) > cat.carrier_size(*a)) {
          continue;
        }
        for (auto const& m : cat.homs_up_to_domain_aut(c, a)) {
          if (cat.is_mono(m) && seen.insert(mono_key(cat, m)).second) {
            result.push_back(m);
          }
        }
      }
    }
    return result;
  }

  json Classification::to_json() const {
    json j;
    j["category"] = category;
    j["bound"]    = bound;
    j["flags"]    = {{"adhesive", flag_json(adhesive)},
                     {"rm_adhesive", flag_json(rm_adhesive)},
                     {"q_adhesive", flag_json(q_adhesive)}};
    return j;
  }

  Classification classify(Category const& cat, int bound) {
    if (bound < 1) {
      throw Error(ErrorKind::precondition_unmet, "bound must be at least 1");
    }
    Classification result;
    result.category = std::string(cat.name());
    result.bound    = bound;
    AdhesionChecker checker(cat, bound);
    auto            monos = monos_up_to_iso(cat, bound);

    auto tag = [&](Witness w, Morphism const& m, char const* flag) {
      w.data["mono"] = morphism_diagram(cat, m).to_json();
      w.data["flag"] = flag;
      w.bound        = bound;
      return w;
    };

    for (auto const& m : monos) {
      if (!is_regular_mono(cat, m).pass) {
        continue;
      }
      ++result.q_adhesive.checked;
      auto w = checker.adhesive(m);
      if (!w.pass) {
        result.q_adhesive.verified = false;
        result.q_adhesive.witness  = tag(std::move(w), m, "q_adhesive");
        break;
      }
    }
    for (auto const& m : monos) {
      ++result.adhesive.checked;
      auto w = checker.adhesive(m);
      if (!w.pass) {
        result.adhesive.verified = false;
        result.adhesive.witness  = tag(std::move(w), m, "adhesive");
        break;
      }
    }

    std::optional<Witness> union_witness;
    for (auto const& x : cat.objects(bound)) {
      std::vector<Subobject> regular;
      for (auto const& c : cat.objects(bound)) {
        for (auto const& m : cat.homs(c, x)) {
          if (!cat.is_mono(m) || !is_regular_mono(cat, m).pass) {
            continue;
          }
          auto s = subobject(cat, m);
          if (std::find(regular.begin(), regular.end(), s) == regular.end()) {
            regular.push_back(std::move(s));
          }
        }
      }
      for (std::size_t i = 0; i < regular.size() && !union_witness; ++i) {
        for (std::size_t j = i + 1; j < regular.size() && !union_witness; ++j) {
          ++result.rm_adhesive.checked;
          auto u = union_effective(cat, regular[i], regular[j]);
          Diagram pair(cat);
          pair.add("X", x);
          pair.add("A1", regular[i].domain());
          pair.add("A2", regular[j].domain());
          pair.add("m1", "A1", "X", regular[i].mono);
          pair.add("m2", "A2", "X", regular[j].mono);
          if (!u.witness.pass) {
            auto w = u.witness;
            w.data["flag"] = "rm_adhesive";
            w.bound        = bound;
            union_witness  = std::move(w);
            break;
          }
          auto w = is_regular_mono(cat, u.induced);
          if (!w.pass) {
            w.reason       = "union of regular subobjects is not regular: " + w.reason;
            w.data["subobjects"] = pair.to_json();
            w.data["flag"] = "rm_adhesive";
            w.bound        = bound;
            union_witness  = std::move(w);
          }
        }
      }
      if (union_witness) {
        break;
      }
    }
    if (union_witness) {
      result.rm_adhesive.verified = false;
      result.rm_adhesive.witness  = std::move(*union_witness);
    } else if (!result.q_adhesive.verified) {
      result.rm_adhesive.verified = false;
      result.rm_adhesive.witness  = result.q_adhesive.witness;
      result.rm_adhesive.witness.data["flag"] = "rm_adhesive";
    }
    return result;
  }

  Diagram cancellation_diagram(Category const& cat, CancellationConfig const& k) {
    Diagram d(cat);
    d.add("A0", k.pushout.C());
    d.add("A1", k.pushout.A());
    d.add("A2", k.pushout.B());
    d.add("A", k.pushout.D());
    d.add("A1'", k.p1.dom);
    d.add("A2'", k.p2.dom);
    d.add("A'", k.p.dom);
    d.add("B'", k.q.dom);
    d.add("B", k.q.cod);
    d.add("b1", "A0", "A1", k.pushout.m);
    d.add("b2", "A0", "A2", k.pushout.f);
    d.add("a1", "A1", "A", k.pushout.g);
    d.add("a2", "A2", "A", k.pushout.n);
    d.add("p1", "A1'", "A1", k.p1);
    d.add("p2", "A2'", "A2", k.p2);
    d.add("a1'", "A1'", "A'", k.a1_prime);
    d.add("a2'", "A2'", "A'", k.a2_prime);
    d.add("p", "A'", "A", k.p);
    d.add("f'", "A'", "B'", k.f_prime);
    d.add("f", "A", "B", k.f);
    d.add("q", "B'", "B", k.q);
    return d;
  }

  CancellationConfig cancellation_from(Diagram const& d) {
    return CancellationConfig{
        Square{d.morphism("b1"), d.morphism("b2"), d.morphism("a1"), d.morphism("a2")},
        d.morphism("p1"),
        d.morphism("p2"),
        d.morphism("a1'"),
        d.morphism("a2'"),
        d.morphism("p"),
        d.morphism("f'"),
        d.morphism("f"),
        d.morphism("q")};
  }

  Witness cancellation_lemma_check(Category const& cat, CancellationConfig const& k, int bound) {
    auto unmet = [](std::string const& msg) { throw Error(ErrorKind::precondition_unmet, msg); };
    if (!well_typed(k.pushout) || !commutes(cat, k.pushout) || !is_pushout(cat, k.pushout).pass) {
      unmet("left square is not a pushout");
    }
    if (!is_stable_pushout(cat, k.pushout, bound).pass) {
      unmet("left square is not a stable pushout");
    }
    Morphism const* legs[2]   = {&k.pushout.g, &k.pushout.n};
    Morphism const* ps[2]     = {&k.p1, &k.p2};
    Morphism const* primes[2] = {&k.a1_prime, &k.a2_prime};
    for (int i = 0; i < 2; ++i) {
      Square left{*ps[i], *primes[i], *legs[i], k.p};
      Square outer{*ps[i], cat.compose(k.f_prime, *primes[i]), cat.compose(k.f, *legs[i]), k.q};
      for (auto const* sq : {&left, &outer}) {
        if (!well_typed(*sq) || !commutes(cat, *sq)) {
          unmet("rectangle does not commute");
        }
        if (!is_pullback(cat, *sq).pass) {
          unmet(sq == &left ? "left square of a rectangle is not a pullback"
                            : "composite rectangle is not a pullback");
        }
      }
    }
    Square right{k.p, k.f_prime, k.f, k.q};
    if (!well_typed(right) || !commutes(cat, right)) {
      unmet("right square does not commute");
    }
    auto w = is_pullback(cat, right);
    if (w.pass) {
      return passed("cancellation_lemma", bound);
    }
    return failed("cancellation_lemma", "right square is not a pullback: " + w.reason,
                  json{{"config", cancellation_diagram(cat, k).to_json()}}, bound);
  }

}  // namespace adh
