#include "adhesive/dpo.hpp"

#include <algorithm>

#include "adhesive/replay.hpp"
#include "adhesive/serialize.hpp"
#include "adhesive/universal.hpp"

namespace adh {

  using nlohmann::json;

  namespace {

    void require_set_like(Category const& cat) {
      if (cat.kind() != Kind::fin_set && cat.kind() != Kind::fin_graph) {
        throw Error(ErrorKind::type_mismatch, "rewriting is implemented for finset and fingraph");
      }
    }

    std::string element(Object const& x, int sort, int i) {
      return (sort == 0 ? "vertex " : "edge ") + x.label(sort, i);
    }

  }  // namespace

  Rule make_rule(Category const& cat, Morphism l, Morphism r) {
    require_set_like(cat);
    if (!same_object(l.dom, r.dom) && !l.dom->same_structure(*r.dom)) {
      throw Error(ErrorKind::precondition_unmet, "rule legs have different domains");
    }
    if (!cat.is_mono(l)) {
      throw Error(ErrorKind::precondition_unmet, "left leg of a rule must be mono");
    }
    return Rule{std::move(l), std::move(r)};
  }

  ComplementResult pushout_complement(Category const& cat, Morphism const& l, Morphism const& match) {
    require_set_like(cat);
    require_composable(l, match);
    if (!cat.is_mono(l)) {
      throw Error(ErrorKind::precondition_unmet, "pushout complement needs l mono");
    }
    Object const& L = *l.cod;
    Object const& G = *match.cod;
    int const     sorts = cat.sorts();

    // Elements of G hit by L outside l(K) are deleted.
    std::vector<std::vector<bool>> kept(sorts), in_k(sorts);
    for (int s = 0; s < sorts; ++s) {
      in_k[s].assign(L.card[s], false);
      for (int x = 0; x < l.dom->card[s]; ++x) {
        in_k[s][l(s, x)] = true;
      }
      kept[s].assign(G.card[s], true);
      for (int x = 0; x < L.card[s]; ++x) {
        if (!in_k[s][x]) {
          kept[s][match(s, x)] = false;
        }
      }
      for (int x = 0; x < L.card[s]; ++x) {
        for (int y = x + 1; y < L.card[s]; ++y) {
          if (match(s, x) == match(s, y) && !(in_k[s][x] && in_k[s][y])) {
            return {std::nullopt, "identification: " + element(L, s, x) + " and " + element(L, s, y) +
                                      " of L meet in G and one is deleted"};
          }
        }
      }
    }
    if (sorts == 2) {
      for (int e = 0; e < G.card[1]; ++e) {
        if (kept[1][e] && (!kept[0][G.src[e]] || !kept[0][G.tgt[e]])) {
          return {std::nullopt, "dangling: " + element(G, 1, e) + " would lose an endpoint"};
        }
      }
    }

    std::vector<std::vector<int>> index(sorts);
    std::vector<int>              d_map;
    for (int s = 0; s < sorts; ++s) {
      index[s].assign(G.card[s], -1);
      int next = 0;
      for (int x = 0; x < G.card[s]; ++x) {
        if (kept[s][x]) {
          index[s][x] = next++;
          d_map.push_back(x);
        }
      }
    }
    ObjRef D;
    if (sorts == 1) {
      D = make_set(static_cast<int>(d_map.size()));
    } else {
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < G.card[1]; ++e) {
        if (kept[1][e]) {
          edges.emplace_back(index[0][G.src[e]], index[0][G.tgt[e]]);
        }
      }
      int nv = static_cast<int>(std::count(kept[0].begin(), kept[0].end(), true));
      D      = make_graph(nv, edges);
    }
    if (G.has_labels()) {
      Object named = *D;
      named.labels.resize(sorts);
      for (int s = 0, at = 0; s < sorts; ++s) {
        for (int x = 0; x < D->card[s]; ++x) {
          named.labels[s].push_back(G.label(s, d_map[at++]));
        }
      }
      D = std::make_shared<Object const>(std::move(named));
    }
    std::vector<int> k_map;
    for (int s = 0; s < sorts; ++s) {
      for (int x = 0; x < l.dom->card[s]; ++x) {
        k_map.push_back(index[s][match(s, l(s, x))]);
      }
    }
    Complement c{D, cat.make_morphism(l.dom, D, k_map), cat.make_morphism(D, match.cod, d_map), {}};
    c.pushout = is_pushout(cat, c.square(l, match));
    if (!c.pushout.pass) {
      return {std::nullopt, "direct construction does not certify as a pushout: " + c.pushout.reason};
    }
    return {std::move(c), ""};
  }

  Witness complement_unique(Category const&   cat,
                            Morphism const&   l,
                            Morphism const&   match,
                            Complement const& c,
                            int               bound) {
    auto const  ml   = cat.compose(match, l);
    auto const& base = *c.D;
    for (auto const& alt : cat.objects(bound)) {
      // A pushout along a mono of finite sets (sortwise) has
      // |G| = |L| - |K| + |D|, so only D's per-sort sizes can occur.
      if (alt->card != base.card) {
        continue;
      }
      auto const k_all = cat.homs(l.dom, alt);
      for (auto const& d2 : cat.homs(alt, match.cod)) {
        for (auto const& k2 : k_all) {
          if (!(cat.compose(d2, k2) == ml)) {
            continue;
          }
          Square sq{l, k2, match, d2};
          if (!is_pushout(cat, sq).pass) {
            continue;
          }
          bool iso_over = false;
          for (auto const& phi : cat.homs(c.D, alt)) {
            if (cat.is_iso(phi) && cat.compose(d2, phi) == c.d && cat.compose(phi, c.k) == k2) {
              iso_over = true;
              break;
            }
          }
          if (!iso_over) {
            return failed("complement_unique", "a second pushout complement is not isomorphic to the first",
                          {{"complement", square_diagram(cat, c.square(l, match)).to_json()},
                           {"alternative", square_diagram(cat, sq).to_json()}},
                          bound);
          }
        }
      }
    }
    return passed("complement_unique", bound);
  }

  Derivation dpo_step(Category const& cat, Rule const& rule, Morphism const& match) {
    Derivation out;
    auto       pc = pushout_complement(cat, rule.l, match);
    if (!pc.complement) {
      out.reason = pc.reason;
      return out;
    }
    auto const& c = *pc.complement;
    auto        po = cat.pushout(c.k, rule.r);
    out.applicable     = true;
    out.left           = c.square(rule.l, match);
    out.right          = Square{c.k, rule.r, po.first, po.second};
    out.left_pushout   = c.pushout;
    out.left_pullback  = is_pullback(cat, out.left);
    out.right_pushout  = is_pushout(cat, out.right);
    out.right_pullback = is_pullback(cat, out.right);
    return out;
  }

  json to_json(Category const& cat, Derivation const& d) {
    if (!d.applicable) {
      return {{"applicable", false}, {"reason", d.reason}};
    }
    auto left  = square_diagram(cat, d.left).to_json();
    auto right = square_diagram(cat, d.right).to_json();
    auto with_square = [](Witness const& w, json const& sq) { return replayable(w, {{"square", sq}}); };
    return {{"applicable", true},
            {"left", left},
            {"right", right},
            {"H", to_json(*d.H())},
            {"witnesses",
             {{"left_pushout", with_square(d.left_pushout, left)},
              {"left_pullback", with_square(d.left_pullback, left)},
              {"right_pushout", with_square(d.right_pushout, right)},
              {"right_pullback", with_square(d.right_pullback, right)}}}};
  }

  Host host_from_json(Category const& cat, Rule const& rule, json const& j) {
    if (!j.is_object() || !j.contains("graph")) {
      throw Error(ErrorKind::parse_error, "host file needs \"graph\"");
    }
    Host h{object_from_json(cat, j.at("graph")), std::nullopt};
    if (j.contains("match")) {
      h.match = morphism_from_json(cat, rule.L(), h.G, j.at("match"));
    }
    return h;
  }

  Rule rule_from_json(json const& j) {
    auto d = Diagram::from_json(j);
    return make_rule(d.category(), d.morphism("l"), d.morphism("r"));
  }

  json to_json(Category const& cat, Rule const& rule) {
    Diagram d(cat);
    d.add("K", rule.K());
    d.add("L", rule.L());
    d.add("R", rule.R());
    d.add("l", "K", "L", rule.l);
    d.add("r", "K", "R", rule.r);
    return d.to_json();
  }

}  // namespace adh
