#include "adhesive/sheaf.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "adhesive/adhesion.hpp"
#include "adhesive/colimit_calculus.hpp"
#include "adhesive/serialize.hpp"
#include "adhesive/universal.hpp"

namespace adh {

  using nlohmann::json;

  namespace {

    constexpr int max_fragment_arrows = 4000;

    // FD against {(x, y) in FA x FB | Fm x = Ff y [, Fg1 x = Fg2 x]}.
    // Returns the failure, if any.
    std::optional<std::string> limit_failure(Presheaf const& F, DeclaredSquare const& sq, bool kernel) {
      int const a = static_cast<int>(F.maps[sq.m].size());
      int const b = static_cast<int>(F.maps[sq.f].size());
      std::set<std::pair<int, int>> limit;
      for (int x = 0; x < a; ++x) {
        if (kernel && F.maps[sq.a2->first][x] != F.maps[sq.a2->second][x]) {
          continue;
        }
        for (int y = 0; y < b; ++y) {
          if (F.maps[sq.m][x] == F.maps[sq.f][y]) {
            limit.emplace(x, y);
          }
        }
      }
      std::set<std::pair<int, int>> image;
      int const                     d = static_cast<int>(F.maps[sq.g].size());
      for (int e = 0; e < d; ++e) {
        if (!image.emplace(F.maps[sq.g][e], F.maps[sq.n][e]).second) {
          return "F(" + sq.name + ".D) -> limit is not injective";
        }
      }
      if (image.size() != limit.size()) {
        return "F(" + sq.name + ".D) -> limit is not surjective";
      }
      return std::nullopt;
    }

    bool jointly_monic(Presheaf const& F, DeclaredSquare const& sq) {
      auto const& fd = F.maps[sq.delta];
      auto const& fm = F.maps[sq.m2];
      std::set<std::pair<int, int>> seen;
      for (std::size_t u = 0; u < fd.size(); ++u) {
        if (!seen.emplace(fd[u], fm[u]).second) {
          return false;
        }
      }
      return true;
    }

    void require_kernel_pairs(DeclaredSquare const& sq) {
      if (!sq.has_kernel_pairs()) {
        throw Error(ErrorKind::missing_kernel_pair, "square " + sq.name + " lacks a kernel pair");
      }
    }

    json context(Site const& site, Presheaf const& F) {
      return {{"site", site.to_json()}, {"presheaf", to_json(site.presentation(), F)}};
    }

    void add_family(std::vector<CoveringFamily>& out, CoveringFamily c) {
      std::sort(c.members.begin(), c.members.end());
      c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
      for (auto const& e : out) {
        if (e.target == c.target && e.members == c.members) {
          return;
        }
      }
      out.push_back(std::move(c));
    }

    // {u, v} into T plus its pullbacks along non-identity arrows into T.
    void basic_and_pullbacks(Presentation const&           p,
                             std::vector<CoveringFamily>&  out,
                             std::vector<int> const&       legs,
                             std::string const&            origin,
                             std::string const&            square) {
      int const t = p.tgt(legs.front());
      add_family(out, {t, legs, origin, square});
      for (int h = 0; h < p.arrow_count(); ++h) {
        if (p.tgt(h) != t || p.is_identity(h)) {
          continue;
        }
        std::vector<int> pulled;
        for (int u : legs) {
          auto pb = p.pullback(u, h);
          if (!pb) {
            break;
          }
          pulled.push_back(pb->second);
        }
        if (pulled.size() == legs.size()) {
          add_family(out, {p.src(h), pulled, "pullback-of-basic", square});
        }
      }
    }

    std::vector<CoveringFamily> families_of(Site const& site, DeclaredSquare const& sq, bool k) {
      std::vector<CoveringFamily> out;
      auto const&                 p = site.presentation();
      basic_and_pullbacks(p, out, {sq.g, sq.n}, "j-basic", sq.name);
      if (k) {
        require_kernel_pairs(sq);
        basic_and_pullbacks(p, out, {sq.m2, sq.delta}, "k-basic", sq.name);
      }
      return out;
    }

    std::optional<std::pair<int, int>> separation_failure(Presheaf const& F, CoveringFamily const& c) {
      std::map<std::vector<int>, int> seen;
      for (int e = 0; e < F.size(c.target); ++e) {
        std::vector<int> key;
        for (int u : c.members) {
          key.push_back(F.maps[u][e]);
        }
        auto [it, fresh] = seen.emplace(std::move(key), e);
        if (!fresh) {
          return std::make_pair(it->second, e);
        }
      }
      return std::nullopt;
    }

  }  // namespace

  Site::Site(Presentation p, std::vector<SquareSpec> const& squares, std::optional<std::vector<int>> admissible_arrows)
      : _p(std::move(p)), _admissible(std::move(admissible_arrows)) {
    for (auto const& s : squares) {
      for (int a : {s.m, s.f, s.g, s.n}) {
        if (a < 0 || a >= _p.arrow_count()) {
          throw Error(ErrorKind::invalid_square, "square " + s.name + " names an unknown arrow");
        }
      }
      if (!_p.commutes(s.m, s.f, s.g, s.n)) {
        throw Error(ErrorKind::invalid_square, "square " + s.name + " does not commute");
      }
      if (!_p.is_pushout(s.m, s.f, s.g, s.n)) {
        throw Error(ErrorKind::invalid_square, "square " + s.name + " is not a pushout");
      }
      if (!admissible(s.m)) {
        throw Error(ErrorKind::not_admissible, "square " + s.name + ": m is not admissible");
      }
      DeclaredSquare sq;
      sq.name = s.name;
      sq.m    = s.m;
      sq.f    = s.f;
      sq.g    = s.g;
      sq.n    = s.n;
      sq.a2 = _p.pullback(s.g, s.g);
      sq.c2 = _p.pullback(s.f, s.f);
      if (sq.has_kernel_pairs()) {
        int a     = _p.tgt(s.m);
        sq.delta  = _p.lift(*sq.a2, _p.identity(a), _p.identity(a)).value();
        sq.m2     = _p.lift(*sq.a2, _p.compose(s.m, sq.c2->first), _p.compose(s.m, sq.c2->second)).value();
      }
      _squares.push_back(std::move(sq));
    }
  }

  bool Site::admissible(int m) const {
    if (_admissible && std::find(_admissible->begin(), _admissible->end(), m) == _admissible->end()) {
      return false;
    }
    return _p.is_mono(m);
  }

  Site Site::from_json(json const& j) {
    auto                    p = Presentation::from_json(j);
    std::vector<SquareSpec> specs;
    for (auto const& s : j.value("squares", json::array())) {
      if (!s.contains("m") || !s.contains("f") || !s.contains("g") || !s.contains("n")) {
        throw Error(ErrorKind::parse_error, "square needs m, f, g and n");
      }
      auto arrow = [&](char const* k) { return p.find_arrow(label_of(s.at(k))); };
      specs.push_back({s.value("name", "s" + std::to_string(specs.size())), arrow("m"), arrow("f"), arrow("g"),
                       arrow("n")});
    }
    std::optional<std::vector<int>> adm;
    if (j.contains("admissible")) {
      adm.emplace();
      for (auto const& a : j.at("admissible")) {
        adm->push_back(p.find_arrow(label_of(a)));
      }
    }
    return Site(std::move(p), specs, std::move(adm));
  }

  json Site::to_json() const {
    json j  = _p.to_json();
    json sq = json::array();
    for (auto const& s : _squares) {
      sq.push_back({{"name", s.name},
                    {"m", _p.arrow(s.m).name},
                    {"f", _p.arrow(s.f).name},
                    {"g", _p.arrow(s.g).name},
                    {"n", _p.arrow(s.n).name}});
    }
    j["squares"] = sq;
    if (_admissible) {
      json adm = json::array();
      for (int a : *_admissible) {
        adm.push_back(_p.arrow(a).name);
      }
      j["admissible"] = adm;
    }
    return j;
  }

  json to_json(Presentation const& p, CoveringFamily const& c) {
    json members = json::array();
    for (int u : c.members) {
      members.push_back(p.arrow(u).name);
    }
    return {{"target", p.object_name(c.target)}, {"members", members}, {"origin", c.origin}, {"square", c.square}};
  }

  std::vector<CoveringFamily> j_families(Site const& site) {
    std::vector<CoveringFamily> out;
    for (auto const& sq : site.squares()) {
      for (auto& c : families_of(site, sq, false)) {
        add_family(out, std::move(c));
      }
    }
    return out;
  }

  std::vector<CoveringFamily> k_families(Site const& site) {
    std::vector<CoveringFamily> out = j_families(site);
    for (auto const& sq : site.squares()) {
      for (auto& c : families_of(site, sq, true)) {
        add_family(out, std::move(c));
      }
    }
    return out;
  }

  Witness is_j_sheaf(Site const& site, Presheaf const& F) {
    for (auto const& sq : site.squares()) {
      require_kernel_pairs(sq);
    }
    for (auto const& sq : site.squares()) {
      if (auto why = limit_failure(F, sq, true)) {
        auto data      = context(site, F);
        data["square"] = sq.name;
        return failed("is_j_sheaf", *why, data);
      }
    }
    return passed("is_j_sheaf");
  }

  bool kernel_hypothesis(Site const& site, Presheaf const& F) {
    for (auto const& sq : site.squares()) {
      require_kernel_pairs(sq);
      if (!jointly_monic(F, sq)) {
        return false;
      }
    }
    return true;
  }

  Witness simplified_sheaf_check(Site const& site, Presheaf const& F) {
    for (auto const& sq : site.squares()) {
      require_kernel_pairs(sq);
      if (!jointly_monic(F, sq)) {
        throw Error(ErrorKind::hypothesis_failed,
                    "F(delta) and F(m2) are not jointly monic at square " + sq.name);
      }
    }
    json                       agreement = json::array();
    std::optional<std::string> first;
    std::string                where;
    for (auto const& sq : site.squares()) {
      auto simple = limit_failure(F, sq, false);
      auto full   = limit_failure(F, sq, true);
      agreement.push_back({{"square", sq.name}, {"simplified", !simple}, {"full", !full}});
      if (simple && !first) {
        first = simple;
        where = sq.name;
      }
    }
    Witness w = passed("simplified_sheaf_check");
    if (first) {
      auto data      = context(site, F);
      data["square"] = where;
      w              = failed("simplified_sheaf_check", *first, data);
    }
    w.data["agreement"] = agreement;
    return w;
  }

  Witness is_separated(Site const& site, Presheaf const& F, CoveringFamily const& family) {
    auto const& p = site.presentation();
    if (auto clash = separation_failure(F, family)) {
      auto data        = context(site, F);
      data["family"]   = to_json(p, family);
      data["elements"] = {F.elements[family.target][clash->first], F.elements[family.target][clash->second]};
      return failed("is_separated", "two elements of F(" + p.object_name(family.target) + ") agree on the family",
                    data);
    }
    return passed("is_separated");
  }

  Witness is_k_separated(Site const& site, Presheaf const& F) {
    for (auto const& c : k_families(site)) {
      auto w = is_separated(site, F, c);
      if (!w.pass) {
        w.check = "is_k_separated";
        return w;
      }
    }
    return passed("is_k_separated");
  }

  InstanceSite instance_site(Category const& cat, int bound) {
    auto const objs    = cat.objects(bound);
    int const  n_obj   = static_cast<int>(objs.size());
    bool const adhesive = cat.kind() == Kind::fin_set || cat.kind() == Kind::fin_graph;

    std::vector<std::string>               names;
    std::vector<Presentation::Arrow>       arrows;
    std::vector<Morphism>                  mors;
    std::map<std::pair<int, int>, std::map<std::vector<int>, int>> index;
    for (int i = 0; i < n_obj; ++i) {
      names.push_back("X" + std::to_string(i));
    }
    long total = 0;
    for (auto const& x : objs) {
      for (auto const& y : objs) {
        cat.for_each_hom(x, y, [&](std::vector<int> const&) { return ++total <= max_fragment_arrows; });
      }
      if (total > max_fragment_arrows) {
        throw Error(ErrorKind::unsupported_limit, "fragment has more than " + std::to_string(max_fragment_arrows) +
                                                      " arrows; lower the bound");
      }
    }
    for (int i = 0; i < n_obj; ++i) {
      for (int j = 0; j < n_obj; ++j) {
        int k = 0;
        for (auto& h : cat.homs(objs[i], objs[j])) {
          index[{i, j}][h.map] = static_cast<int>(arrows.size());
          arrows.push_back({names[i] + "-" + names[j] + "#" + std::to_string(k++), i, j});
          mors.push_back(std::move(h));
        }
      }
    }
    auto locate = [&](ObjRef const& x) {
      for (int i = 0; i < n_obj; ++i) {
        if (objs[i]->same_structure(*x)) {
          return i;
        }
      }
      throw Error(ErrorKind::invalid_object, "object outside the enumerated fragment");
    };
    auto arrow_of = [&](Morphism const& h) { return index.at({locate(h.dom), locate(h.cod)}).at(h.map); };

    int const n = static_cast<int>(arrows.size());
    std::vector<int> ids(n_obj);
    for (int i = 0; i < n_obj; ++i) {
      ids[i] = arrow_of(cat.identity(objs[i]));
    }
    std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        if (arrows[f].tgt == arrows[g].src) {
          table[static_cast<std::size_t>(g) * n + f] =
              index.at({arrows[f].src, arrows[g].tgt}).at(cat.compose(mors[g], mors[f]).map);
        }
      }
    }
    Presentation p(names, arrows, ids, std::move(table));

    json                          overflow = json::array();
    std::vector<Site::SquareSpec> specs;
    std::vector<Square>           squares;
    std::vector<int>              admissible;
    for (auto const& m : monos_up_to_iso(cat, bound)) {
      if (!adhesive && !is_regular_mono(cat, m).pass) {
        continue;
      }
      for (auto const& b : objs) {
        for (auto const& f : homs_up_to_codomain_aut(cat, m.dom, b)) {
          auto po   = cat.pushout(m, f);
          auto name = "s" + std::to_string(specs.size() + overflow.size());
          if (cat.carrier_size(*po.apex) > bound) {
            overflow.push_back({{"square", name},
                                {"needed", "pushout"},
                                {"size", cat.carrier_size(*po.apex)},
                                {"span", square_diagram(cat, Square{m, f, po.first, po.second}).to_json()}});
            continue;
          }
          std::optional<Morphism> iso;
          for (auto const& d : objs) {
            if ((iso = cat.find_iso(po.apex, d))) {
              break;
            }
          }
          Square sq{m, f, cat.compose(*iso, po.first), cat.compose(*iso, po.second)};
          specs.push_back({name, arrow_of(sq.m), arrow_of(sq.f), arrow_of(sq.g), arrow_of(sq.n)});
          admissible.push_back(specs.back().m);
          squares.push_back(std::move(sq));
        }
      }
    }
    std::sort(admissible.begin(), admissible.end());
    admissible.erase(std::unique(admissible.begin(), admissible.end()), admissible.end());

    InstanceSite out{Site(std::move(p), specs, admissible), objs, std::move(squares), adhesive ? 'C' : 'D',
                     std::move(overflow)};
    for (std::size_t k = 0; k < out.squares.size(); ++k) {
      auto const& sq = out.site.squares()[k];
      auto const& is = out.squares[k];
      if (!sq.a2) {
        out.overflow.push_back({{"square", sq.name},
                                {"needed", "kernel pair of g"},
                                {"size", cat.carrier_size(*cat.pullback(is.g, is.g).apex)}});
      }
      if (!sq.c2) {
        out.overflow.push_back({{"square", sq.name},
                                {"needed", "kernel pair of f"},
                                {"size", cat.carrier_size(*cat.pullback(is.f, is.f).apex)}});
      }
    }
    return out;
  }

  json embedding_report(Category const& cat, int bound) {
    auto const  inst = instance_site(cat, bound);
    auto const& site = inst.site;
    auto const& p    = site.presentation();
    bool const  quasi = inst.theorem == 'D';

    std::vector<Presheaf> reps;
    for (int x = 0; x < p.object_count(); ++x) {
      reps.push_back(representable(p, x));
    }

    json squares     = json::array();
    bool all_sheaf   = true;
    bool all_sep     = true;
    bool all_to_pb   = true;
    int  non_pb      = 0;
    int  checked     = 0;
    json first_fail;
    for (std::size_t k = 0; k < site.squares().size(); ++k) {
      auto const& sq = site.squares()[k];
      json        e{{"name", sq.name}, {"square", square_diagram(cat, inst.squares[k]).to_json()}};

      bool to_pb = std::all_of(reps.begin(), reps.end(),
                               [&](Presheaf const& F) { return !limit_failure(F, sq, false); });
      e["representables_to_pullbacks"] = to_pb;
      all_to_pb                        = all_to_pb && to_pb;

      bool pb           = p.is_pullback(sq.m, sq.f, sq.g, sq.n);
      e["yoneda_image_pullback"] = pb;
      if (!pb) {
        ++non_pb;
        e["expected_failure"] = std::string("declared pushout is not a pullback, so the category is not ") +
                                (quasi ? "q-adhesive" : "adhesive");
        auto w = is_pullback(cat, inst.squares[k]);
        w.bound = bound;
        e["witness"] = to_json(w);
        if (first_fail.is_null()) {
          first_fail = e["witness"];
        }
      }

      if (!sq.has_kernel_pairs()) {
        e["representables_j_sheaf"] = "closure_overflow";
        if (quasi) {
          e["representables_k_separated"] = "closure_overflow";
        }
      } else {
        ++checked;
        bool sheaf = std::all_of(reps.begin(), reps.end(),
                                 [&](Presheaf const& F) { return !limit_failure(F, sq, true); });
        e["representables_j_sheaf"] = sheaf;
        all_sheaf                   = all_sheaf && sheaf;
        if (quasi) {
          auto fams = families_of(site, sq, true);
          bool sep  = std::all_of(reps.begin(), reps.end(), [&](Presheaf const& F) {
            return std::all_of(fams.begin(), fams.end(),
                               [&](CoveringFamily const& c) { return !separation_failure(F, c); });
          });
          e["representables_k_separated"] = sep;
          e["k_families"]                 = fams.size();
          all_sep                         = all_sep && sep;
        }
      }
      squares.push_back(std::move(e));
    }

    bool const clean = all_sheaf && (!quasi || all_sep) && all_to_pb;
    json       summary{{"declared_squares", site.squares().size()},
                 {"checked_with_kernel_pairs", checked},
                 {"representables_j_sheaves", all_sheaf},
                 {"pushouts_to_pullbacks", all_to_pb},
                 {"non_pullback_squares", non_pb},
                 {"overflows", inst.overflow.size()}};
    if (quasi) {
      summary["representables_k_separated"] = all_sep;
    }
    json report{{"category", cat.name()},
                {"bound", bound},
                {"theorem", quasi ? "D" : "C"},
                {"admissible", quasi ? "regular monos" : "monos"},
                {"topology_k", "generated by the j-families and all pullbacks of {m2, delta}"},
                {"scope", "checkable halves only: representables and the Yoneda image of declared squares"},
                {"objects", p.object_count()},
                {"arrows", p.arrow_count()},
                {"squares", squares},
                {"overflow", inst.overflow},
                {"summary", summary}};
    if (!clean) {
      report["verdict"] = "fail";
    } else if (non_pb > 0) {
      report["verdict"]  = "refuted";
      report["expected"] = true;
      report["witness"]  = first_fail;
    } else {
      report["verdict"] = "pass";
    }
    return report;
  }

}  // namespace adh
