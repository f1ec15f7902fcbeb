#include "adhesive/reproduce.hpp"

#include <algorithm>
#include <random>

#include "adhesive/adhesion.hpp"
#include "adhesive/colimit_calculus.hpp"
#include "adhesive/instances.hpp"
#include "adhesive/replay.hpp"
#include "adhesive/serialize.hpp"
#include "adhesive/universal.hpp"

namespace adh {

  using nlohmann::json;

  namespace {

    template <class T>
    T const& pick(std::vector<T> const& xs, std::mt19937& rng) {
      return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
    }

    // A uniformly chosen hom between random objects of size <= bound that
    // satisfies pred.
    template <class Pred>
    Morphism random_morphism(Category const& cat, int bound, std::mt19937& rng, Pred pred) {
      auto const objs = cat.objects(bound);
      while (true) {
        auto homs = cat.homs(pick(objs, rng), pick(objs, rng));
        std::erase_if(homs, [&](Morphism const& h) { return !pred(h); });
        if (!homs.empty()) {
          return pick(homs, rng);
        }
      }
    }

    Morphism random_out_of(Category const& cat, ObjRef const& x, int bound, std::mt19937& rng) {
      auto const objs = cat.objects(bound);
      while (true) {
        auto homs = cat.homs(x, pick(objs, rng));
        if (!homs.empty()) {
          return pick(homs, rng);
        }
      }
    }

    Morphism random_mono_into(Category const& cat, ObjRef const& x, std::mt19937& rng) {
      std::vector<Morphism> monos;
      for (auto const& y : cat.objects(cat.carrier_size(*x))) {
        for (auto const& h : cat.homs(y, x)) {
          if (cat.is_mono(h)) {
            monos.push_back(h);
          }
        }
      }
      return pick(monos, rng);
    }

    Reproduction e_counterexample() {
      auto const& cat = acyclicrel();
      auto        c   = make_relation(Kind::acyclic_rel, 2, {});
      auto        a   = make_relation(Kind::acyclic_rel, 3, {{0, 1}, {1, 2}});
      auto        one = make_relation(Kind::acyclic_rel, 1, {});
      auto        m   = cat.make_morphism(c, a, {0, 2});
      auto        f   = cat.make_morphism(c, one, {0, 0});
      auto        po  = cat.pushout_along(m, f);
      Square      sq{m, f, po.first, po.second};

      // Terminal: exactly one map from every small object.
      bool terminal = true;
      for (auto const& x : cat.objects(3)) {
        terminal = terminal && cat.homs(x, po.apex).size() == 1;
      }
      auto regular  = is_regular_mono(cat, m);
      auto pushout  = is_pushout(cat, sq);
      auto pullback = is_pullback(cat, sq);

      Reproduction r{"e-counterexample", false, {}};
      r.observed = terminal && regular.pass && pushout.pass && !pullback.pass;
      json square = square_diagram(cat, sq).to_json();
      r.report    = {{"square", square},
                  {"corner_terminal", terminal},
                  {"m_regular", replayable(regular, {{"morphism", morphism_diagram(cat, m).to_json()}})},
                  {"is_pushout", replayable(pushout, {{"square", square}})},
                  {"is_pullback", replayable(pullback, {{"square", square}})}};
      return r;
    }

    Reproduction relset_union() {
      auto const& cat = relset();
      auto        x   = make_relation(Kind::rel_set, 2, {{0, 1}});
      auto        pt  = make_relation(Kind::rel_set, 1, {});
      auto        a   = subobject(cat, cat.make_morphism(pt, x, {0}));
      auto        b   = subobject(cat, cat.make_morphism(pt, x, {1}));
      auto        u   = union_effective(cat, a, b);

      auto ra = is_regular_mono(cat, a.mono);
      auto rb = is_regular_mono(cat, b.mono);
      auto ru = is_regular_mono(cat, u.induced);
      // Independent reading: a regular mono in RelSet reflects the relation.
      bool reflects = true;
      auto const& d = *u.induced.dom;
      for (int i = 0; i < d.size(0); ++i) {
        for (int j = 0; j < d.size(0); ++j) {
          reflects = reflects && (d.related(i, j) || !x->related(u.induced(0, i), u.induced(0, j)));
        }
      }

      Reproduction r{"relset-union", false, {}};
      r.observed = ra.pass && rb.pass && u.witness.pass && !ru.pass && !reflects;
      r.report   = {{"first_regular", replayable(ra, {{"morphism", morphism_diagram(cat, a.mono).to_json()}})},
                  {"second_regular", replayable(rb, {{"morphism", morphism_diagram(cat, b.mono).to_json()}})},
                  {"union_effective", to_json(u.witness)},
                  {"union_regular", to_json(ru)},
                  {"union_reflects_relation", reflects}};
      return r;
    }

    Reproduction vk_biconditional(int bound) {
      Reproduction r{"vk-biconditional", true, json::object()};
      // Adhesive instances: no pushout along a mono fails van Kampen.
      for (auto const* cat : {static_cast<Category const*>(&finset()), static_cast<Category const*>(&fingraph())}) {
        auto found = first_non_van_kampen(*cat, bound, false);
        r.report[std::string(cat->name())] = {{"bound", bound},
                                              {"van_kampen", !found},
                                              {"witness", found ? to_json(*found) : json()}};
        r.observed = r.observed && !found;
      }
      // RelSet: a pushout along a regular mono that is stable and a
      // pullback but not van Kampen.
      auto const& rc    = relset();
      auto        found = first_non_van_kampen(rc, bound, true);
      json        entry = {{"bound", bound}, {"van_kampen", !found}};
      if (found) {
        auto sq           = cube_from(Diagram::from_json(found->data.at("cube"))).bottom;
        auto stable       = is_stable_pushout(rc, sq, bound);
        auto pullback     = is_pullback(rc, sq);
        json square       = square_diagram(rc, sq).to_json();
        entry["witness"]  = to_json(*found);
        entry["stable"]   = replayable(stable, {{"square", square}});
        entry["pullback"] = replayable(pullback, {{"square", square}});
        r.observed         = r.observed && stable.pass && pullback.pass;
      } else {
        r.observed = false;
      }
      r.report["relset"] = entry;
      return r;
    }

    Reproduction basic_lemma(unsigned seed) {
      std::mt19937 rng(seed);
      auto const&  cat = fingraph();
      Reproduction r{"basic-lemma", true, {{"seed", seed}, {"cases", 200}}};
      json         failures = json::array();
      for (int i = 0; i < 200; ++i) {
        auto m     = random_morphism(cat, 3, rng, [&](Morphism const& h) { return cat.is_mono(h); });
        auto f     = random_out_of(cat, m.dom, 3, rng);
        auto lemma = basic_lemma_squares(cat, m, f);
        if (!lemma.witness.pass) {
          failures.push_back(to_json(lemma.witness));
        }
      }
      r.observed           = failures.empty();
      r.report["failures"] = failures;
      return r;
    }

    Reproduction factorization(unsigned seed) {
      std::mt19937 rng(seed);
      auto const&  cat = finset();
      Reproduction r{"factorization", true, {{"seed", seed}, {"cases", 200}}};
      json         failures = json::array();
      auto const   objs     = cat.objects(3);
      for (int i = 0; i < 200; ++i) {
        auto x  = pick(objs, rng);
        auto m1 = random_mono_into(cat, x, rng);
        auto m2 = random_mono_into(cat, x, rng);
        auto a = subobject(cat, m1);
        auto b = subobject(cat, m2);
        auto t = stable_factorization(cat, a, b);
        // Direct image factorization of the union.
        std::vector<int> image;
        for (int v = 0; v < x->size(0); ++v) {
          bool hit = std::find(m1.map.begin(), m1.map.end(), v) != m1.map.end() ||
                     std::find(m2.map.begin(), m2.map.end(), v) != m2.map.end();
          if (hit) {
            image.push_back(v);
          }
        }
        auto direct = subobject(cat, cat.make_morphism(make_set(static_cast<int>(image.size())), x, image));
        bool agrees = subobject(cat, t.n()) == direct && cat.is_surjective(t.e);
        if (!t.ok() || !agrees) {
          failures.push_back({{"trace", t.diagram(cat).to_json()},
                              {"n_regular", to_json(t.n_regular)},
                              {"stable", to_json(t.stable)},
                              {"agrees_with_image", agrees}});
        }
      }
      r.observed           = failures.empty();
      r.report["failures"] = failures;
      return r;
    }

  }  // namespace

  std::vector<std::string> reproduction_names() {
    return {"e-counterexample", "relset-union", "vk-biconditional", "basic-lemma", "factorization"};
  }

  Reproduction reproduce(std::string_view name, unsigned seed, int bound) {
    Reproduction r;
    if (name == "e-counterexample") {
      r = e_counterexample();
    } else if (name == "relset-union") {
      r = relset_union();
    } else if (name == "vk-biconditional") {
      r = vk_biconditional(bound);
    } else if (name == "basic-lemma") {
      r = basic_lemma(seed);
    } else if (name == "factorization") {
      r = factorization(seed);
    } else {
      throw Error(ErrorKind::parse_error, "unknown reproduction \"" + std::string(name) + "\"");
    }
    r.report["name"]     = r.name;
    r.report["observed"] = r.observed;
    return r;
  }

}  // namespace adh
