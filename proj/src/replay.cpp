#include "adhesive/replay.hpp"

#include <functional>
#include <map>

#include "adhesive/adhesion.hpp"
#include "adhesive/colimit_calculus.hpp"
#include "adhesive/dpo.hpp"
#include "adhesive/sheaf.hpp"
#include "adhesive/universal.hpp"

namespace adh {

  using nlohmann::json;

  namespace {

    json const& field(json const& data, char const* key) {
      if (!data.is_object() || !data.contains(key)) {
        throw Error(ErrorKind::parse_error, std::string("witness data lacks \"") + key + "\"");
      }
      return data.at(key);
    }

    Witness replay_square(json const& data, bool pullback) {
      auto   d  = Diagram::from_json(field(data, "square"));
      Square sq = square_from(d);
      return pullback ? is_pullback(d.category(), sq) : is_pushout(d.category(), sq);
    }

    Witness replay_paste(json const& data, PasteMode mode) {
      auto left  = Diagram::from_json(field(data, "left"));
      auto right = Diagram::from_json(field(data, "right"));
      return paste_check(left.category(), square_from(left), square_from(right), mode);
    }

    Witness replay_regular(json const& data) {
      auto d = Diagram::from_json(field(data, "morphism"));
      return is_regular_mono(d.category(), d.morphism("m"));
    }

    Witness replay_union(json const& data) {
      auto        d   = Diagram::from_json(field(data, "subobjects"));
      auto const& cat = d.category();
      return union_effective(cat, subobject(cat, d.morphism("m1")), subobject(cat, d.morphism("m2")))
          .witness;
    }

    Witness replay_basic_lemma(json const& data) {
      auto d = Diagram::from_json(field(data, "span"));
      return basic_lemma_squares(d.category(), d.morphism("m"), d.morphism("f")).witness;
    }

    Witness replay_factorization(json const& data, int bound) {
      auto        d     = Diagram::from_json(field(data, "probe"));
      auto const& cat   = d.category();
      auto        probe = user_probes(d.object("X"), {d.morphism("h")});
      probe.bound       = bound;
      auto t = stable_factorization(cat, subobject(cat, d.morphism("m1")), subobject(cat, d.morphism("m2")),
                                    &probe);
      if (!t.n_regular.pass) {
        return t.n_regular;
      }
      if (!t.e_epi) {
        return failed("stable_factorization", "e is not epi", data, bound);
      }
      return t.stable;
    }

    Witness replay_jointly_epi(json const& data, int bound) {
      auto        d     = Diagram::from_json(field(data, "probe"));
      auto const& cat   = d.category();
      auto        probe = user_probes(d.object("A2"), {d.morphism("h")});
      probe.bound       = bound;
      return stably_jointly_epi(cat, d.morphism("m"), d.morphism("f"), probe);
    }

    Witness replay_stable(json const& data, int bound) {
      auto sq_d  = Diagram::from_json(field(data, "square"));
      if (!data.contains("probe")) {
        return is_stable_pushout(sq_d.category(), square_from(sq_d), bound);
      }
      auto pr_d  = Diagram::from_json(field(data, "probe"));
      auto probe = user_probes(pr_d.object("D"), {pr_d.morphism("d")});
      probe.bound = bound;
      return is_stable_pushout(sq_d.category(), square_from(sq_d), probe);
    }

    Witness replay_cube(json const& data, int bound) {
      if (!data.contains("cube")) {
        auto d = Diagram::from_json(field(data, "square"));
        return is_van_kampen(d.category(), square_from(d), bound);
      }
      auto d = Diagram::from_json(field(data, "cube"));
      auto w = check_cube(d.category(), cube_from(d));
      w.bound = bound;
      return w;
    }

    Witness replay_cancellation(json const& data, int bound) {
      auto d = Diagram::from_json(field(data, "config"));
      return cancellation_lemma_check(d.category(), cancellation_from(d), bound);
    }

    Witness replay_sheaf(json const& data, std::string const& check) {
      auto site = Site::from_json(field(data, "site"));
      auto F    = presheaf_from_json(site.presentation(), field(data, "presheaf"));
      if (check == "is_j_sheaf") {
        return is_j_sheaf(site, F);
      }
      if (check == "simplified_sheaf_check") {
        return simplified_sheaf_check(site, F);
      }
      if (check == "is_k_separated") {
        return is_k_separated(site, F);
      }
      auto const&    fam = field(data, "family");
      CoveringFamily c;
      c.target = site.presentation().find_object(label_of(field(fam, "target")));
      for (auto const& u : field(fam, "members")) {
        c.members.push_back(site.presentation().find_arrow(label_of(u)));
      }
      c.origin = fam.value("origin", "");
      c.square = fam.value("square", "");
      return is_separated(site, F, c);
    }

    Witness replay_complement(json const& data, int bound) {
      auto        d   = Diagram::from_json(field(data, "complement"));
      auto const& cat = d.category();
      auto        sq  = square_from(d);
      auto        pc  = pushout_complement(cat, sq.m, sq.g);
      if (!pc.complement) {
        throw Error(ErrorKind::precondition_unmet, "no pushout complement: " + pc.reason);
      }
      return complement_unique(cat, sq.m, sq.g, *pc.complement, bound);
    }

    using Handler = std::function<Witness(json const&, int)>;

    std::map<std::string, Handler, std::less<>>& handlers() {
      static std::map<std::string, Handler, std::less<>> table{
          {"is_pullback", [](json const& d, int) { return replay_square(d, true); }},
          {"is_pushout", [](json const& d, int) { return replay_square(d, false); }},
          {"paste_pullback", [](json const& d, int) { return replay_paste(d, PasteMode::pullback); }},
          {"paste_pushout", [](json const& d, int) { return replay_paste(d, PasteMode::pushout); }},
          {"is_regular_mono", [](json const& d, int) { return replay_regular(d); }},
          {"union_effective", [](json const& d, int) { return replay_union(d); }},
          {"basic_lemma", [](json const& d, int) { return replay_basic_lemma(d); }},
          {"stable_factorization", replay_factorization},
          {"stably_jointly_epi", replay_jointly_epi},
          {"is_stable_pushout", replay_stable},
          {"is_van_kampen", replay_cube},
          {"cancellation_lemma", replay_cancellation},
          {"complement_unique", replay_complement},
          {"is_j_sheaf", [](json const& d, int) { return replay_sheaf(d, "is_j_sheaf"); }},
          {"simplified_sheaf_check", [](json const& d, int) { return replay_sheaf(d, "simplified_sheaf_check"); }},
          {"is_k_separated", [](json const& d, int) { return replay_sheaf(d, "is_k_separated"); }},
          {"is_separated", [](json const& d, int) { return replay_sheaf(d, "is_separated"); }},
      };
      return table;
    }

  }  // namespace

  Witness replay(json const& witness) {
    auto w  = witness_from_json(witness);
    auto it = handlers().find(w.check);
    if (it == handlers().end()) {
      throw Error(ErrorKind::parse_error, "no replay for check \"" + w.check + "\"");
    }
    auto fresh  = it->second(w.data, w.bound);
    fresh.bound = w.bound;
    return fresh;
  }

  bool replays(json const& witness) {
    auto w     = witness_from_json(witness);
    auto fresh = replay(witness);
    return fresh.pass == w.pass && fresh.check == w.check;
  }

  json replayable(Witness w, json const& inputs) {
    if (!w.data.is_object()) {
      w.data = json::object();
    }
    for (auto const& [key, value] : inputs.items()) {
      if (!w.data.contains(key)) {
        w.data[key] = value;
      }
    }
    return to_json(w);
  }

  json replay_all(json const& report) {
    json                             results = json::array();
    std::function<void(json const&)> walk    = [&](json const& j) {
      if (j.is_object() && j.contains("check") && j.contains("verdict") && j["verdict"].is_string() &&
          (j["verdict"] == "pass" || j["verdict"] == "fail")) {
        bool ok = j["verdict"] == "fail" ? replays(j) : replay(j).pass;
        results.push_back({{"check", j["check"]}, {"recorded", j["verdict"]}, {"replayed", ok}});
        return;
      }
      if (j.is_structured()) {
        for (auto const& v : j) {
          walk(v);
        }
      }
    };
    walk(report);
    return results;
  }

}  // namespace adh
