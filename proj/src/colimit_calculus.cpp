#include "adhesive/colimit_calculus.hpp"

#include <algorithm>
#include <numeric>

#include "adhesive/universal.hpp"

namespace adh {

  namespace {

    Morphism must(std::optional<Morphism> m, char const* what) {
      if (!m) {
        throw Error(ErrorKind::precondition_unmet, std::string("no induced map: ") + what);
      }
      return std::move(*m);
    }

    PullbackCone as_cone(KernelPair const& k) {
      return PullbackCone{k.apex, k.first, k.second};
    }

  }  // namespace

  Diagram morphism_diagram(Category const& cat, Morphism const& m) {
    Diagram d(cat);
    d.add("dom", m.dom);
    d.add("cod", m.cod);
    d.add("m", "dom", "cod", m);
    return d;
  }

  KernelPair kernel_pair(Category const& cat, Morphism const& f) {
    auto pb   = cat.pullback(f, f);
    auto id   = cat.identity(f.dom);
    auto diag = must(cat.lift_to_pullback(pb, id, id), "kernel pair diagonal");
    return KernelPair{pb.apex, pb.first, pb.second, std::move(diag)};
  }

  CokernelPair cokernel_pair(Category const& cat, Morphism const& m) {
    auto po    = cat.pushout_along(m, m);
    auto id    = cat.identity(m.cod);
    auto codia = must(cat.lift_from_pushout(po, id, id), "codiagonal");
    return CokernelPair{po.apex, po.first, po.second, std::move(codia)};
  }

  Witness is_regular_mono(Category const& cat, Morphism const& m) {
    auto data = [&] {
      return nlohmann::json{{"morphism", morphism_diagram(cat, m).to_json()}};
    };
    if (!cat.is_mono(m)) {
      return failed("is_regular_mono", "not a monomorphism", data());
    }
    auto coker = cokernel_pair(cat, m);
    auto eq    = cat.equalizer(coker.i, coker.j);
    auto u     = must(cat.factor_through(eq.incl, m), "m into the equalizer");
    if (cat.is_iso(u)) {
      return passed("is_regular_mono");
    }
    return failed("is_regular_mono",
                  "comparison to the equalizer of the cokernel pair is not invertible",
                  data());
  }

  Subobject subobject(Category const& cat, Morphism const& m) {
    if (!cat.is_mono(m)) {
      throw Error(ErrorKind::invalid_morphism, "subobject representative is not mono");
    }
    Object const& x      = *m.dom;
    int const     nsorts = cat.sorts();
    // order[s][k] = old element placed at position k; pos is the inverse
    std::vector<std::vector<int>> order(nsorts);
    std::vector<std::vector<int>> pos(nsorts);
    std::vector<int>              table;
    for (int s = 0; s < nsorts; ++s) {
      order[s].resize(x.card[s]);
      std::iota(order[s].begin(), order[s].end(), 0);
      std::sort(order[s].begin(), order[s].end(),
                [&](int a, int b) { return m(s, a) < m(s, b); });
      pos[s].resize(x.card[s]);
      for (int k = 0; k < x.card[s]; ++k) {
        pos[s][order[s][k]] = k;
        table.push_back(m(s, order[s][k]));
      }
    }
    Object y;
    y.kind = x.kind;
    y.card = x.card;
    if (x.kind == Kind::fin_graph) {
      for (int k = 0; k < x.card[1]; ++k) {
        y.src.push_back(pos[0][x.src[order[1][k]]]);
        y.tgt.push_back(pos[0][x.tgt[order[1][k]]]);
      }
    } else if (x.kind != Kind::fin_set) {
      y.rel.assign(x.card[0], 0);
      for (int a = 0; a < x.card[0]; ++a) {
        for (int b = 0; b < x.card[0]; ++b) {
          if (x.related(order[0][a], order[0][b])) {
            y.rel[a] |= std::uint64_t{1} << b;
          }
        }
      }
    }
    if (x.has_labels()) {
      y.labels.resize(nsorts);
      for (int s = 0; s < nsorts; ++s) {
        for (int k = 0; k < x.card[s]; ++k) {
          y.labels[s].push_back(x.labels[s][order[s][k]]);
        }
      }
    }
    auto dom = std::make_shared<Object const>(std::move(y));
    return Subobject{Morphism{dom, m.cod, std::move(table)}};
  }

  bool operator==(Subobject const& a, Subobject const& b) {
    return a.mono == b.mono;
  }

  Subobject intersection(Category const& cat, Subobject const& a, Subobject const& b) {
    auto pb = cat.pullback(a.mono, b.mono);
    return subobject(cat, cat.compose(a.mono, pb.first));
  }

  Union union_effective(Category const& cat, Subobject const& a, Subobject const& b) {
    auto meet    = cat.pullback(a.mono, b.mono);
    auto join    = cat.pushout_along(meet.first, meet.second);
    auto induced = must(cat.lift_from_pushout(join, a.mono, b.mono), "union comparison");
    Union u{std::move(meet), std::move(join), std::move(induced), std::nullopt, passed("union_effective")};
    Diagram d(cat);
    d.add("X", a.ambient());
    d.add("A1", a.domain());
    d.add("A2", b.domain());
    d.add("m1", "A1", "X", a.mono);
    d.add("m2", "A2", "X", b.mono);
    nlohmann::json data{{"subobjects", d.to_json()}};
    if (cat.is_mono(u.induced)) {
      u.sub          = subobject(cat, u.induced);
      u.witness.data = std::move(data);
    } else {
      u.witness = failed("union_effective", "induced map from the pushout is not mono", std::move(data));
    }
    return u;
  }

  BasicLemma basic_lemma_squares(Category const& cat, Morphism const& m, Morphism const& f) {
    auto po = cat.pushout_along(m, f);
    auto kf = kernel_pair(cat, f);
    auto kg = kernel_pair(cat, po.first);
    auto m2 = must(cat.lift_to_pullback(as_cone(kg), cat.compose(m, kf.first), cat.compose(m, kf.second)),
                   "m2");
    Square left{m, kf.diagonal, kg.diagonal, m2};
    Square central1{m2, kf.first, kg.first, m};
    Square central2{m2, kf.second, kg.second, m};
    Square right{m, f, po.first, po.second};
    BasicLemma lemma{po, kf, kg, m2, left, central1, central2, right, passed("basic_lemma")};
    for (auto const& [name, sq] : {std::pair{"left", &lemma.left},
                                   std::pair{"central1", &lemma.central1},
                                   std::pair{"central2", &lemma.central2},
                                   std::pair{"right", &lemma.right}}) {
      auto po_w = is_pushout(cat, *sq);
      auto pb_w = is_pullback(cat, *sq);
      if (po_w.pass && pb_w.pass) {
        continue;
      }
      Diagram d(cat);
      d.add("C", m.dom);
      d.add("A", m.cod);
      d.add("B", f.cod);
      d.add("m", "C", "A", m);
      d.add("f", "C", "B", f);
      nlohmann::json data{{"span", d.to_json()}, {"square", name}};
      lemma.witness = failed("basic_lemma",
                             std::string(name) + " square: " + (po_w.pass ? pb_w.reason : po_w.reason),
                             data);
      break;
    }
    return lemma;
  }

  Diagram FactorizationTrace::diagram(Category const& cat) const {
    Diagram d(cat);
    d.add("X", m1.ambient());
    d.add("A1", m1.domain());
    d.add("A2", m2.domain());
    d.add("A0", uni.meet.apex);
    d.add("A", uni.join.apex);
    d.add("X1", coker.apex);
    d.add("X2", pulled.apex);
    d.add("Y", glued.apex);
    d.add("B", eq.apex);
    d.add("m1", "A1", "X", m1.mono);
    d.add("m2", "A2", "X", m2.mono);
    d.add("m2'", "A0", "A1", uni.meet.first);
    d.add("m1'", "A0", "A2", uni.meet.second);
    d.add("n1", "A1", "A", uni.join.first);
    d.add("n2", "A2", "A", uni.join.second);
    d.add("m", "A", "X", uni.induced);
    d.add("i", "X", "X1", coker.i);
    d.add("j", "X", "X1", coker.j);
    d.add("e1", "X1", "X", coker.codiagonal);
    d.add("ell", "X2", "X1", pulled.first);
    d.add("e2", "X2", "A2", pulled.second);
    d.add("i2", "A2", "X2", i2);
    d.add("j2", "A2", "X2", j2);
    d.add("q", "X1", "Y", glued.first);
    d.add("k", "A2", "Y", glued.second);
    d.add("n", "B", "X", eq.incl);
    d.add("e", "A", "B", e);
    return d;
  }

  FactorizationTrace stable_factorization(Category const&  cat,
                                          Subobject const& m1,
                                          Subobject const& m2,
                                          ProbeSet const*  probes) {
    if (!same_object(m1.ambient(), m2.ambient())) {
      throw Error(ErrorKind::type_mismatch, "subobjects of different objects");
    }
    for (auto const* s : {&m1, &m2}) {
      if (!is_regular_mono(cat, s->mono).pass) {
        throw Error(ErrorKind::not_regular, "factorization input is not a regular mono");
      }
    }
    auto uni = union_effective(cat, m1, m2);
    if (!uni.witness.pass) {
      throw Error(ErrorKind::precondition_unmet, "union of the inputs is not effective");
    }
    auto coker  = cokernel_pair(cat, m1.mono);
    auto pulled = cat.pullback(coker.codiagonal, m2.mono);
    auto id2    = cat.identity(m2.domain());
    auto i2     = must(cat.lift_to_pullback(pulled, cat.compose(coker.i, m2.mono), id2), "i2");
    auto j2     = must(cat.lift_to_pullback(pulled, cat.compose(coker.j, m2.mono), id2), "j2");
    auto glued  = cat.pushout_along(pulled.first, pulled.second);
    auto eq     = cat.equalizer(cat.compose(glued.first, coker.i), cat.compose(glued.first, coker.j));
    auto e      = must(cat.factor_through(eq.incl, uni.induced), "e");

    FactorizationTrace t{m1,
                         m2,
                         std::move(uni),
                         std::move(coker),
                         std::move(pulled),
                         std::move(i2),
                         std::move(j2),
                         std::move(glued),
                         std::move(eq),
                         std::move(e),
                         {},
                         false,
                         passed("stable_factorization")};
    t.n_regular = is_regular_mono(cat, t.n());
    t.e_epi     = cat.is_epi(t.e);

    ProbeSet fallback;
    if (probes == nullptr) {
      fallback = exhaustive_probes(cat, m1.ambient(), 3);
      probes   = &fallback;
    }
    for (auto const& h : probes->probes) {
      auto pa = cat.pullback(t.m(), h);
      auto pb = cat.pullback(t.n(), h);
      auto ep = must(cat.lift_to_pullback(pb, cat.compose(t.e, pa.first), pa.second), "pulled e");
      bool epi     = cat.is_epi(ep);
      bool regular = is_regular_mono(cat, pb.second).pass;
      if (epi && regular) {
        continue;
      }
      Diagram d(cat);
      d.add("X", m1.ambient());
      d.add("A1", m1.domain());
      d.add("A2", m2.domain());
      d.add("X'", h.dom);
      d.add("m1", "A1", "X", m1.mono);
      d.add("m2", "A2", "X", m2.mono);
      d.add("h", "X'", "X", h);
      t.stable = failed("stable_factorization",
                        epi ? "pulled-back n is not a regular mono" : "pulled-back e is not epi",
                        nlohmann::json{{"probe", d.to_json()}},
                        probes->bound);
      break;
    }
    return t;
  }

  bool jointly_surjective(Morphism const& a, Morphism const& b) {
    Object const& t = *a.cod;
    for (std::size_t s = 0; s < t.card.size(); ++s) {
      std::vector<bool> hit(t.card[s], false);
      for (auto const* leg : {&a, &b}) {
        for (int i = 0; i < leg->dom->card[s]; ++i) {
          hit[(*leg)(static_cast<int>(s), i)] = true;
        }
      }
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
        return false;
      }
    }
    return true;
  }

  Witness stably_jointly_epi(Category const& cat,
                             Morphism const& m,
                             Morphism const& f,
                             int             bound) {
    auto po = cat.pushout_along(m, f);
    auto kg = kernel_pair(cat, po.first);
    return stably_jointly_epi(cat, m, f, exhaustive_probes(cat, kg.apex, bound));
  }

  Witness stably_jointly_epi(Category const& cat,
                             Morphism const& m,
                             Morphism const& f,
                             ProbeSet const& probes) {
    if (!is_regular_mono(cat, m).pass) {
      throw Error(ErrorKind::precondition_unmet, "m is not a regular mono");
    }
    auto po = cat.pushout_along(m, f);
    auto kf = kernel_pair(cat, f);
    auto kg = kernel_pair(cat, po.first);
    auto m2 = must(cat.lift_to_pullback(as_cone(kg), cat.compose(m, kf.first), cat.compose(m, kf.second)),
                   "m2");
    if (!same_object(probes.target, kg.apex)) {
      throw Error(ErrorKind::type_mismatch, "probes do not land in the kernel pair object");
    }
    std::vector<Morphism> all{cat.identity(kg.apex)};
    all.insert(all.end(), probes.probes.begin(), probes.probes.end());
    for (auto const& h : all) {
      auto pd = cat.pullback(kg.diagonal, h);
      auto pm = cat.pullback(m2, h);
      if (jointly_surjective(pd.second, pm.second)) {
        continue;
      }
      Diagram d(cat);
      d.add("C", m.dom);
      d.add("A", m.cod);
      d.add("B", f.cod);
      d.add("A2", kg.apex);
      d.add("T", h.dom);
      d.add("m", "C", "A", m);
      d.add("f", "C", "B", f);
      d.add("h", "T", "A2", h);
      return failed("stably_jointly_epi", "pulled-back delta and m2 miss part of T",
                    nlohmann::json{{"probe", d.to_json()}}, probes.bound);
    }
    return passed("stably_jointly_epi", probes.bound);
  }

}  // namespace adh
