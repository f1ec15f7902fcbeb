#include "adhesive/instances.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace adh {

  namespace {

    using PairList = std::vector<std::pair<int, int>>;

    std::vector<std::vector<int>> permutations(int n) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::vector<std::vector<int>> result;
      do {
        result.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return result;
    }

    PairList relabel(PairList const& pairs, std::vector<int> const& perm) {
      PairList result;
      result.reserve(pairs.size());
      for (auto [i, j] : pairs) {
        result.emplace_back(perm[i], perm[j]);
      }
      std::sort(result.begin(), result.end());
      return result;
    }

    PairList canonical_pairs(PairList const& pairs,
                             std::vector<std::vector<int>> const& perms) {
      PairList best = relabel(pairs, perms.front());
      for (auto const& perm : perms) {
        auto candidate = relabel(pairs, perm);
        if (candidate < best) {
          best = std::move(candidate);
        }
      }
      return best;
    }

    // Ordered by (number of pairs, pair list).
    struct ByCountThenLex {
      bool operator()(PairList const& a, PairList const& b) const {
        if (a.size() != b.size()) {
          return a.size() < b.size();
        }
        return a < b;
      }
    };

    std::vector<ObjRef> enumerate_relations(Kind kind, int bound) {
      if (bound > 4) {
        throw Error(ErrorKind::unsupported_limit,
                    "relation objects are enumerated up to carrier size 4");
      }
      bool const          reflexive = kind == Kind::acyclic_rel;
      std::vector<ObjRef> result;
      for (int n = 0; n <= bound; ++n) {
        auto     perms = permutations(n);
        PairList slots;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (!reflexive || i != j) {
              slots.emplace_back(i, j);
            }
          }
        }
        std::set<PairList, ByCountThenLex> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
          PairList pairs;
          for (std::size_t k = 0; k < slots.size(); ++k) {
            if ((mask >> k) & 1U) {
              pairs.push_back(slots[k]);
            }
          }
          if (reflexive) {
            auto obj = make_relation(kind, n, pairs);
            if (!is_acyclic(*obj)) {
              continue;
            }
          }
          seen.insert(canonical_pairs(pairs, perms));
        }
        for (auto const& pairs : seen) {
          result.push_back(make_relation(kind, n, pairs));
        }
      }
      return result;
    }

    std::vector<ObjRef> enumerate_graphs(int bound) {
      struct Key {
        int      total;
        int      vertices;
        PairList edges;
        bool     operator<(Key const& other) const {
          return std::tie(total, vertices, edges)
                 < std::tie(other.total, other.vertices, other.edges);
        }
      };
      std::set<Key> seen;
      for (int v = 0; v <= bound; ++v) {
        auto     perms = permutations(v);
        PairList slots;
        for (int i = 0; i < v; ++i) {
          for (int j = 0; j < v; ++j) {
            slots.emplace_back(i, j);
          }
        }
        for (int e = 0; v + e <= bound; ++e) {
          if (e > 0 && v == 0) {
            break;
          }
          // multisets of size e over slots, as non-decreasing index lists
          std::vector<int> idx(e, 0);
          while (true) {
            PairList edges;
            for (int k : idx) {
              edges.push_back(slots[k]);
            }
            seen.insert(Key{v + e, v, canonical_pairs(edges, perms)});
            int k = e - 1;
            while (k >= 0 && idx[k] == static_cast<int>(slots.size()) - 1) {
              --k;
            }
            if (k < 0) {
              break;
            }
            ++idx[k];
            for (int l = k + 1; l < e; ++l) {
              idx[l] = idx[k];
            }
          }
        }
      }
      std::vector<ObjRef> result;
      for (auto const& key : seen) {
        result.push_back(make_graph(key.vertices, key.edges));
      }
      return result;
    }

    std::vector<ObjRef> const& cached(Kind kind, int bound, std::vector<ObjRef> (*make)(Kind, int)) {
      static std::mutex                                    mtx;
      static std::map<std::pair<Kind, int>, std::vector<ObjRef>> cache;
      std::lock_guard<std::mutex>                          lock(mtx);
      auto                                                 key = std::pair{kind, bound};
      auto                                                 it  = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, make(kind, bound)).first;
      }
      return it->second;
    }

    // Transitive closure of the relation, one bitmask per element.
    std::vector<std::uint64_t> reachability(Object const& x) {
      std::vector<std::uint64_t> reach = x.rel;
      bool                       changed = true;
      while (changed) {
        changed = false;
        for (int i = 0; i < x.card[0]; ++i) {
          std::uint64_t next = reach[i];
          auto          row  = reach[i];
          while (row != 0) {
            int j = std::countr_zero(row);
            row &= row - 1;
            next |= reach[j];
          }
          if (next != reach[i]) {
            reach[i] = next;
            changed  = true;
          }
        }
      }
      return reach;
    }

  }  // namespace

  bool is_acyclic(Object const& x) {
    auto reach = reachability(x);
    for (int i = 0; i < x.card[0]; ++i) {
      for (int j = i + 1; j < x.card[0]; ++j) {
        if (((reach[i] >> j) & 1U) && ((reach[j] >> i) & 1U)) {
          return false;
        }
      }
    }
    return true;
  }

  bool FinSet::admissible(Morphism const& m) const {
    return is_mono(m);
  }

  std::vector<ObjRef> FinSet::objects(int bound) const {
    return cached(Kind::fin_set, bound, [](Kind, int b) {
      std::vector<ObjRef> result;
      for (int n = 0; n <= b; ++n) {
        result.push_back(make_set(n));
      }
      return result;
    });
  }

  bool FinGraph::admissible(Morphism const& m) const {
    return is_mono(m);
  }

  std::vector<ObjRef> FinGraph::objects(int bound) const {
    return cached(Kind::fin_graph, bound, [](Kind, int b) { return enumerate_graphs(b); });
  }

  bool RelSet::admissible(Morphism const&) const {
    return true;
  }

  std::vector<ObjRef> RelSet::objects(int bound) const {
    return cached(Kind::rel_set, bound, enumerate_relations);
  }

  void AcyclicRel::validate(Object const& x) const {
    Category::validate(x);
    for (int i = 0; i < x.card[0]; ++i) {
      if (!x.related(i, i)) {
        throw Error(ErrorKind::invalid_object, "relation is not reflexive");
      }
    }
    if (!is_acyclic(x)) {
      throw Error(ErrorKind::invalid_object, "relation has a non-trivial cycle");
    }
  }

  bool AcyclicRel::admissible(Morphism const&) const {
    return true;
  }

  bool AcyclicRel::is_epi(Morphism const& f) const {
    // f is epi iff the two legs of its cokernel pair coincide
    auto cokernel = pushout(f, f);
    return cokernel.first.map == cokernel.second.map;
  }

  std::vector<ObjRef> AcyclicRel::objects(int bound) const {
    return cached(Kind::acyclic_rel, bound, enumerate_relations);
  }

  Morphism AcyclicRel::reflect(ObjRef const& x) const {
    ObjRef           current = x;
    std::vector<int> total(x->card[0]);
    std::iota(total.begin(), total.end(), 0);
    while (true) {
      Object const& obj   = *current;
      int const     n     = obj.card[0];
      auto          reach = reachability(obj);
      std::vector<int> cls(n, -1);
      int              count = 0;
      for (int i = 0; i < n; ++i) {
        if (cls[i] != -1) {
          continue;
        }
        cls[i] = count;
        for (int j = i + 1; j < n; ++j) {
          if (((reach[i] >> j) & 1U) && ((reach[j] >> i) & 1U)) {
            cls[j] = count;
          }
        }
        ++count;
      }
      bool reflexive = true;
      for (int i = 0; i < n; ++i) {
        reflexive = reflexive && obj.related(i, i);
      }
      if (count == n && reflexive) {
        break;
      }
      Object q;
      q.kind = Kind::acyclic_rel;
      q.card = {count};
      q.rel.assign(count, 0);
      for (int c = 0; c < count; ++c) {
        q.rel[c] |= std::uint64_t{1} << c;
      }
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (obj.related(i, j)) {
            q.rel[cls[i]] |= std::uint64_t{1} << cls[j];
          }
        }
      }
      if (obj.has_labels()) {
        q.labels.assign(1, std::vector<std::string>(count));
        for (int i = n - 1; i >= 0; --i) {
          q.labels[0][cls[i]] = obj.labels[0][i];
        }
      }
      for (auto& t : total) {
        t = cls[t];
      }
      current = finish_object(std::move(q));
    }
    if (current == x) {
      return identity(x);
    }
    return Morphism{x, current, std::move(total)};
  }

  FinSet const& finset() {
    static FinSet const instance;
    return instance;
  }

  FinGraph const& fingraph() {
    static FinGraph const instance;
    return instance;
  }

  RelSet const& relset() {
    static RelSet const instance;
    return instance;
  }

  AcyclicRel const& acyclicrel() {
    static AcyclicRel const instance;
    return instance;
  }

  Category const* find_instance(std::string_view name) {
    if (name == "finset") {
      return &finset();
    }
    if (name == "fingraph") {
      return &fingraph();
    }
    if (name == "relset") {
      return &relset();
    }
    if (name == "acyclicrel") {
      return &acyclicrel();
    }
    return nullptr;
  }

  Category const& instance_for(Kind kind) {
    switch (kind) {
      case Kind::fin_set:
        return finset();
      case Kind::fin_graph:
        return fingraph();
      case Kind::rel_set:
        return relset();
      case Kind::acyclic_rel:
        return acyclicrel();
    }
    return finset();
  }

  std::vector<Category const*> all_instances() {
    return {&finset(), &fingraph(), &relset(), &acyclicrel()};
  }

}  // namespace adh
