#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace adh {

  // Which concrete category an object or morphism belongs to.
  enum class Kind : std::uint8_t { fin_set, fin_graph, rel_set, acyclic_rel };

  std::string_view to_string(Kind kind) noexcept;

  // Number of carrier sorts: graphs have vertices (sort 0) and edges
  // (sort 1), everything else has a single sort.
  constexpr int sort_count(Kind kind) noexcept {
    return kind == Kind::fin_graph ? 2 : 1;
  }

  inline constexpr int max_relation_carrier = 64;

  // A finite structured set. Elements of each sort are 0..card[s]-1.
  // Only the structure relevant to `kind` is populated:
  //   fin_graph              src/tgt: edge -> vertex
  //   rel_set, acyclic_rel   rel[i] is the bitmask {j | i R j}
  // Labels are optional and only used for I/O; equality ignores them.
  struct Object {
    Kind                                  kind = Kind::fin_set;
    std::vector<int>                      card;
    std::vector<int>                      src;
    std::vector<int>                      tgt;
    std::vector<std::uint64_t>            rel;
    std::vector<std::vector<std::string>> labels;

    int size(int sort = 0) const noexcept {
      return card[sort];
    }

    int total_size() const noexcept;

    bool related(int i, int j) const noexcept {
      return (rel[i] >> j) & 1U;
    }

    // Number of related pairs (relational kinds only).
    int relation_size() const noexcept;

    bool has_labels() const noexcept {
      return !labels.empty();
    }

    std::string label(int sort, int i) const;

    bool same_structure(Object const& other) const noexcept;
  };

  using ObjRef = std::shared_ptr<Object const>;

  ObjRef make_set(int n);
  ObjRef make_graph(int vertices, std::vector<std::pair<int, int>> const& edges);
  ObjRef make_relation(Kind kind,
                       int n,
                       std::vector<std::pair<int, int>> const& pairs);

  bool same_object(ObjRef const& x, ObjRef const& y) noexcept;

  // A structure-preserving map. `map` is flat: entries for sort 0 first,
  // then sort 1, indexed by the domain's carriers.
  struct Morphism {
    ObjRef           dom;
    ObjRef           cod;
    std::vector<int> map;

    int offset(int sort) const noexcept {
      return sort == 0 ? 0 : dom->card[0];
    }

    int operator()(int sort, int i) const noexcept {
      return map[offset(sort) + i];
    }

    int operator()(int i) const noexcept {
      return map[i];
    }

    Kind kind() const noexcept {
      return dom->kind;
    }
  };

  // Extensional equality: same endpoints (structurally) and same tables.
  bool operator==(Morphism const& f, Morphism const& g);

}  // namespace adh
