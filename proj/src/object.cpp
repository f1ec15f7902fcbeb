#include "adhesive/object.hpp"

#include <bit>
#include <numeric>

#include "adhesive/error.hpp"

namespace adh {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::not_composable:
        return "NotComposable";
      case ErrorKind::not_commuting:
        return "NotCommuting";
      case ErrorKind::type_mismatch:
        return "TypeMismatch";
      case ErrorKind::edge_mismatch:
        return "EdgeMismatch";
      case ErrorKind::invalid_object:
        return "InvalidObject";
      case ErrorKind::invalid_morphism:
        return "InvalidMorphism";
      case ErrorKind::unsupported_limit:
        return "UnsupportedLimit";
      case ErrorKind::unsupported_colimit:
        return "UnsupportedColimit";
      case ErrorKind::not_admissible:
        return "NotAdmissible";
      case ErrorKind::not_regular:
        return "NotRegular";
      case ErrorKind::not_a_pushout:
        return "NotAPushout";
      case ErrorKind::precondition_unmet:
        return "PreconditionUnmet";
      case ErrorKind::invalid_square:
        return "InvalidSquare";
      case ErrorKind::missing_kernel_pair:
        return "MissingKernelPair";
      case ErrorKind::hypothesis_failed:
        return "HypothesisFailed";
      case ErrorKind::closure_overflow:
        return "ClosureOverflow";
      case ErrorKind::parse_error:
        return "ParseError";
    }
    return "Unknown";
  }

  std::string_view to_string(Kind kind) noexcept {
    switch (kind) {
      case Kind::fin_set:
        return "finset";
      case Kind::fin_graph:
        return "fingraph";
      case Kind::rel_set:
        return "relset";
      case Kind::acyclic_rel:
        return "acyclicrel";
    }
    return "unknown";
  }

  int Object::total_size() const noexcept {
    return std::accumulate(card.begin(), card.end(), 0);
  }

  int Object::relation_size() const noexcept {
    int result = 0;
    for (auto row : rel) {
      result += std::popcount(row);
    }
    return result;
  }

  std::string Object::label(int sort, int i) const {
    if (has_labels()) {
      return labels[sort][i];
    }
    return std::to_string(i);
  }

  bool Object::same_structure(Object const& other) const noexcept {
    return kind == other.kind && card == other.card && src == other.src
           && tgt == other.tgt && rel == other.rel;
  }

  ObjRef make_set(int n) {
    Object x;
    x.kind = Kind::fin_set;
    x.card = {n};
    return std::make_shared<Object const>(std::move(x));
  }

  ObjRef make_graph(int vertices, std::vector<std::pair<int, int>> const& edges) {
    Object x;
    x.kind = Kind::fin_graph;
    x.card = {vertices, static_cast<int>(edges.size())};
    for (auto [s, t] : edges) {
      x.src.push_back(s);
      x.tgt.push_back(t);
    }
    return std::make_shared<Object const>(std::move(x));
  }

  ObjRef make_relation(Kind kind, int n, std::vector<std::pair<int, int>> const& pairs) {
    if (n > max_relation_carrier) {
      throw Error(ErrorKind::invalid_object, "relation carrier too large");
    }
    Object x;
    x.kind = kind;
    x.card = {n};
    x.rel.assign(n, 0);
    if (kind == Kind::acyclic_rel) {
      for (int i = 0; i < n; ++i) {
        x.rel[i] |= std::uint64_t{1} << i;
      }
    }
    for (auto [i, j] : pairs) {
      x.rel[i] |= std::uint64_t{1} << j;
    }
    return std::make_shared<Object const>(std::move(x));
  }

  bool same_object(ObjRef const& x, ObjRef const& y) noexcept {
    return x == y || x->same_structure(*y);
  }

  bool operator==(Morphism const& f, Morphism const& g) {
    return f.map == g.map && same_object(f.dom, g.dom) && same_object(f.cod, g.cod);
  }

}  // namespace adh
