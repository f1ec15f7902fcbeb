#pragma once

#include <memory>
#include <string_view>

#include "category.hpp"

namespace adh {

  // Finite sets and functions. Pushouts are admitted along monos.
  class FinSet final : public Category {
   public:
    Kind kind() const noexcept override {
      return Kind::fin_set;
    }
    std::string_view name() const noexcept override {
      return "finset";
    }
    bool                admissible(Morphism const& m) const override;
    std::vector<ObjRef> objects(int bound) const override;
  };

  // Finite directed multigraphs (presheaves on the parallel pair).
  class FinGraph final : public Category {
   public:
    Kind kind() const noexcept override {
      return Kind::fin_graph;
    }
    std::string_view name() const noexcept override {
      return "fingraph";
    }
    bool                admissible(Morphism const& m) const override;
    std::vector<ObjRef> objects(int bound) const override;
  };

  // Sets with an arbitrary binary relation and relation-preserving maps.
  class RelSet : public Category {
   public:
    Kind kind() const noexcept override {
      return Kind::rel_set;
    }
    std::string_view name() const noexcept override {
      return "relset";
    }
    bool                admissible(Morphism const& m) const override;
    std::vector<ObjRef> objects(int bound) const override;
  };

  // Sets with a reflexive relation having no non-trivial cycles. Colimits
  // are computed in relations and then reflected by collapsing strongly
  // connected components.
  class AcyclicRel final : public Category {
   public:
    Kind kind() const noexcept override {
      return Kind::acyclic_rel;
    }
    std::string_view name() const noexcept override {
      return "acyclicrel";
    }
    void                validate(Object const& x) const override;
    bool                admissible(Morphism const& m) const override;
    bool                is_epi(Morphism const& f) const override;
    std::vector<ObjRef> objects(int bound) const override;
    Morphism            reflect(ObjRef const& x) const override;
  };

  // True if no element lies on a relation cycle through a different element.
  bool is_acyclic(Object const& x);

  FinSet const&     finset();
  FinGraph const&   fingraph();
  RelSet const&     relset();
  AcyclicRel const& acyclicrel();

  // Lookup by CLI name ("finset", "fingraph", "relset", "acyclicrel");
  // nullptr if unknown.
  Category const* find_instance(std::string_view name);
  Category const& instance_for(Kind kind);
  // The four instances in Kind order.
  std::vector<Category const*> all_instances();

}  // namespace adh
