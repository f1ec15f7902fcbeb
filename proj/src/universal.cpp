#include "adhesive/universal.hpp"

#include "adhesive/serialize.hpp"

namespace adh {

  namespace {

    void require_square(Category const& cat, Square const& sq) {
      if (!well_typed(sq)) {
        throw Error(ErrorKind::not_composable, "square edges do not typecheck");
      }
      if (!commutes(cat, sq)) {
        throw Error(ErrorKind::not_commuting, "square does not commute");
      }
    }

    // Reason the comparison map fails to be an isomorphism, or empty.
    std::string iso_defect(Category const& cat, Morphism const& w) {
      if (!cat.is_surjective(w)) {
        return "comparison not surjective";
      }
      if (!cat.is_mono(w)) {
        return "comparison not injective";
      }
      if (!cat.is_iso(w)) {
        return "comparison does not reflect structure";
      }
      return {};
    }

    nlohmann::json square_data(Category const& cat, Square const& sq) {
      return nlohmann::json{{"square", square_diagram(cat, sq).to_json()}};
    }

  }  // namespace

  Witness is_pullback(Category const& cat, Square const& sq) {
    require_square(cat, sq);
    auto cone = cat.pullback(sq.g, sq.n);
    auto u    = cat.lift_to_pullback(cone, sq.m, sq.f);
    if (!u) {
      // cannot happen for a commuting square in a concrete instance
      return failed("is_pullback", "no comparison map", square_data(cat, sq));
    }
    auto defect = iso_defect(cat, *u);
    if (defect.empty()) {
      return passed("is_pullback");
    }
    return failed("is_pullback", defect, square_data(cat, sq));
  }

  Witness is_pushout(Category const& cat, Square const& sq) {
    require_square(cat, sq);
    auto cocone = cat.pushout(sq.m, sq.f);
    auto w      = cat.lift_from_pushout(cocone, sq.g, sq.n);
    if (!w) {
      return failed("is_pushout", "no comparison map", square_data(cat, sq));
    }
    auto defect = iso_defect(cat, *w);
    if (defect.empty()) {
      return passed("is_pushout");
    }
    return failed("is_pushout", defect, square_data(cat, sq));
  }

  Square paste(Category const& cat, Square const& left, Square const& right) {
    if (!(left.n == right.m)) {
      throw Error(ErrorKind::edge_mismatch, "squares do not share the middle edge");
    }
    return Square{left.m, cat.compose(right.f, left.f), cat.compose(right.g, left.g), right.n};
  }

  Witness paste_check(Category const& cat,
                      Square const&   left,
                      Square const&   right,
                      PasteMode       mode) {
    auto outer = paste(cat, left, right);
    bool const pullbacks = mode == PasteMode::pullback;
    auto test = [&](Square const& sq) {
      return pullbacks ? is_pullback(cat, sq).pass : is_pushout(cat, sq).pass;
    };
    bool const l = test(left);
    bool const r = test(right);
    bool const o = test(outer);
    bool const premise = pullbacks ? r : l;
    bool const inner   = pullbacks ? l : r;
    std::string check  = pullbacks ? "paste_pullback" : "paste_pushout";
    if (!premise || inner == o) {
      return passed(check);
    }
    nlohmann::json data;
    data["left"]   = square_diagram(cat, left).to_json();
    data["right"]  = square_diagram(cat, right).to_json();
    data["verdicts"] = {{"left", l}, {"right", r}, {"outer", o}};
    return failed(check, "pasting biconditional violated", data);
  }

}  // namespace adh
