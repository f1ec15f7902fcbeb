#include "adhesive/diagram.hpp"

namespace adh {

  bool well_typed(Square const& sq) {
    return same_object(sq.m.dom, sq.f.dom) && same_object(sq.m.cod, sq.g.dom)
           && same_object(sq.f.cod, sq.n.dom) && same_object(sq.g.cod, sq.n.cod);
  }

  bool commutes(Category const& cat, Square const& sq) {
    return cat.compose(sq.n, sq.f).map == cat.compose(sq.g, sq.m).map;
  }

  Square make_square(Category const& cat, Morphism m, Morphism f, Morphism g, Morphism n) {
    Square sq{std::move(m), std::move(f), std::move(g), std::move(n)};
    if (!well_typed(sq)) {
      throw Error(ErrorKind::not_composable, "square edges do not typecheck");
    }
    if (!commutes(cat, sq)) {
      throw Error(ErrorKind::not_commuting, "square does not commute");
    }
    return sq;
  }

  Square transpose(Square const& sq) {
    return Square{sq.f, sq.m, sq.n, sq.g};
  }

  Square Cube::left_face() const {
    return Square{top.m, c, a, bottom.m};
  }

  Square Cube::back_face() const {
    return Square{top.f, c, b, bottom.f};
  }

  Square Cube::front_face() const {
    return Square{top.g, a, d, bottom.g};
  }

  Square Cube::right_face() const {
    return Square{top.n, b, d, bottom.n};
  }

  bool commutes(Category const& cat, Cube const& cube) {
    for (auto const& face : {cube.bottom,
                             cube.top,
                             cube.left_face(),
                             cube.back_face(),
                             cube.front_face(),
                             cube.right_face()}) {
      if (!well_typed(face) || !commutes(cat, face)) {
        return false;
      }
    }
    return true;
  }

  Witness passed(std::string check, int bound) {
    Witness w;
    w.pass  = true;
    w.check = std::move(check);
    w.bound = bound;
    return w;
  }

  Witness failed(std::string check, std::string reason, nlohmann::json data, int bound) {
    Witness w;
    w.pass   = false;
    w.check  = std::move(check);
    w.reason = std::move(reason);
    w.data   = std::move(data);
    w.bound  = bound;
    return w;
  }

  nlohmann::json to_json(Witness const& w) {
    nlohmann::json j;
    j["verdict"] = w.pass ? "pass" : "fail";
    j["check"]   = w.check;
    j["bound"]   = w.bound;
    if (!w.pass) {
      j["reason"] = w.reason;
      j["data"]   = w.data;
    } else if (!w.data.is_null()) {
      j["data"] = w.data;
    }
    return j;
  }

  Witness witness_from_json(nlohmann::json const& j) {
    try {
      Witness w;
      w.pass  = j.at("verdict").get<std::string>() == "pass";
      w.check = j.at("check").get<std::string>();
      w.bound = j.value("bound", 0);
      if (!w.pass) {
        w.reason = j.value("reason", "");
        w.data   = j.at("data");
      } else {
        w.data = j.value("data", nlohmann::json());
      }
      return w;
    } catch (nlohmann::json::exception const& e) {
      throw Error(ErrorKind::parse_error, e.what());
    }
  }

}  // namespace adh
