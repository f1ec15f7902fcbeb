#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace adh {

  // A scripted reproduction. `observed` is true iff the expected outcome
  // was seen; the report embeds every witness involved.
  struct Reproduction {
    std::string    name;
    bool           observed = false;
    nlohmann::json report;
  };

  std::vector<std::string> reproduction_names();

  // Throws parse_error for an unknown name. The randomized scripts
  // (basic-lemma, factorization) draw 200 cases from `seed`.
  Reproduction reproduce(std::string_view name, unsigned seed = 7, int bound = 3);

}  // namespace adh
