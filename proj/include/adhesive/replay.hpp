#pragma once

#include <json.hpp>

#include "diagram.hpp"

namespace adh {

  // Re-runs the check named by a serialized witness on the data it embeds
  // and returns the fresh verdict. Throws parse_error for an unknown check
  // or missing data.
  Witness replay(nlohmann::json const& witness);

  // A failing witness replays if re-running its check fails again with the
  // same check name.
  bool replays(nlohmann::json const& witness);

  // Replays every witness found at any depth of a report. Each entry is
  // {check, recorded, replayed}; a pass replays if it passes again, a fail
  // if replays() holds.
  nlohmann::json replay_all(nlohmann::json const& report);

  // Serializes w with `inputs` merged into its data, so that a passing
  // verdict can be replayed too. Keys already present are kept.
  nlohmann::json replayable(Witness w, nlohmann::json const& inputs);

}  // namespace adh
