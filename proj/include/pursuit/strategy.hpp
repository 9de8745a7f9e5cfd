#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/spaces.hpp"

namespace pursuit {

enum class Side { robber, cops };

// Decision rule for one side: (space, current position, step length t,
// step index n) -> destination(s). A robber rule returns one point, a cops
// rule one point per cop. When the cops decide, the position already holds
// the robber's new location. Rules must stay within distance t.
using MoveRule = std::function<std::vector<Point>(const Space&, const Position&, double t, int n)>;

struct Strategy {
  std::string name;
  Side side = Side::robber;
  MoveRule rule;
};

}  // namespace pursuit
