#pragma once

#include <functional>

#include "gmis/greedy.hpp"

namespace gmis {

ExecutionTrace best_cubic_start(const Graph& h, const std::function<ExecutionTrace(int)>& from);
void check_subcubic(const Graph& g);

}  // namespace gmis
