// evaluate.hpp
// Single dispatch point from a Representation tag to its evaluator.
#pragma once

#include "rieszwave/types.hpp"

namespace rieszwave {

double evaluate(Representation rep, const EvalPoint& point, const PhysicalParams& params,
                const SeriesControls& series = {}, const QuadratureControls& quad = {},
                EvalWarnings* warnings = nullptr);

}  // namespace rieszwave
