#pragma once

// Convex analysis in pseudo-Euclidean spaces: bilinear forms of arbitrary
// signature, polyhedral convex functions and conjugates, finite monotone sets
// with their Fitzpatrick functions and projections, singularity detection,
// and constructive c-c surface coverings of the singular sets.

#include "sscover/covering.hpp"
#include "sscover/generators.hpp"
#include "sscover/instance.hpp"
#include "sscover/monotone.hpp"
#include "sscover/pipeline.hpp"
#include "sscover/polyconvex.hpp"
#include "sscover/pseudo_space.hpp"
#include "sscover/rng.hpp"
#include "sscover/simplex.hpp"
#include "sscover/singularity.hpp"
#include "sscover/types.hpp"
