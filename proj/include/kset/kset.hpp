#ifndef KSET_KSET_HPP
#define KSET_KSET_HPP

// Umbrella header for the whole library.

#include "kset/cohesion.hpp"
#include "kset/datagen.hpp"
#include "kset/errors.hpp"
#include "kset/eval.hpp"
#include "kset/graph.hpp"
#include "kset/hierarchical.hpp"
#include "kset/io.hpp"
#include "kset/ksets.hpp"
#include "kset/matrix.hpp"
#include "kset/metric.hpp"
#include "kset/partition.hpp"
#include "kset/rng.hpp"
#include "kset/validation.hpp"

#endif  // KSET_KSET_HPP
