#ifndef TSQ_TSQ_HPP
#define TSQ_TSQ_HPP

#include "tsq/analysis.hpp"
#include "tsq/baselines.hpp"
#include "tsq/bigelem.hpp"
#include "tsq/core.hpp"
#include "tsq/datagen.hpp"
#include "tsq/instrument.hpp"

#endif  // TSQ_TSQ_HPP
