#pragma once

#include "gfix/analysis.hpp"
#include "gfix/contractions.hpp"
#include "gfix/convexity.hpp"
#include "gfix/errors.hpp"
#include "gfix/gmetric.hpp"
#include "gfix/mann.hpp"
#include "gfix/point.hpp"
#include "gfix/rng.hpp"
#include "gfix/sampling.hpp"
#include "gfix/spaces.hpp"
