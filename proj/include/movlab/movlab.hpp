#pragma once

#include "movlab/errors.hpp"
#include "movlab/experiments.hpp"
#include "movlab/fixtures.hpp"
#include "movlab/flow.hpp"
#include "movlab/generators.hpp"
#include "movlab/mov.hpp"
#include "movlab/rng.hpp"
#include "movlab/solutions.hpp"
#include "movlab/tournament.hpp"
#include "movlab/verification.hpp"
