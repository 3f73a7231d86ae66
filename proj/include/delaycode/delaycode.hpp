#pragma once

#include "delaycode/core.hpp"
#include "delaycode/cost.hpp"
#include "delaycode/decodability.hpp"
#include "delaycode/errors.hpp"
#include "delaycode/followsets.hpp"
#include "delaycode/io.hpp"
#include "delaycode/linalg.hpp"
#include "delaycode/markov.hpp"
#include "delaycode/optimality.hpp"
#include "delaycode/reduce.hpp"
#include "delaycode/search.hpp"
#include "delaycode/semantics.hpp"
