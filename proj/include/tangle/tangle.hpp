#pragma once

#include "tangle/boolmat.hpp"
#include "tangle/completeness.hpp"
#include "tangle/error.hpp"
#include "tangle/forest.hpp"
#include "tangle/invariants.hpp"
#include "tangle/laws.hpp"
#include "tangle/lomonoid.hpp"
#include "tangle/normalize.hpp"
#include "tangle/operators.hpp"
#include "tangle/oracle.hpp"
#include "tangle/primes.hpp"
#include "tangle/relations.hpp"
#include "tangle/sampling.hpp"
#include "tangle/state.hpp"
#include "tangle/words.hpp"
