// spincoh.hpp — umbrella header: exact Gibbs states of coupled two-level
// systems and the local quantum coherence they carry.

#pragma once

#include "spincoh/analytic.hpp"
#include "spincoh/coherence.hpp"
#include "spincoh/models.hpp"
#include "spincoh/pauli.hpp"
#include "spincoh/sweep.hpp"
#include "spincoh/thermal.hpp"
#include "spincoh/verify.hpp"
