#pragma once

// Umbrella header: exact differential polynomial algebras with commuting
// derivations, the free Novikov algebra realized inside them, derivations,
// endomorphisms and exponential automorphisms of both, the abelianization
// functor onto commutative polynomial algebras, and the identity/property
// check suites. Individual headers can be included on their own; this one
// pulls in everything except the JSON serialization layer (json_io.hpp),
// which requires nlohmann/json and is opt-in.

#include "novikov/abelian.hpp"
#include "novikov/checks.hpp"
#include "novikov/format.hpp"
#include "novikov/maps.hpp"
#include "novikov/novikov_algebra.hpp"
#include "novikov/parse.hpp"
#include "novikov/rational.hpp"
#include "novikov/ring.hpp"
