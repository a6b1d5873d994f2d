#pragma once

// Umbrella header: exact q-series arithmetic, the principal-picture basis
// of affine sl2, quasi-particle enumeration, character formulas and the
// identity verification suite.

#include "qpchar/characters.hpp"
#include "qpchar/combinat.hpp"
#include "qpchar/liealg.hpp"
#include "qpchar/series.hpp"
#include "qpchar/verify.hpp"
