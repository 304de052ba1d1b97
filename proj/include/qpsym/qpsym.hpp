#pragma once

#include "qpsym/errors.hpp"
#include "qpsym/exactmath/hnf.hpp"
#include "qpsym/exactmath/matrix.hpp"
#include "qpsym/exactmath/minpoly.hpp"
#include "qpsym/exactmath/modp.hpp"
#include "qpsym/exactmath/polynomial.hpp"
#include "qpsym/exactmath/rational.hpp"
#include "qpsym/exactmath/sturm.hpp"
#include "qpsym/numberfield.hpp"
#include "qpsym/lattice.hpp"
#include "qpsym/units.hpp"
#include "qpsym/multiplier.hpp"
#include "qpsym/conjugacy.hpp"
#include "qpsym/io/flowfile.hpp"
#include "qpsym/io/report.hpp"
#include "qpsym/reference_claims.hpp"
