#pragma once

#include "a1h/errors.hpp"
#include "a1h/scalar.hpp"
#include "a1h/ring.hpp"
#include "a1h/polynomial.hpp"
#include "a1h/parse.hpp"
#include "a1h/groebner.hpp"
#include "a1h/ideal.hpp"
#include "a1h/local_algebra.hpp"
#include "a1h/nodal_blowup.hpp"
#include "a1h/homotopy.hpp"
#include "a1h/serialize.hpp"
