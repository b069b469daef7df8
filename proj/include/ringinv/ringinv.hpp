#pragma once

/// Umbrella header: exact generalized inverses in unital rings with involution.

#include "classify.hpp"
#include "diophantine.hpp"
#include "drazin.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "gaussian.hpp"
#include "io.hpp"
#include "klein.hpp"
#include "matrix.hpp"
#include "modular.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "scalar.hpp"
#include "weak_group.hpp"
