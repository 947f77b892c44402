#pragma once

// Umbrella header.

#include "cutplane/calculus.hpp"
#include "cutplane/complex.hpp"
#include "cutplane/error.hpp"
#include "cutplane/focal.hpp"
#include "cutplane/function_id.hpp"
#include "cutplane/inverse_hyperbolic.hpp"
#include "cutplane/inverse_trig.hpp"
#include "cutplane/literal.hpp"
#include "cutplane/oracle.hpp"
#include "cutplane/quadrature.hpp"
#include "cutplane/sqrt_branches.hpp"
