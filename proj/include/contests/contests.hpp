#pragma once

#include "contests/bimatrix.hpp"
#include "contests/choice_set.hpp"
#include "contests/contest_spec.hpp"
#include "contests/identity_check.hpp"
#include "contests/impact.hpp"
#include "contests/json_io.hpp"
#include "contests/oracle.hpp"
#include "contests/payoff.hpp"
#include "contests/random.hpp"
#include "contests/render.hpp"
#include "contests/solver.hpp"
#include "contests/types.hpp"
