#pragma once

#include "boolgb/construction.hpp"
#include "boolgb/errors.hpp"
#include "boolgb/groebner.hpp"
#include "boolgb/monomial.hpp"
#include "boolgb/oracle.hpp"
#include "boolgb/polynomial.hpp"
