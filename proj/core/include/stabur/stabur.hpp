#pragma once

#include "stabur/dyadic.hpp"
#include "stabur/entropy.hpp"
#include "stabur/errors.hpp"
#include "stabur/gf2.hpp"
#include "stabur/graphstate.hpp"
#include "stabur/io.hpp"
#include "stabur/oracle.hpp"
#include "stabur/pauli.hpp"
#include "stabur/random.hpp"
#include "stabur/rng.hpp"
#include "stabur/stabgroup.hpp"
#include "stabur/urelations.hpp"
