#pragma once

#include "dynkin/identities.hpp"
#include "dynkin/orbits.hpp"
#include "dynkin/rational.hpp"
#include "dynkin/reps.hpp"
#include "dynkin/rootsys.hpp"
#include "dynkin/sl2index.hpp"
#include "dynkin/table.hpp"
#include "dynkin/verify.hpp"
