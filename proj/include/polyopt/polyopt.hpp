#pragma once

#include "polyopt/rational.hpp"
#include "polyopt/linalg.hpp"
#include "polyopt/lp.hpp"
#include "polyopt/polyhedron.hpp"
#include "polyopt/setopt.hpp"
#include "polyopt/vlp.hpp"
#include "polyopt/io.hpp"
