#pragma once

#include "ordpoly/combinat.hpp"
#include "ordpoly/polynomial.hpp"
#include "ordpoly/multiplex.hpp"
#include "ordpoly/ordinary.hpp"
#include "ordpoly/lattice.hpp"
#include "ordpoly/shelling.hpp"
#include "ordpoly/triangulation.hpp"
#include "ordpoly/hvector.hpp"
#include "ordpoly/bijection.hpp"
#include "ordpoly/verify.hpp"
