#pragma once

#include "lightnet/catalog.hpp"
#include "lightnet/classify.hpp"
#include "lightnet/embedding.hpp"
#include "lightnet/incidence.hpp"
#include "lightnet/polyring/factor.hpp"
#include "lightnet/polyring/groebner.hpp"
#include "lightnet/polyring/ideal.hpp"
#include "lightnet/polyring/minimal_primes.hpp"
#include "lightnet/polyring/poly_io.hpp"
#include "lightnet/polyring/polynomial.hpp"
#include "lightnet/quasigroup.hpp"
