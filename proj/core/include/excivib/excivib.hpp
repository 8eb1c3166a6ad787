#pragma once

#include "excivib/band.hpp"
#include "excivib/config.hpp"
#include "excivib/couplings.hpp"
#include "excivib/errors.hpp"
#include "excivib/evolve.hpp"
#include "excivib/fock.hpp"
#include "excivib/hamiltonian.hpp"
#include "excivib/params.hpp"
#include "excivib/polaron.hpp"
#include "excivib/relaxation.hpp"
#include "excivib/spectrum.hpp"
#include "excivib/units.hpp"
