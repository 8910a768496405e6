#pragma once

#include "tunneling/algebra.hpp"
#include "tunneling/barrier.hpp"
#include "tunneling/errors.hpp"
#include "tunneling/oracles.hpp"
#include "tunneling/quadrature.hpp"
#include "tunneling/scattering.hpp"
#include "tunneling/sweep.hpp"
#include "tunneling/times.hpp"
#include "tunneling/verify.hpp"
#include "tunneling/version.hpp"
