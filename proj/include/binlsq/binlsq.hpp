// Umbrella header: the whole library.
#pragma once

#include "binlsq/baseline.hpp"
#include "binlsq/bench.hpp"
#include "binlsq/errors.hpp"
#include "binlsq/generator.hpp"
#include "binlsq/io.hpp"
#include "binlsq/linalg.hpp"
#include "binlsq/matrix.hpp"
#include "binlsq/oracle.hpp"
#include "binlsq/problem.hpp"
#include "binlsq/rng.hpp"
#include "binlsq/serialize.hpp"
#include "binlsq/solver.hpp"
