#pragma once

// Umbrella header: dense complex matrix analysis built around sphere integrals
// of the numerical values <A xi, xi> — symmetric-power traces, the unitarily
// and weakly unitarily invariant norm families they induce, gauge-function
// inequalities, polarization of mixed moments, and a seeded Monte Carlo
// oracle for every integral.

#include "matnorm/errors.hpp"
#include "matnorm/gauge.hpp"
#include "matnorm/io.hpp"
#include "matnorm/linalg.hpp"
#include "matnorm/moment_value.hpp"
#include "matnorm/montecarlo.hpp"
#include "matnorm/partitions.hpp"
#include "matnorm/polarization.hpp"
#include "matnorm/rng.hpp"
#include "matnorm/sym_trace.hpp"
#include "matnorm/ui_norms.hpp"
#include "matnorm/wui_moments.hpp"
