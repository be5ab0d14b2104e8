#pragma once

#include "asymptotic.hpp"
#include "bigfloat.hpp"
#include "bounds.hpp"
#include "exact_integral.hpp"
#include "quadrature.hpp"
#include "rational.hpp"
#include "reference.hpp"
#include "report.hpp"
#include "schneider.hpp"
#include "series.hpp"
