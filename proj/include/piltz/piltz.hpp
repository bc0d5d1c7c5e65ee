#pragma once

#include "piltz/bessel.hpp"
#include "piltz/checks.hpp"
#include "piltz/coefficients.hpp"
#include "piltz/common.hpp"
#include "piltz/field.hpp"
#include "piltz/gamma.hpp"
#include "piltz/harness.hpp"
#include "piltz/identities.hpp"
#include "piltz/meijer.hpp"
#include "piltz/rational.hpp"
#include "piltz/report.hpp"
#include "piltz/zeta.hpp"
