#pragma once

#include "zetalab/errors.hpp"
#include "zetalab/complex_math.hpp"
#include "zetalab/ntheory.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/series.hpp"
#include "zetalab/zeta.hpp"
#include "zetalab/zeros.hpp"
#include "zetalab/audit.hpp"
#include "zetalab/report_io.hpp"
