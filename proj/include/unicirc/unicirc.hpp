#pragma once

#include "unicirc/blaschke.hpp"
#include "unicirc/degree.hpp"
#include "unicirc/io.hpp"
#include "unicirc/kernels.hpp"
#include "unicirc/maps.hpp"
#include "unicirc/norms.hpp"
#include "unicirc/pipeline.hpp"
#include "unicirc/report.hpp"
#include "unicirc/spectrum.hpp"
#include "unicirc/suite.hpp"
