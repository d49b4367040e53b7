#pragma once

#include "cpsurf/census.hpp"
#include "cpsurf/certificate.hpp"
#include "cpsurf/complex.hpp"
#include "cpsurf/cycles.hpp"
#include "cpsurf/decomp.hpp"
#include "cpsurf/error.hpp"
