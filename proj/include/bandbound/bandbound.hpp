#pragma once

#include "bandbound/bounds.hpp"
#include "bandbound/builders.hpp"
#include "bandbound/eig.hpp"
#include "bandbound/errors.hpp"
#include "bandbound/geometry.hpp"
#include "bandbound/intervals.hpp"
#include "bandbound/matrix.hpp"
#include "bandbound/oracle.hpp"
#include "bandbound/presets.hpp"
#include "bandbound/report.hpp"
#include "bandbound/spec_io.hpp"
#include "bandbound/symbol.hpp"
