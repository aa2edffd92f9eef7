#ifndef TEMPSPAN_TEMPSPAN_HPP
#define TEMPSPAN_TEMPSPAN_HPP

#include "tempspan/algorithms.hpp"
#include "tempspan/diagnostics.hpp"
#include "tempspan/generators.hpp"
#include "tempspan/graph.hpp"
#include "tempspan/io.hpp"
#include "tempspan/oracle.hpp"
#include "tempspan/reach.hpp"
#include "tempspan/reduce.hpp"
#include "tempspan/transform.hpp"
#include "tempspan/types.hpp"
#include "tempspan/version.hpp"

#endif
