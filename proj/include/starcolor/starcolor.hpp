#ifndef starcolor_starcolor_hpp
#define starcolor_starcolor_hpp

#include "starcolor/bigint.hpp"
#include "starcolor/colorer.hpp"
#include "starcolor/coloring.hpp"
#include "starcolor/errors.hpp"
#include "starcolor/exponent.hpp"
#include "starcolor/generators.hpp"
#include "starcolor/graph.hpp"
#include "starcolor/io.hpp"
#include "starcolor/oracles.hpp"
#include "starcolor/star_forest.hpp"
#include "starcolor/trace.hpp"
#include "starcolor/trace_check.hpp"

#endif // starcolor_starcolor_hpp
