#ifndef SERIES_FORGE_HPP
#define SERIES_FORGE_HPP

// Everything except the CLI and serialization layers, which need the
// vendored CLI11 and nlohmann/json headers.

#include <series_forge/base_series.hpp>
#include <series_forge/bell.hpp>
#include <series_forge/exact_functions.hpp>
#include <series_forge/expansions.hpp>
#include <series_forge/identities.hpp>
#include <series_forge/logsine.hpp>
#include <series_forge/oracles.hpp>
#include <series_forge/pi_poly.hpp>
#include <series_forge/q_value.hpp>
#include <series_forge/quadrature.hpp>
#include <series_forge/rational.hpp>
#include <series_forge/series.hpp>
#include <series_forge/stirling.hpp>

#endif
