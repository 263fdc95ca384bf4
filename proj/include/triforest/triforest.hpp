#ifndef TRIFOREST_TRIFOREST_HPP
#define TRIFOREST_TRIFOREST_HPP

#include <triforest/batch.hpp>
#include <triforest/connectivity.hpp>
#include <triforest/dual.hpp>
#include <triforest/embedding.hpp>
#include <triforest/error.hpp>
#include <triforest/graph.hpp>
#include <triforest/io.hpp>
#include <triforest/named_graphs.hpp>
#include <triforest/oracles.hpp>
#include <triforest/partition.hpp>
#include <triforest/planarity.hpp>
#include <triforest/rng.hpp>
#include <triforest/tightness.hpp>
#include <triforest/triangulation.hpp>
#include <triforest/tutte.hpp>

#endif  // TRIFOREST_TRIFOREST_HPP
