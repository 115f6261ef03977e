#ifndef FACECOVER_FACECOVER_HPP
#define FACECOVER_FACECOVER_HPP

#include "facecover/build.hpp"
#include "facecover/cut.hpp"
#include "facecover/dichotomy.hpp"
#include "facecover/embedding.hpp"
#include "facecover/error.hpp"
#include "facecover/faces.hpp"
#include "facecover/gem.hpp"
#include "facecover/generators.hpp"
#include "facecover/graph.hpp"
#include "facecover/io.hpp"
#include "facecover/model.hpp"
#include "facecover/oracles.hpp"
#include "facecover/pipeline.hpp"
#include "facecover/schnyder.hpp"
#include "facecover/setcover.hpp"
#include "facecover/svg.hpp"
#include "facecover/topology.hpp"

#endif  // FACECOVER_FACECOVER_HPP
