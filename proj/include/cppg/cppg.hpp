#pragma once

#include "cppg/corpus.hpp"
#include "cppg/embedding.hpp"
#include "cppg/errors.hpp"
#include "cppg/finite_group.hpp"
#include "cppg/fixtures.hpp"
#include "cppg/genus_search.hpp"
#include "cppg/graph_analysis.hpp"
#include "cppg/graph_io.hpp"
#include "cppg/group_spec.hpp"
#include "cppg/isomorphism.hpp"
#include "cppg/number_theory.hpp"
#include "cppg/oracle.hpp"
#include "cppg/planarity.hpp"
#include "cppg/power_graph.hpp"
#include "cppg/simple_graph.hpp"
#include "cppg/spec_parser.hpp"
#include "cppg/verification.hpp"
