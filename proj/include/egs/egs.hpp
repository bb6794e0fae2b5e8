#ifndef EGS_EGS_HPP
#define EGS_EGS_HPP

#include "egs/canonical.hpp"
#include "egs/cycles.hpp"
#include "egs/enumerate.hpp"
#include "egs/graph.hpp"
#include "egs/graph6.hpp"
#include "egs/ingest.hpp"
#include "egs/pipeline.hpp"
#include "egs/report.hpp"
#include "egs/search.hpp"
#include "egs/structural.hpp"
#include "egs/vertex_set.hpp"

#endif  // EGS_EGS_HPP
