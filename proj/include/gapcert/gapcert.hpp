#pragma once

#include "gapcert/bounds.hpp"
#include "gapcert/edge_list.hpp"
#include "gapcert/errors.hpp"
#include "gapcert/families.hpp"
#include "gapcert/graph.hpp"
#include "gapcert/harness.hpp"
#include "gapcert/spectral.hpp"
#include "gapcert/walks.hpp"
