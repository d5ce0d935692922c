#pragma once

#include "cogrowth/cover.hpp"
#include "cogrowth/errors.hpp"
#include "cogrowth/graph.hpp"
#include "cogrowth/growth.hpp"
#include "cogrowth/hashimoto.hpp"
#include "cogrowth/identities.hpp"
#include "cogrowth/io.hpp"
#include "cogrowth/numeric.hpp"
#include "cogrowth/radial.hpp"
#include "cogrowth/tree.hpp"
#include "cogrowth/vertex_function.hpp"
#include "cogrowth/walks.hpp"
