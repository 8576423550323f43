#pragma once

#include "errors.hpp"
#include "nodes.hpp"
#include "nodeset.hpp"
#include "partfrac.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "symmetric.hpp"
