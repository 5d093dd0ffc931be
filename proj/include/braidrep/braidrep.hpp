#pragma once

#include "braidrep/error.hpp"
#include "braidrep/laurent.hpp"
#include "braidrep/permutation.hpp"
#include "braidrep/braid.hpp"
#include "braidrep/gn3.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/representation.hpp"
#include "braidrep/collinearity.hpp"
#include "braidrep/io.hpp"
