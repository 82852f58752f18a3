#pragma once

#include "hermops/scalar.hpp"
#include "hermops/poly.hpp"
#include "hermops/weyl.hpp"
#include "hermops/space.hpp"
#include "hermops/hermite.hpp"
#include "hermops/sl2.hpp"
#include "hermops/verify.hpp"
#include "hermops/suite.hpp"
#include "hermops/io.hpp"
