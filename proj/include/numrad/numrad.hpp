// Copyright (c) the numrad authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef NUMRAD_NUMRAD_HPP
#define NUMRAD_NUMRAD_HPP

#include "numrad/algebra.hpp"
#include "numrad/bounds.hpp"
#include "numrad/common.hpp"
#include "numrad/generators.hpp"
#include "numrad/io.hpp"
#include "numrad/module.hpp"
#include "numrad/operator.hpp"
#include "numrad/radius.hpp"
#include "numrad/suite.hpp"
#include "numrad/sweep.hpp"

#endif  // NUMRAD_NUMRAD_HPP
