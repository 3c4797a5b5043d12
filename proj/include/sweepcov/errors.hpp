// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sweepcov {

// Violation of an assumption the winding-number machinery relies on
// (tangential self-intersection, multiplicity > 1, colinear uncertain
// crossing, open contour, ...). The CLI maps this to exit code 2.
class AssumptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data (trajectory/tube files, bad configuration).
// The CLI maps this to exit code 3.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sweepcov
