// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef ANMIMO_ERRORS_HPP
#define ANMIMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anmimo {

// Quadrature failed to meet its tolerance within the refinement cap.
// Carries the last two estimates so callers can judge how far apart they are.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string &what, double previous, double last)
        : std::runtime_error(what), previous_estimate(previous), last_estimate(last) {}
    double previous_estimate;
    double last_estimate;
};

// A spectrum is too degenerate to evaluate (coincident eigenvalues beyond
// what regularization can separate).
class DegeneracyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A computed probability density or distribution value left its valid range
// by more than round-off; usually a sign that eigenvalue gaps are too small.
class NumericalIntegrityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace anmimo

#endif // ANMIMO_ERRORS_HPP
