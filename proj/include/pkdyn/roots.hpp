// Copyright 2026 The pkdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PKDYN_ROOTS_HPP
#define PKDYN_ROOTS_HPP

#include <complex>
#include <utility>
#include <vector>

namespace pkdyn {

using Complex = std::complex<double>;

/// All complex roots (with multiplicity, as clusters of nearby values) of
/// a_0 + a_1 z + ... + a_n z^n given in ascending order with a_n != 0.
///
/// Degrees up to companion_max_degree go through a balanced companion
/// matrix; larger degrees use Aberth-Ehrlich simultaneous iteration with
/// Newton-polygon initial radii. Both paths finish with two Newton
/// polishing steps against the original coefficients.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs, int companion_max_degree = 512);

/// Evaluates p and p' at z by a joint Horner pass.
std::pair<Complex, Complex> horner2(const std::vector<Complex>& coeffs, Complex z);

/// Groups values into clusters of radius tol; returns (representative,
/// multiplicity) pairs with the representative the cluster mean. Order is
/// deterministic (sorted by real, then imaginary part).
std::vector<std::pair<Complex, int>> cluster_roots(const std::vector<Complex>& roots, double tol);

}  // namespace pkdyn

#endif  // PKDYN_ROOTS_HPP
