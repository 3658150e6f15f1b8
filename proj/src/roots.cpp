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

#include "pkdyn/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pkdyn/errors.hpp"

namespace pkdyn {

std::pair<Complex, Complex> horner2(const std::vector<Complex>& a, Complex z) {
    Complex p(0), dp(0);
    for (size_t i = a.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[i];
    }
    return {p, dp};
}

namespace {

void newton_polish(const std::vector<Complex>& a, std::vector<Complex>& roots, int steps) {
    for (auto& z : roots) {
        for (int s = 0; s < steps; ++s) {
            auto [p, dp] = horner2(a, z);
            if (std::abs(dp) < 1e-300) break;
            Complex step = p / dp;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            // A multiple root makes plain Newton oscillate at cluster
            // scale; a bounded step keeps the cluster tight.
            if (std::abs(step) > 0.5 * (1.0 + std::abs(z))) break;
            z -= step;
        }
    }
}

std::vector<Complex> roots_quadratic(const std::vector<Complex>& a) {
    const Complex A = a[2], B = a[1], C = a[0];
    Complex disc = std::sqrt(B * B - 4.0 * A * C);
    // Pick the sign that avoids cancellation in -B -+ disc.
    Complex q = (std::real(std::conj(B) * disc) >= 0.0) ? -0.5 * (B + disc) : -0.5 * (B - disc);
    std::vector<Complex> r;
    if (std::abs(q) > 0.0) {
        r.push_back(q / A);
        r.push_back(C / q);
    } else {
        r.assign(2, Complex(0));
    }
    return r;
}

std::vector<Complex> roots_companion(const std::vector<Complex>& monic) {
    const int n = static_cast<int>(monic.size()) - 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -monic[i];

    // Osborne balancing in powers of two; Eigen's Schur does not balance.
    for (int it = 0; it < 8; ++it) {
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            double rnorm = 0, cnorm = 0;
            for (int j = 0; j < n; ++j) {
                if (j != i) {
                    rnorm += std::abs(m(i, j));
                    cnorm += std::abs(m(j, i));
                }
            }
            if (rnorm == 0 || cnorm == 0) continue;
            double f = std::exp2(std::round(0.5 * std::log2(rnorm / cnorm)));
            if (f >= 2.0 || f <= 0.5) {
                changed = true;
                m.col(i) *= f;
                m.row(i) /= f;
            }
        }
        if (!changed) break;
    }

    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m, /*computeU=*/false);
    if (schur.info() != Eigen::Success)
        throw InternalError("companion-matrix Schur iteration failed to converge");
    std::vector<Complex> r(n);
    for (int i = 0; i < n; ++i) r[i] = schur.matrixT()(i, i);
    return r;
}

// Bini-style starting points: radii from the upper convex hull of
// (j, log|a_j|), angles equidistributed with an irrational offset.
std::vector<Complex> aberth_start(const std::vector<Complex>& monic) {
    const int n = static_cast<int>(monic.size()) - 1;
    std::vector<double> lg(n + 1);
    for (int j = 0; j <= n; ++j) {
        double m = (j == n) ? 1.0 : std::abs(monic[j]);
        lg[j] = m > 0 ? std::log(m) : -1e30;
    }
    std::vector<int> hull;  // indices of the upper hull, increasing
    for (int j = 0; j <= n; ++j) {
        while (hull.size() >= 2) {
            int p = hull[hull.size() - 2], q = hull[hull.size() - 1];
            if ((lg[q] - lg[p]) * (j - p) <= (lg[j] - lg[p]) * (q - p))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(j);
    }
    std::vector<Complex> z;
    z.reserve(n);
    int idx = 0;
    for (size_t h = 0; h + 1 < hull.size(); ++h) {
        int p = hull[h], q = hull[h + 1];
        double radius = std::exp((lg[p] - lg[q]) / (q - p));
        radius = std::clamp(radius, 1e-6, 1e6);
        for (int j = 0; j < q - p; ++j, ++idx) {
            double ang = 2.0 * std::numbers::pi * idx / n + 0.618;
            z.push_back(radius * Complex(std::cos(ang), std::sin(ang)));
        }
    }
    while (static_cast<int>(z.size()) < n) z.push_back(Complex(1.0, 0.3));
    return z;
}

std::vector<Complex> roots_aberth(const std::vector<Complex>& monic) {
    const int n = static_cast<int>(monic.size()) - 1;
    std::vector<Complex> z = aberth_start(monic);
    std::vector<bool> done(n, false);
    const int max_sweeps = 200;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool all_done = true;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            auto [p, dp] = horner2(monic, z[i]);
            if (std::abs(p) < 1e-280) {
                done[i] = true;
                continue;
            }
            Complex newton = (std::abs(dp) > 1e-300) ? p / dp : Complex(1e-8, 1e-8);
            Complex s(0);
            for (int j = 0; j < n; ++j) {
                if (j != i) s += 1.0 / (z[i] - z[j]);
            }
            Complex denom = 1.0 - newton * s;
            Complex w = (std::abs(denom) > 1e-14) ? newton / denom : newton;
            z[i] -= w;
            if (std::abs(w) <= 1e-14 * (1.0 + std::abs(z[i])))
                done[i] = true;
            else
                all_done = false;
        }
        if (all_done) break;
    }
    return z;
}

}  // namespace

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs, int companion_max_degree) {
    if (coeffs.empty()) throw ShapeError("poly_roots: empty coefficient list");
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n == 0) return {};
    if (std::abs(coeffs[n]) == 0.0) throw ShapeError("poly_roots: vanishing leading coefficient");

    // Exact zero roots split off cheaply and keep the solvers away from
    // the origin-cluster case.
    std::vector<Complex> work = coeffs;
    std::vector<Complex> roots;
    size_t lead_zeros = 0;
    while (lead_zeros < work.size() - 1 && std::abs(work[lead_zeros]) == 0.0) ++lead_zeros;
    if (lead_zeros > 0) {
        roots.assign(lead_zeros, Complex(0));
        work.erase(work.begin(), work.begin() + static_cast<long>(lead_zeros));
        n = static_cast<int>(work.size()) - 1;
        if (n == 0) return roots;
    }

    std::vector<Complex> monic(work.size());
    for (size_t i = 0; i < work.size(); ++i) monic[i] = work[i] / work.back();

    std::vector<Complex> found;
    if (n == 1) {
        found = {-monic[0]};
    } else if (n == 2) {
        found = roots_quadratic(monic);
    } else if (n <= companion_max_degree) {
        found = roots_companion(monic);
    } else {
        found = roots_aberth(monic);
    }
    newton_polish(work, found, 2);
    roots.insert(roots.end(), found.begin(), found.end());
    return roots;
}

std::vector<std::pair<Complex, int>> cluster_roots(const std::vector<Complex>& roots, double tol) {
    std::vector<Complex> sorted = roots;
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<std::pair<Complex, int>> out;
    std::vector<bool> used(sorted.size(), false);
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (used[i]) continue;
        Complex sum = sorted[i];
        int count = 1;
        used[i] = true;
        for (size_t j = i + 1; j < sorted.size(); ++j) {
            if (!used[j] && std::abs(sorted[j] - sorted[i]) <= tol) {
                sum += sorted[j];
                ++count;
                used[j] = true;
            }
        }
        out.emplace_back(sum / static_cast<double>(count), count);
    }
    return out;
}

}  // namespace pkdyn
