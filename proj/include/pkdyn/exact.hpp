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

#ifndef PKDYN_EXACT_HPP
#define PKDYN_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <string>

#include "pkdyn/errors.hpp"

namespace pkdyn {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Element of Q(i): exact complex number with rational real and imaginary
/// parts. This is the coefficient field of the exact polynomial mode; it
/// contains the Gaussian integers used by the integer catalog families.
struct GaussianRational {
    BigRational re{0};
    BigRational im{0};

    GaussianRational() = default;
    GaussianRational(long r) : re(r) {}                    // NOLINT(google-explicit-constructor)
    GaussianRational(BigRational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

    /// Exact conversion; every finite double is a rational number.
    static GaussianRational from_complex(const std::complex<double>& z) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DomainError("cannot convert non-finite complex to GaussianRational");
        return {BigRational(z.real()), BigRational(z.imag())};
    }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        BigRational r = re * o.re - im * o.im;
        BigRational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 as an exact rational.
    BigRational norm2() const { return re * re + im * im; }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw DomainError("GaussianRational division by zero");
        BigRational n = b.norm2();
        GaussianRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }

    std::string str() const;
};

inline std::string GaussianRational::str() const {
    std::string s = re.str();
    if (im != 0) {
        s += (im > 0 ? "+" : "-");
        BigRational a = im > 0 ? im : BigRational(-im);
        s += a.str() + "i";
    }
    return s;
}

}  // namespace pkdyn

#endif  // PKDYN_EXACT_HPP
