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

#ifndef PKDYN_ALGEBRA_HPP
#define PKDYN_ALGEBRA_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pkdyn/errors.hpp"
#include "pkdyn/exact.hpp"

namespace pkdyn {

using Complex = std::complex<double>;

/// Exponent vector of a monomial. Length = arity, component sum = degree.
/// std::map over these iterates in lexicographic order, which on a fixed
/// total degree coincides with graded-lex; term order is therefore
/// deterministic and matches the serialization contract.
using MultiIndex = std::vector<int>;

/// Relative modulus below which a coefficient is dropped when restoring
/// canonical sparse form (numeric mode only). Sits below the noise floor
/// of double-precision composition.
inline constexpr double kCoeffDropTol = 1e-13;

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Complex> {
    static constexpr bool exact = false;
    static bool is_zero(const Complex& c) { return c.real() == 0.0 && c.imag() == 0.0; }
    static double magnitude(const Complex& c) { return std::abs(c); }
    static void check_admissible(const Complex& c) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw DomainError("non-finite coefficient rejected");
    }
};

template <>
struct CoeffOps<GaussianRational> {
    static constexpr bool exact = true;
    static bool is_zero(const GaussianRational& c) { return c.is_zero(); }
    static double magnitude(const GaussianRational& c) { return std::abs(c.to_complex()); }
    static void check_admissible(const GaussianRational&) {}
};

/// Multivariate homogeneous polynomial in canonical sparse form.
///
/// Every stored exponent vector has length arity() and sums to degree();
/// the zero polynomial has an empty term map. Values are immutable in
/// spirit: all operations return fresh polynomials, so instances can be
/// read concurrently without synchronization.
template <class C>
class HomPoly {
  public:
    using Coeff = C;
    using TermMap = std::map<MultiIndex, C>;

    HomPoly() : arity_(1), degree_(0) {}

    HomPoly(int arity, int degree) : arity_(arity), degree_(degree) {
        if (arity < 1) throw ShapeError("arity must be positive");
        if (degree < 0) throw ShapeError("degree must be non-negative");
    }

    static HomPoly monomial(int arity, MultiIndex exp, C coeff) {
        int deg = 0;
        for (int e : exp) deg += e;
        HomPoly p(arity, deg);
        p.add_term(exp, coeff);
        p.normalize();
        return p;
    }

    /// The degree-1 monomial z_index.
    static HomPoly variable(int arity, int index) {
        MultiIndex e(arity, 0);
        e.at(index) = 1;
        return monomial(arity, e, C(1));
    }

    int arity() const { return arity_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const MultiIndex& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? C(0) : it->second;
    }

    /// Accumulates coeff onto the term at exp, validating the invariants.
    void add_term(const MultiIndex& exp, const C& coeff) {
        if (static_cast<int>(exp.size()) != arity_)
            throw ShapeError("multi-index length does not match arity");
        int deg = 0;
        for (int e : exp) {
            if (e < 0) throw ShapeError("negative exponent");
            deg += e;
        }
        if (deg != degree_) throw ShapeError("multi-index sum does not match degree");
        CoeffOps<C>::check_admissible(coeff);
        auto [it, inserted] = terms_.emplace(exp, coeff);
        if (!inserted) it->second += coeff;
    }

    /// Restores canonical sparse form: drops exact zeros and, in numeric
    /// mode, coefficients below kCoeffDropTol relative to the largest.
    void normalize() {
        double maxmag = 0.0;
        if (!CoeffOps<C>::exact) {
            for (const auto& [e, c] : terms_) maxmag = std::max(maxmag, CoeffOps<C>::magnitude(c));
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            bool drop = CoeffOps<C>::is_zero(it->second);
            if (!drop && !CoeffOps<C>::exact)
                drop = CoeffOps<C>::magnitude(it->second) < kCoeffDropTol * maxmag;
            it = drop ? terms_.erase(it) : std::next(it);
        }
    }

    double norm_inf() const {
        double m = 0.0;
        for (const auto& [e, c] : terms_) m = std::max(m, CoeffOps<C>::magnitude(c));
        return m;
    }

    friend bool operator==(const HomPoly& a, const HomPoly& b) {
        return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

  private:
    int arity_;
    int degree_;
    TermMap terms_;
};

using HomPolynomial = HomPoly<Complex>;
using ExactHomPolynomial = HomPoly<GaussianRational>;

// ---------------------------------------------------------------------------
// Evaluation

/// Evaluates p at a point whose entries live in any commutative ring V
/// with V*V, V+=V and V*C defined (Complex, GaussianRational, truncated
/// power series, ...). Powers of the coordinates are memoized.
template <class C, class V>
V poly_eval_in(const HomPoly<C>& p, const std::vector<V>& point, const V& zero, const V& one) {
    if (static_cast<int>(point.size()) != p.arity())
        throw ShapeError("evaluation point length does not match arity");
    std::vector<std::vector<V>> powers(point.size());
    for (size_t i = 0; i < point.size(); ++i) powers[i].push_back(one);
    auto power = [&](size_t i, int e) -> const V& {
        auto& tower = powers[i];
        while (static_cast<int>(tower.size()) <= e) tower.push_back(tower.back() * point[i]);
        return tower[e];
    };
    V acc = zero;
    for (const auto& [exp, c] : p.terms()) {
        V t = one;
        for (size_t i = 0; i < point.size(); ++i)
            if (exp[i] > 0) t = t * power(i, exp[i]);
        acc += t * c;
    }
    return acc;
}

inline Complex poly_eval(const HomPolynomial& p, const std::vector<Complex>& point) {
    return poly_eval_in(p, point, Complex(0), Complex(1));
}

inline GaussianRational poly_eval(const ExactHomPolynomial& p,
                                  const std::vector<GaussianRational>& point) {
    return poly_eval_in(p, point, GaussianRational(0), GaussianRational(1));
}

// ---------------------------------------------------------------------------
// Ring operations

template <class C>
HomPoly<C> poly_add(const HomPoly<C>& a, const HomPoly<C>& b) {
    if (a.arity() != b.arity() || a.degree() != b.degree())
        throw ShapeError("poly_add requires equal arity and degree");
    HomPoly<C> r(a.arity(), a.degree());
    for (const auto& [e, c] : a.terms()) r.add_term(e, c);
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    r.normalize();
    return r;
}

template <class C>
HomPoly<C> poly_scale(const HomPoly<C>& a, const C& s) {
    HomPoly<C> r(a.arity(), a.degree());
    for (const auto& [e, c] : a.terms()) r.add_term(e, c * s);
    r.normalize();
    return r;
}

template <class C>
HomPoly<C> poly_sub(const HomPoly<C>& a, const HomPoly<C>& b) {
    return poly_add(a, poly_scale(b, C(-1)));
}

template <class C>
HomPoly<C> poly_mul(const HomPoly<C>& a, const HomPoly<C>& b) {
    if (a.arity() != b.arity()) throw ShapeError("poly_mul requires equal arity");
    HomPoly<C> r(a.arity(), a.degree() + b.degree());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            MultiIndex e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    r.normalize();
    return r;
}

template <class C>
HomPoly<C> poly_pow(const HomPoly<C>& a, int n) {
    if (n < 0) throw ShapeError("poly_pow exponent must be non-negative");
    HomPoly<C> r = HomPoly<C>::monomial(a.arity(), MultiIndex(a.arity(), 0), C(1));
    for (int i = 0; i < n; ++i) r = poly_mul(r, a);
    return r;
}

template <class C>
HomPoly<C> poly_partial(const HomPoly<C>& a, int var) {
    if (var < 0 || var >= a.arity()) throw ShapeError("derivative variable out of range");
    HomPoly<C> r(a.arity(), std::max(a.degree() - 1, 0));
    for (const auto& [e, c] : a.terms()) {
        if (e[var] == 0) continue;
        MultiIndex d(e);
        d[var] -= 1;
        r.add_term(d, c * C(e[var]));
    }
    r.normalize();
    return r;
}

// ---------------------------------------------------------------------------
// Composition

/// Substitutes subs[i] for variable i of p. All substitutions must share
/// one arity and one degree e; the result is homogeneous of degree
/// deg(p)*e.
template <class C>
HomPoly<C> poly_compose(const HomPoly<C>& p, const std::vector<HomPoly<C>>& subs) {
    if (static_cast<int>(subs.size()) != p.arity())
        throw ShapeError("substitution list length does not match arity");
    if (subs.empty()) throw ShapeError("empty substitution list");
    const int sub_arity = subs.front().arity();
    const int sub_degree = subs.front().degree();
    for (const auto& s : subs) {
        if (s.arity() != sub_arity || s.degree() != sub_degree)
            throw ShapeError("substitutions must share arity and degree");
    }
    const HomPoly<C> zero(sub_arity, p.degree() * sub_degree);
    const HomPoly<C> one = HomPoly<C>::monomial(sub_arity, MultiIndex(sub_arity, 0), C(1));

    std::vector<std::vector<HomPoly<C>>> powers(subs.size());
    for (size_t i = 0; i < subs.size(); ++i) powers[i].push_back(one);
    auto power = [&](size_t i, int e) -> const HomPoly<C>& {
        auto& tower = powers[i];
        while (static_cast<int>(tower.size()) <= e) tower.push_back(poly_mul(tower.back(), subs[i]));
        return tower[e];
    };

    HomPoly<C> acc = zero;
    for (const auto& [exp, c] : p.terms()) {
        HomPoly<C> t = one;
        for (size_t i = 0; i < subs.size(); ++i)
            if (exp[i] > 0) t = poly_mul(t, power(i, exp[i]));
        // t is homogeneous of degree deg(term)*e = deg(p)*e; pad onto acc.
        acc = poly_add(acc, poly_scale(t, c));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Scalar-equivalence testing

/// Finds lambda with ||p - lambda*q||_inf <= tol * ||p||_inf if one
/// exists. lambda is read off the largest-modulus coefficient of q. A
/// zero q against a nonzero p yields an empty result, not an error.
template <class C>
std::optional<C> poly_scalar_match(const HomPoly<C>& p, const HomPoly<C>& q, double tol) {
    if (p.arity() != q.arity() || p.degree() != q.degree())
        throw ShapeError("poly_scalar_match requires equal arity and degree");
    if (q.is_zero()) {
        if (p.is_zero()) return C(1);
        return std::nullopt;
    }
    const MultiIndex* anchor = nullptr;
    double best = -1.0;
    for (const auto& [e, c] : q.terms()) {
        double m = CoeffOps<C>::magnitude(c);
        if (m > best) {
            best = m;
            anchor = &e;
        }
    }
    C lambda = p.coeff(*anchor) / q.coeff(*anchor);
    HomPoly<C> resid = poly_sub(p, poly_scale(q, lambda));
    if (resid.norm_inf() <= tol * p.norm_inf()) return lambda;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Conversions

inline HomPolynomial to_numeric(const ExactHomPolynomial& p) {
    HomPolynomial r(p.arity(), p.degree());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.to_complex());
    r.normalize();
    return r;
}

inline ExactHomPolynomial to_exact(const HomPolynomial& p) {
    ExactHomPolynomial r(p.arity(), p.degree());
    for (const auto& [e, c] : p.terms()) r.add_term(e, GaussianRational::from_complex(c));
    r.normalize();
    return r;
}

// ---------------------------------------------------------------------------
// JSON serialization (implemented in algebra.cpp)

std::string poly_to_json(const HomPolynomial& p);
HomPolynomial poly_from_json(const std::string& text);

}  // namespace pkdyn

#endif  // PKDYN_ALGEBRA_HPP
