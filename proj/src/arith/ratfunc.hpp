#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arith/finite_field.hpp"

namespace ramcalc::arith {

/// Dense univariate polynomial over F_q, ascending coefficients, no
/// trailing zeros. Just enough machinery for the one-parameter families:
/// ring ops, gcd, evaluation.
class poly {
public:
    using elem = finite_field::elem;

    poly(finite_field k, std::vector<elem> coeffs);
    static poly zero(finite_field k) { return {k, {}}; }
    static poly constant(finite_field k, elem c) { return {k, {c}}; }
    static poly variable(finite_field k) { return {k, {0, 1}}; }

    const finite_field& field() const { return k_; }
    const std::vector<elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; } // -1 for zero
    elem lead() const { return c_.empty() ? 0 : c_.back(); }

    poly operator+(const poly& o) const;
    poly operator-(const poly& o) const;
    poly operator-() const;
    poly operator*(const poly& o) const;
    bool operator==(const poly& o) const { return c_ == o.c_; }

    // Euclidean division by a nonzero divisor.
    std::pair<poly, poly> divmod(const poly& d) const;
    poly monic() const;

    elem eval(elem x) const;
    std::string to_string(const std::string& var = "l") const;

private:
    finite_field k_;
    std::vector<elem> c_;
};

poly poly_gcd(poly a, poly b); // monic gcd

/// Normalized rational function num/den over F_q: gcd-reduced, monic
/// denominator. The coefficient field for one-parameter family scans.
class ratfunc {
public:
    ratfunc(poly num, poly den);
    static ratfunc zero(finite_field k) { return {poly::zero(k), poly::constant(k, 1)}; }
    static ratfunc constant(finite_field k, finite_field::elem c) {
        return {poly::constant(k, c), poly::constant(k, 1)};
    }
    static ratfunc variable(finite_field k) { return {poly::variable(k), poly::constant(k, 1)}; }

    const poly& num() const { return num_; }
    const poly& den() const { return den_; }
    const finite_field& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    ratfunc operator+(const ratfunc& o) const;
    ratfunc operator-(const ratfunc& o) const;
    ratfunc operator*(const ratfunc& o) const;
    ratfunc operator/(const ratfunc& o) const;
    bool operator==(const ratfunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Specialize at λ = x; nullopt when the denominator vanishes there.
    std::optional<finite_field::elem> eval(finite_field::elem x) const;

    std::string to_string(const std::string& var = "l") const;

private:
    poly num_, den_;
};

} // namespace ramcalc::arith
