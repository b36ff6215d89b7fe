#pragma once

#include "arith/laurent.hpp"
#include "core/rational.hpp"
#include "slopes/profile.hpp"

namespace ramcalc::aschar {

/// Rank-1 character of k((t)) presented by the datum f of T^p - T - f,
/// considered up to p-th-power-minus-identity shifts. The pole part of a
/// reduced representative carries every ramification invariant in scope.
struct as_char {
    arith::laurent_germ f;

    const arith::finite_field& field() const { return f.field(); }
};

/// ℘(g) = g^p - g.
arith::laurent_germ phi_wirtinger(const arith::laurent_germ& g);

/// Kills every p-divisible pole exponent: while a term a*t^{-m} with p | m
/// remains, replace it by a^{1/p}*t^{-m/p}. The result's pole order is
/// coprime to p or the pole is gone; exponents >= 0 are left untouched.
as_char as_reduce(const as_char& c);

/// Pole order of the reduced datum, 0 if regular.
long long swan(const as_char& c);

/// swan + 1 for wild characters, exactly 1 otherwise (slope-1 convention).
rational conductor(const as_char& c);

/// Ramification equivalence: reduced pole parts agree and the constant
/// terms differ by an element of ℘(k), i.e. have equal absolute trace.
bool ram_equivalent(const as_char& a, const as_char& b);

slopes::slope_profile char_sum_profile(const std::vector<as_char>& chars);

} // namespace ramcalc::aschar
