#pragma once

#include <map>
#include <optional>
#include <string>

#include "arith/finite_field.hpp"

namespace ramcalc::arith {

/// Truncated Laurent series over a finite field with honest valuation
/// bookkeeping. Stored terms are the exact coefficients of every exponent
/// below `precision()`; exponents at or above it are unknown. Germs built
/// from Laurent polynomials are exact (infinite precision); truncation only
/// enters through inversion, roots and substitution with negative powers.
/// A germ with no stored terms is O(t^N) — or exactly zero when N = ∞.
class laurent_germ {
public:
    using elem = finite_field::elem;
    using coeff_map = std::map<long long, elem>;

    static constexpr long long exact_precision = (1LL << 60);

    laurent_germ(finite_field k, coeff_map coeffs, long long precision);

    static laurent_germ zero(finite_field k) { return {k, {}, exact_precision}; }
    static laurent_germ unknown(finite_field k, long long precision) { return {k, {}, precision}; }
    static laurent_germ constant(finite_field k, elem c) { return {k, {{0, c}}, exact_precision}; }
    static laurent_germ monomial(finite_field k, elem c, long long exp) {
        return {k, {{exp, c}}, exact_precision};
    }

    const finite_field& field() const { return k_; }
    const coeff_map& coeffs() const { return c_; }
    long long precision() const { return prec_; }
    bool is_exact() const { return prec_ >= exact_precision; }
    bool has_terms() const { return !c_.empty(); }

    elem coeff(long long exp) const; // exact coefficient; error if exp >= precision

    // Minimum stored exponent; PrecisionExhausted on a termless inexact germ,
    // nullopt only for the exact zero germ.
    std::optional<long long> valuation() const;
    long long certified_valuation() const; // as above but error on exact zero too

    laurent_germ truncated(long long precision) const;
    laurent_germ shifted(long long k) const;     // multiply by t^k
    laurent_germ scaled(elem c) const;           // multiply by a field constant
    laurent_germ stretched(long long d) const;   // t -> t^d, d >= 1

    laurent_germ operator+(const laurent_germ& o) const;
    laurent_germ operator-(const laurent_germ& o) const;
    laurent_germ operator-() const;
    laurent_germ operator*(const laurent_germ& o) const;
    bool operator==(const laurent_germ& o) const { return c_ == o.c_ && prec_ == o.prec_; }

    std::string to_string() const; // e.g. "t^-2 + 2*t^-1 + 1 + O(t^6)"

private:
    finite_field k_;
    coeff_map c_;
    long long prec_;
};

// Module-level default working precision, used when an exact germ must be
// truncated (inversion, roots). Scenario drivers set it to
// 4*(largest pole order) + 8 and retry once at double on PrecisionExhausted.
long long default_precision();
void set_default_precision(long long n);

struct precision_guard {
    explicit precision_guard(long long n) : saved_(default_precision()) { set_default_precision(n); }
    ~precision_guard() { set_default_precision(saved_); }
    precision_guard(const precision_guard&) = delete;
    precision_guard& operator=(const precision_guard&) = delete;

private:
    long long saved_;
};

// a * ls_invert(a) = 1 + O(t^k); errors if no leading term is certified.
laurent_germ ls_invert(const laurent_germ& a);
laurent_germ ls_pow(const laurent_germ& a, long long n);

// r-th root of a unit (valuation 0) germ, r coprime to the characteristic;
// the leading coefficient must have an r-th root in the field.
laurent_germ ls_nth_root_unit(const laurent_germ& a, long long r);

// Maps every coefficient through a field embedding.
laurent_germ ls_map_field(const laurent_germ& a, const field_embedding& phi);

// Monomial expression substitution: prod of named germs raised to integer
// powers. Negative powers require a certified leading term.
struct monomial_expr {
    std::map<std::string, long long> powers;
};
laurent_germ ls_substitute(const monomial_expr& expr, const std::map<std::string, laurent_germ>& bindings);

} // namespace ramcalc::arith
