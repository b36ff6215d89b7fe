#include "arith/laurent.hpp"

#include <algorithm>

namespace ramcalc::arith {

namespace {
long long g_default_precision = 64;

long long cap(long long n) { return std::min(n, laurent_germ::exact_precision); }
} // namespace

long long default_precision() { return g_default_precision; }
void set_default_precision(long long n) {
    if (n < 1) fail(errc::invalid_argument, "precision must be positive");
    g_default_precision = cap(n);
}

laurent_germ::laurent_germ(finite_field k, coeff_map coeffs, long long precision)
    : k_(std::move(k)), c_(std::move(coeffs)), prec_(cap(precision)) {
    if (prec_ < laurent_germ::exact_precision && prec_ <= -(1LL << 40))
        fail(errc::precision_exhausted, "germ carries no certified terms");
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second == 0 || it->first >= prec_)
            it = c_.erase(it);
        else
            ++it;
    }
}

laurent_germ::elem laurent_germ::coeff(long long exp) const {
    if (exp >= prec_) fail(errc::precision_exhausted, "coefficient beyond certified precision");
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
}

std::optional<long long> laurent_germ::valuation() const {
    if (!c_.empty()) return c_.begin()->first;
    if (is_exact()) return std::nullopt; // exact zero
    fail(errc::precision_exhausted, "valuation of O(t^" + std::to_string(prec_) + ") germ is uncertified");
}

long long laurent_germ::certified_valuation() const {
    auto v = valuation();
    if (!v) fail(errc::invalid_argument, "valuation of the zero germ");
    return *v;
}

laurent_germ laurent_germ::truncated(long long precision) const {
    return {k_, c_, std::min(prec_, precision)};
}

laurent_germ laurent_germ::shifted(long long k) const {
    coeff_map out;
    for (auto& [e, c] : c_) out.emplace(e + k, c);
    return {k_, std::move(out), is_exact() ? prec_ : prec_ + k};
}

laurent_germ laurent_germ::scaled(elem c) const {
    if (c == 0) return is_exact() ? zero(k_) : unknown(k_, prec_);
    coeff_map out;
    for (auto& [e, a] : c_) out.emplace(e, k_.mul(a, c));
    return {k_, std::move(out), prec_};
}

laurent_germ laurent_germ::stretched(long long d) const {
    if (d < 1) fail(errc::invalid_argument, "stretch degree must be >= 1");
    coeff_map out;
    for (auto& [e, c] : c_) out.emplace(e * d, c);
    return {k_, std::move(out), is_exact() ? prec_ : prec_ * d};
}

laurent_germ laurent_germ::operator+(const laurent_germ& o) const {
    if (k_ != o.k_) fail(errc::invalid_argument, "germ arithmetic across different fields");
    coeff_map out = c_;
    for (auto& [e, c] : o.c_) {
        auto [it, fresh] = out.emplace(e, c);
        if (!fresh) {
            it->second = k_.add(it->second, c);
            if (it->second == 0) out.erase(it);
        }
    }
    return {k_, std::move(out), std::min(prec_, o.prec_)};
}

laurent_germ laurent_germ::operator-() const {
    coeff_map out;
    for (auto& [e, c] : c_) out.emplace(e, k_.neg(c));
    return {k_, std::move(out), prec_};
}

laurent_germ laurent_germ::operator-(const laurent_germ& o) const { return *this + (-o); }

laurent_germ laurent_germ::operator*(const laurent_germ& o) const {
    if (k_ != o.k_) fail(errc::invalid_argument, "germ arithmetic across different fields");
    // Valuation lower bounds drive precision: a = A + O(t^Na), b = B + O(t^Nb)
    // gives ab = AB + O(t^{va+Nb}) + O(t^{vb+Na}).
    if (c_.empty() || o.c_.empty()) {
        if (is_exact() && c_.empty()) return zero(k_);
        if (o.is_exact() && o.c_.empty()) return zero(k_);
        long long va = c_.empty() ? prec_ : c_.begin()->first;
        long long vb = o.c_.empty() ? o.prec_ : o.c_.begin()->first;
        return unknown(k_, std::min(va + o.prec_, vb + prec_));
    }
    long long va = c_.begin()->first, vb = o.c_.begin()->first;
    long long prec = exact_precision;
    if (!o.is_exact()) prec = std::min(prec, va + o.prec_);
    if (!is_exact()) prec = std::min(prec, vb + prec_);
    coeff_map out;
    for (auto& [ea, ca] : c_) {
        if (ea + vb >= prec) break;
        for (auto& [eb, cb] : o.c_) {
            long long e = ea + eb;
            if (e >= prec) break;
            elem v = k_.mul(ca, cb);
            auto [it, fresh] = out.emplace(e, v);
            if (!fresh) {
                it->second = k_.add(it->second, v);
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return {k_, std::move(out), prec};
}

std::string laurent_germ::to_string() const {
    std::string s;
    for (auto& [e, c] : c_) {
        if (!s.empty()) s += " + ";
        std::string cs = std::to_string(static_cast<long long>(c));
        if (e == 0) {
            s += cs;
        } else {
            if (c != 1) s += cs + "*";
            s += (e == 1) ? "t" : "t^" + std::to_string(e);
        }
    }
    if (!is_exact()) {
        if (!s.empty()) s += " + ";
        s += "O(t^" + std::to_string(prec_) + ")";
    }
    if (s.empty()) s = "0";
    return s;
}

laurent_germ ls_invert(const laurent_germ& a) {
    if (!a.has_terms()) {
        if (a.is_exact()) fail(errc::invalid_argument, "inverse of the zero germ");
        fail(errc::precision_exhausted, "inverse of a germ with no certified leading term");
    }
    const auto& k = a.field();
    long long v = a.certified_valuation();
    long long rel = a.is_exact() ? default_precision() : a.precision() - v;
    if (rel < 1) fail(errc::precision_exhausted, "no certified terms for inversion");
    auto lead = a.coeffs().begin()->second;
    auto lead_inv = k.inv(lead);
    if (a.is_exact() && a.coeffs().size() == 1) // exact monomial inverts exactly
        return laurent_germ::monomial(k, lead_inv, -v);
    // a = lead*t^v*(1+w); invert the unit part by geometric series.
    laurent_germ w = (a.shifted(-v).scaled(lead_inv) - laurent_germ::constant(k, k.one())).truncated(rel);
    laurent_germ acc = laurent_germ::constant(k, k.one()).truncated(rel);
    laurent_germ pw = acc;
    // w has valuation >= 1, so rel terms suffice
    for (long long i = 1; i < rel && pw.has_terms(); ++i) {
        pw = (pw * w).truncated(rel);
        pw = -pw;
        acc = acc + pw;
    }
    return acc.scaled(lead_inv).shifted(-v);
}

laurent_germ ls_pow(const laurent_germ& a, long long n) {
    const auto& k = a.field();
    if (n == 0) return laurent_germ::constant(k, k.one());
    laurent_germ base = n < 0 ? ls_invert(a) : a;
    long long m = n < 0 ? -n : n;
    laurent_germ acc = laurent_germ::constant(k, k.one());
    while (m) {
        if (m & 1) acc = acc * base;
        base = base * base;
        m >>= 1;
    }
    return acc;
}

laurent_germ ls_nth_root_unit(const laurent_germ& a, long long r) {
    const auto& k = a.field();
    if (r % k.p() == 0) fail(errc::invalid_argument, "root degree divisible by the characteristic");
    if (!a.has_terms() || a.certified_valuation() != 0)
        fail(errc::invalid_argument, "nth root requires a unit germ");
    long long rel = a.is_exact() ? default_precision() : a.precision();
    auto c0 = a.coeff(0);
    auto root0 = k.nth_root(c0, r);
    if (!root0) fail(errc::invalid_argument, "leading coefficient has no degree-" + std::to_string(r) + " root");
    laurent_germ x = laurent_germ::constant(k, *root0).truncated(rel);
    laurent_germ target = a.truncated(rel);
    auto rinv = laurent_germ::constant(k, k.inv(k.from_int(r)));
    // Newton: x <- x - (x^r - a) / (r x^{r-1}); quadratic t-adic convergence.
    for (int iter = 0; iter < 64; ++iter) {
        laurent_germ fx = ls_pow(x, r) - target;
        if (!fx.has_terms()) break;
        laurent_germ step = fx * ls_invert(ls_pow(x, r - 1)) * rinv;
        x = (x - step).truncated(rel);
    }
    if ((ls_pow(x, r) - target).has_terms()) fail(errc::internal, "nth root iteration did not converge");
    return x;
}

laurent_germ ls_map_field(const laurent_germ& a, const field_embedding& phi) {
    if (a.field() != phi.src()) fail(errc::invalid_argument, "embedding field mismatch");
    laurent_germ::coeff_map out;
    for (auto& [e, c] : a.coeffs()) out.emplace(e, phi(c));
    return {phi.dst(), std::move(out), a.precision()};
}

laurent_germ ls_substitute(const monomial_expr& expr, const std::map<std::string, laurent_germ>& bindings) {
    if (bindings.empty()) fail(errc::invalid_argument, "substitution with no bindings");
    const auto& k = bindings.begin()->second.field();
    laurent_germ acc = laurent_germ::constant(k, k.one());
    for (auto& [var, power] : expr.powers) {
        auto it = bindings.find(var);
        if (it == bindings.end()) fail(errc::unbound_variable, "unbound variable " + var);
        if (power == 0) continue;
        acc = acc * ls_pow(it->second, power);
    }
    return acc;
}

} // namespace ramcalc::arith
