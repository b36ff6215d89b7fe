#include "arith/ratfunc.hpp"

namespace ramcalc::arith {

poly::poly(finite_field k, std::vector<elem> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

poly poly::operator+(const poly& o) const {
    std::vector<elem> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        elem a = i < c_.size() ? c_[i] : 0;
        elem b = i < o.c_.size() ? o.c_[i] : 0;
        out[i] = k_.add(a, b);
    }
    return {k_, std::move(out)};
}

poly poly::operator-() const {
    std::vector<elem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = k_.neg(c_[i]);
    return {k_, std::move(out)};
}

poly poly::operator-(const poly& o) const { return *this + (-o); }

poly poly::operator*(const poly& o) const {
    if (c_.empty() || o.c_.empty()) return zero(k_);
    std::vector<elem> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] = k_.add(out[i + j], k_.mul(c_[i], o.c_[j]));
    }
    return {k_, std::move(out)};
}

std::pair<poly, poly> poly::divmod(const poly& d) const {
    if (d.is_zero()) fail(errc::invalid_argument, "polynomial division by zero");
    std::vector<elem> rem = c_;
    std::vector<elem> quot;
    elem dlead_inv = k_.inv(d.lead());
    long long dd = d.degree();
    if (degree() >= dd) quot.assign(degree() - dd + 1, 0);
    for (long long i = degree(); i >= dd; --i) {
        elem c = rem[i];
        if (c == 0) continue;
        elem f = k_.mul(c, dlead_inv);
        quot[i - dd] = f;
        for (long long j = 0; j <= dd; ++j)
            rem[i - dd + j] = k_.sub(rem[i - dd + j], k_.mul(f, d.c_[j]));
    }
    return {poly(k_, std::move(quot)), poly(k_, std::move(rem))};
}

poly poly::monic() const {
    if (is_zero()) return *this;
    std::vector<elem> out(c_.size());
    elem f = k_.inv(lead());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = k_.mul(c_[i], f);
    return {k_, std::move(out)};
}

poly::elem poly::eval(elem x) const {
    elem acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = k_.add(k_.mul(acc, x), *it);
    return acc;
}

std::string poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (long long i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += "+";
        std::string cs = std::to_string(static_cast<long long>(c_[i]));
        if (i == 0) {
            s += cs;
        } else {
            if (c_[i] != 1) s += cs + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

poly poly_gcd(poly a, poly b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = b;
        b = r;
    }
    return a.monic();
}

ratfunc::ratfunc(poly num, poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(errc::invalid_argument, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = poly::constant(num_.field(), 1);
        return;
    }
    poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    auto lead_inv = num_.field().inv(den_.lead());
    num_ = num_ * poly::constant(num_.field(), lead_inv);
    den_ = den_.monic();
}

ratfunc ratfunc::operator+(const ratfunc& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
ratfunc ratfunc::operator-(const ratfunc& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
ratfunc ratfunc::operator*(const ratfunc& o) const { return {num_ * o.num_, den_ * o.den_}; }
ratfunc ratfunc::operator/(const ratfunc& o) const {
    if (o.is_zero()) fail(errc::invalid_argument, "division by the zero rational function");
    return {num_ * o.den_, den_ * o.num_};
}

std::optional<finite_field::elem> ratfunc::eval(finite_field::elem x) const {
    auto d = den_.eval(x);
    if (d == 0) return std::nullopt;
    return field().mul(num_.eval(x), field().inv(d));
}

std::string ratfunc::to_string(const std::string& var) const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace ramcalc::arith
