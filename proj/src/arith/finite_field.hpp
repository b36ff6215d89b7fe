#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace ramcalc::arith {

/// F_{p^e} with table-driven arithmetic. Elements are packed polynomial
/// codes Σ c_i p^i with c_i ∈ [0,p); multiplication goes through discrete
/// logs w.r.t. a fixed generator, so inverses, p-th roots and r-th roots
/// are exact and O(1). Instances are immutable, cached per (p,e) and cheap
/// to copy.
class finite_field {
public:
    using elem = std::uint32_t;

    // Largest supported field: tables are O(q).
    static constexpr long long max_order = 1LL << 20;
    static constexpr long long max_degree = 8;

    static finite_field make(long long p, long long e);

    long long p() const;
    long long e() const;
    long long order() const; // q = p^e
    long long modulus_code() const;

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem generator() const;
    bool is_zero(elem a) const { return a == 0; }

    elem from_int(long long c) const; // c mod p, embedded as a constant
    elem element(long long code) const;

    elem add(elem a, elem b) const;
    elem neg(elem a) const;
    elem sub(elem a, elem b) const { return add(a, neg(b)); }
    elem mul(elem a, elem b) const;
    elem inv(elem a) const;
    elem pow(elem a, long long k) const;
    elem pth_root(elem a) const; // total: Frobenius is bijective

    // Smallest solution of y^r = a, if one exists in this field.
    std::optional<elem> nth_root(elem a, long long r) const;
    // Requires r | q−1.
    elem root_of_unity(long long r) const;
    long long mult_order(elem a) const;

    // Absolute trace down to F_p, as an integer in [0,p).
    long long trace(elem a) const;

    bool operator==(const finite_field& o) const { return tab_ == o.tab_; }
    bool operator!=(const finite_field& o) const { return tab_ != o.tab_; }

    std::string describe() const; // e.g. "F_9 = F_3[x]/(x^2+1)"

    struct table;

private:
    explicit finite_field(std::shared_ptr<const table> t) : tab_(std::move(t)) {}
    std::shared_ptr<const table> tab_;
};

/// Ring embedding F_{p^e} → F_{p^E} (e | E), determined by the smallest
/// root of the source modulus in the target. Cached per field pair.
class field_embedding {
public:
    field_embedding(const finite_field& src, const finite_field& dst);
    finite_field::elem operator()(finite_field::elem a) const;
    const finite_field& src() const { return src_; }
    const finite_field& dst() const { return dst_; }

private:
    finite_field src_, dst_;
    std::vector<finite_field::elem> basis_image_; // images of 1, x, x^2, ...
};

bool is_prime(long long n);

} // namespace ramcalc::arith
