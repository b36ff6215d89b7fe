#include "arith/finite_field.hpp"

#include <array>
#include <map>
#include <mutex>
#include <numeric>

namespace ramcalc::arith {

namespace {

using digits = std::array<std::uint32_t, 16>;

void unpack(long long code, long long p, digits& d, int len) {
    d.fill(0);
    for (int i = 0; i < len; ++i) {
        d[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
}

long long pack(const digits& d, long long p, int len) {
    long long code = 0;
    for (int i = len - 1; i >= 0; --i) code = code * p + d[i];
    return code;
}

// Schoolbook multiply of packed polynomials mod (modulus, p). Only used
// while building tables; runtime multiplication is log based.
long long polymul_mod(long long a, long long b, long long p, int e, long long modulus) {
    digits da{}, db{}, prod{};
    unpack(a, p, da, e);
    unpack(b, p, db, e);
    prod.fill(0);
    for (int i = 0; i < e; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < e; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + 1LL * da[i] * db[j]) % p);
    }
    digits dm{};
    unpack(modulus, p, dm, e + 1); // monic: dm[e] == 1
    for (int k = 2 * e - 2; k >= e; --k) {
        std::uint32_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (int i = 0; i < e; ++i) {
            long long v = prod[k - e + i] + 1LL * (p - dm[i]) * c % p;
            prod[k - e + i] = static_cast<std::uint32_t>(v % p);
        }
    }
    return pack(prod, p, e);
}

// Remainder of packed polynomial a (degree ≤ da) by monic packed b (degree db) over F_p.
long long polyrem(long long a, int da, long long b, int db, long long p) {
    digits ra{}, rb{};
    unpack(a, p, ra, da + 1);
    unpack(b, p, rb, db + 1);
    for (int k = da; k >= db; --k) {
        std::uint32_t c = ra[k];
        if (!c) continue;
        ra[k] = 0;
        for (int i = 0; i < db; ++i) {
            long long v = ra[k - db + i] + 1LL * (p - rb[i]) * c % p;
            ra[k - db + i] = static_cast<std::uint32_t>(v % p);
        }
    }
    digits out{};
    out.fill(0);
    for (int i = 0; i < db; ++i) out[i] = ra[i];
    return pack(out, p, db);
}

bool divides_some_monic(long long cand, int e, long long p, int d) {
    long long start = 1;
    for (int i = 0; i < d; ++i) start *= p;
    long long stop = start * p;
    for (long long w = start; w < stop; ++w)
        if (polyrem(cand, e, w, d, p) == 0) return true;
    return false;
}

bool is_irreducible(long long cand, int e, long long p) {
    for (int d = 1; d <= e / 2; ++d)
        if (divides_some_monic(cand, e, p, d)) return false;
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> fs;
    for (long long f = 2; f * f <= n; ++f)
        if (n % f == 0) {
            fs.push_back(f);
            while (n % f == 0) n /= f;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

long long mod_inverse(long long a, long long m) {
    long long r0 = m, r1 = a % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    return ((t0 % m) + m) % m;
}

} // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

struct finite_field::table {
    long long p, e, q;
    long long modulus; // packed monic polynomial of degree e (x for e = 1)
    elem gen;
    std::vector<std::int32_t> log;  // size q; log[0] = -1
    std::vector<elem> exp;          // size q-1
    std::vector<long long> qm1_factors;
};

namespace {

std::shared_ptr<const finite_field::table> build_table(long long p, long long e) {
    if (!is_prime(p)) fail(errc::non_prime_characteristic, std::to_string(p) + " is not prime");
    if (e < 1 || e > finite_field::max_degree)
        fail(errc::unsupported_degree, "extension degree " + std::to_string(e) + " out of range [1,8]");
    long long q = 1;
    for (long long i = 0; i < e; ++i) {
        q *= p;
        if (q > finite_field::max_order)
            fail(errc::unsupported_degree, "field order exceeds 2^20");
    }

    auto t = std::make_shared<finite_field::table>();
    t->p = p;
    t->e = e;
    t->q = q;

    if (e == 1) {
        t->modulus = p; // the polynomial x, unused for arithmetic
    } else {
        // Lexicographically least monic irreducible: smallest packed tail wins.
        long long lead = q;
        long long modulus = 0;
        for (long long v = 0; v < q; ++v) {
            if (is_irreducible(lead + v, static_cast<int>(e), p)) {
                modulus = lead + v;
                break;
            }
        }
        if (!modulus) fail(errc::internal, "no irreducible modulus found");
        t->modulus = modulus;
    }

    t->qm1_factors = prime_factors(q - 1);

    auto mul_raw = [&](long long a, long long b) {
        if (e == 1) return (a * b) % p;
        return polymul_mod(a, b, p, static_cast<int>(e), t->modulus);
    };
    auto pow_raw = [&](long long a, long long k) {
        long long r = 1;
        while (k) {
            if (k & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            k >>= 1;
        }
        return r;
    };

    long long gen = 1; // q = 2: the unit group is trivial
    if (q > 2) {
        gen = 0;
        for (long long c = 2; c < q; ++c) {
            bool ok = true;
            for (long long f : t->qm1_factors)
                if (pow_raw(c, (q - 1) / f) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                gen = c;
                break;
            }
        }
        if (!gen) fail(errc::internal, "no multiplicative generator found");
    }
    t->gen = static_cast<finite_field::elem>(gen);

    t->exp.resize(q - 1);
    t->log.assign(q, -1);
    long long acc = 1;
    for (long long i = 0; i < q - 1; ++i) {
        t->exp[i] = static_cast<finite_field::elem>(acc);
        t->log[acc] = static_cast<std::int32_t>(i);
        acc = mul_raw(acc, gen);
    }
    if (acc != 1) fail(errc::internal, "generator order mismatch");
    return t;
}

std::map<std::pair<long long, long long>, std::shared_ptr<const finite_field::table>>& registry() {
    static std::map<std::pair<long long, long long>, std::shared_ptr<const finite_field::table>> r;
    return r;
}
std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

finite_field finite_field::make(long long p, long long e) {
    std::lock_guard<std::mutex> lk(registry_mutex());
    auto key = std::make_pair(p, e);
    auto it = registry().find(key);
    if (it == registry().end()) it = registry().emplace(key, build_table(p, e)).first;
    return finite_field(it->second);
}

long long finite_field::p() const { return tab_->p; }
long long finite_field::e() const { return tab_->e; }
long long finite_field::order() const { return tab_->q; }
long long finite_field::modulus_code() const { return tab_->modulus; }
finite_field::elem finite_field::generator() const { return tab_->gen; }

finite_field::elem finite_field::from_int(long long c) const {
    long long p = tab_->p;
    return static_cast<elem>(((c % p) + p) % p);
}

finite_field::elem finite_field::element(long long code) const {
    if (code < 0 || code >= tab_->q)
        fail(errc::invalid_argument, "element code out of range for " + describe());
    return static_cast<elem>(code);
}

finite_field::elem finite_field::add(elem a, elem b) const {
    long long p = tab_->p;
    if (tab_->e == 1) return static_cast<elem>((static_cast<long long>(a) + b) % p);
    long long ca = a, cb = b, out = 0, scale = 1;
    for (long long i = 0; i < tab_->e; ++i) {
        out += ((ca % p + cb % p) % p) * scale;
        ca /= p;
        cb /= p;
        scale *= p;
    }
    return static_cast<elem>(out);
}

finite_field::elem finite_field::neg(elem a) const {
    long long p = tab_->p;
    if (tab_->e == 1) return static_cast<elem>((p - a) % p);
    long long ca = a, out = 0, scale = 1;
    for (long long i = 0; i < tab_->e; ++i) {
        out += ((p - ca % p) % p) * scale;
        ca /= p;
        scale *= p;
    }
    return static_cast<elem>(out);
}

finite_field::elem finite_field::mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    long long m = tab_->q - 1;
    return tab_->exp[(tab_->log[a] + tab_->log[b]) % m];
}

finite_field::elem finite_field::inv(elem a) const {
    if (a == 0) fail(errc::invalid_argument, "inverse of zero");
    long long m = tab_->q - 1;
    return tab_->exp[(m - tab_->log[a]) % m];
}

finite_field::elem finite_field::pow(elem a, long long k) const {
    if (a == 0) {
        if (k > 0) return 0;
        if (k == 0) return 1;
        fail(errc::invalid_argument, "negative power of zero");
    }
    long long m = tab_->q - 1;
    long long l = (tab_->log[a] % m) * (k % m) % m;
    if (l < 0) l += m;
    return tab_->exp[l];
}

finite_field::elem finite_field::pth_root(elem a) const {
    // y = a^{p^{e-1}} satisfies y^p = a
    long long k = 1;
    for (long long i = 0; i + 1 < tab_->e; ++i) k *= tab_->p;
    return pow(a, k);
}

std::optional<finite_field::elem> finite_field::nth_root(elem a, long long r) const {
    if (r <= 0) fail(errc::invalid_argument, "nth_root with nonpositive degree");
    if (a == 0) return zero();
    long long m = tab_->q - 1;
    long long l = tab_->log[a];
    long long rm = r % m;
    long long g = (rm == 0) ? m : std::gcd(rm, m);
    if (l % g != 0) return std::nullopt;
    if (g == m) return one(); // x^r = 1 for every unit; solvable only for a = 1
    long long m0 = m / g;
    long long y = (l / g) % m0 * mod_inverse(rm / g, m0) % m0;
    return tab_->exp[y];
}

finite_field::elem finite_field::root_of_unity(long long r) const {
    long long m = tab_->q - 1;
    if (r <= 0 || m % r != 0)
        fail(errc::invalid_argument, "field has no primitive root of unity of order " + std::to_string(r));
    if (r == 1) return one();
    return tab_->exp[m / r];
}

long long finite_field::mult_order(elem a) const {
    if (a == 0) fail(errc::invalid_argument, "order of zero");
    long long m = tab_->q - 1;
    if (m == 0) return 1;
    return m / std::gcd(static_cast<long long>(tab_->log[a]), m);
}

long long finite_field::trace(elem a) const {
    elem acc = 0, cur = a;
    for (long long i = 0; i < tab_->e; ++i) {
        acc = add(acc, cur);
        cur = pow(cur, tab_->p);
    }
    // acc lies in the prime subfield, i.e. its code is < p
    return static_cast<long long>(acc);
}

std::string finite_field::describe() const {
    std::string s = "F_" + std::to_string(tab_->q);
    if (tab_->e > 1) s += " (p=" + std::to_string(tab_->p) + ", e=" + std::to_string(tab_->e) + ")";
    return s;
}

field_embedding::field_embedding(const finite_field& src, const finite_field& dst) : src_(src), dst_(dst) {
    if (src.p() != dst.p() || dst.e() % src.e() != 0)
        fail(errc::invalid_argument, "no embedding " + src.describe() + " -> " + dst.describe());
    if (src == dst) return; // operator() shortcuts
    long long e = src.e(), p = src.p();
    if (e == 1) {
        basis_image_.push_back(dst.one());
        return;
    }
    // Map x to the smallest root of the source modulus in dst.
    digits md{};
    unpack(src.modulus_code(), p, md, static_cast<int>(e) + 1);
    std::optional<finite_field::elem> rho;
    for (long long c = 0; c < dst.order(); ++c) {
        auto x = static_cast<finite_field::elem>(c);
        finite_field::elem acc = dst.from_int(md[e]);
        for (long long i = e - 1; i >= 0; --i) acc = dst.add(dst.mul(acc, x), dst.from_int(md[i]));
        if (acc == 0) {
            rho = x;
            break;
        }
    }
    if (!rho) fail(errc::internal, "source modulus has no root in extension");
    finite_field::elem cur = dst.one();
    for (long long i = 0; i < e; ++i) {
        basis_image_.push_back(cur);
        cur = dst.mul(cur, *rho);
    }
}

finite_field::elem field_embedding::operator()(finite_field::elem a) const {
    if (src_ == dst_) return a;
    long long p = src_.p(), code = a;
    finite_field::elem out = 0;
    for (std::size_t i = 0; i < basis_image_.size(); ++i) {
        long long c = code % p;
        code /= p;
        if (c) out = dst_.add(out, dst_.mul(dst_.from_int(c), basis_image_[i]));
    }
    return out;
}

} // namespace ramcalc::arith
