#include "ptg/field.hpp"

#include <algorithm>
#include <sstream>

namespace ptg {

namespace {

using Poly = std::vector<int>;  // coefficients low-degree first, over F_p

int degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    int dm = degree(m);
    for (int i = degree(a); i >= dm; --i) {
        if (a[i] == 0) continue;
        // m is monic
        int c = a[i];
        for (int j = 0; j <= dm; ++j) {
            int k = i - dm + j;
            a[k] = ((a[k] - c * m[j]) % p + p) % p;
        }
    }
    a.resize(std::max(dm, 1));
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

bool divides(const Poly& d, const Poly& a, int p) {
    Poly r = poly_mod(a, d, p);
    return degree(r) < 0;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
    int d = degree(f);
    if (d <= 1) return d == 1;
    for (int k = 1; 2 * k <= d; ++k) {
        long long total = 1;
        for (int i = 0; i < k; ++i) total *= p;
        for (long long idx = 0; idx < total; ++idx) {
            Poly g(k + 1, 0);
            g[k] = 1;
            long long t = idx;
            for (int i = 0; i < k; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::pair<int, int> prime_power_split(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        int n = 0;
        int r = q;
        while (r % p == 0) {
            r /= p;
            ++n;
        }
        if (r != 1) throw FieldError("not a prime power: " + std::to_string(q));
        return {p, n};
    }
    throw FieldError("not a prime power: " + std::to_string(q));
}

FieldTower::FieldTower(int p, int n, int max_q2) : p_(p), n_(n) {
    if (!is_prime(p)) throw FieldError("p is not prime: " + std::to_string(p));
    if (p == 2) throw FieldError("p must be odd");
    if (n < 1) throw FieldError("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q * q > max_q2)
            throw FieldError("size limit exceeded: q^2 > " + std::to_string(max_q2));
    }
    q_ = static_cast<int>(q);
    q2_ = q_ * q_;

    // f: lex-smallest monic irreducible of degree n over F_p,
    // coefficient vectors compared low-degree-first.
    {
        long long total = 1;
        for (int i = 0; i < n; ++i) total *= p;
        bool found = false;
        for (long long idx = 0; idx < total && !found; ++idx) {
            Poly cand(n + 1, 0);
            cand[n] = 1;
            // c0 is the most significant position of the lex comparison
            long long t = idx;
            for (int i = n - 1; i >= 0; --i) {
                cand[i] = static_cast<int>(t % p);
                t /= p;
            }
            if (is_irreducible(cand, p)) {
                f_ = cand;
                found = true;
            }
        }
        if (!found) throw FieldError("no irreducible modulus found");  // unreachable
    }

    // F_q tables. Index <-> digit vector (little-endian base p), arithmetic
    // is polynomial arithmetic mod f.
    auto to_poly = [&](int idx) {
        Poly a(n, 0);
        for (int i = 0; i < n; ++i) {
            a[i] = idx % p;
            idx /= p;
        }
        return a;
    };
    auto from_poly = [&](const Poly& a) {
        int idx = 0;
        for (int i = n - 1; i >= 0; --i) idx = idx * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
        return idx;
    };
    fq_add_.assign(q_ * q_, 0);
    fq_mul_.assign(q_ * q_, 0);
    fq_neg_.assign(q_, 0);
    fq_inv_.assign(q_, 0);
    for (int x = 0; x < q_; ++x) {
        Poly a = to_poly(x);
        Poly na(n, 0);
        for (int i = 0; i < n; ++i) na[i] = (p - a[i]) % p;
        fq_neg_[x] = from_poly(na);
        for (int y = 0; y < q_; ++y) {
            Poly b = to_poly(y);
            Poly s(n, 0);
            for (int i = 0; i < n; ++i) s[i] = (a[i] + b[i]) % p;
            fq_add_[x * q_ + y] = from_poly(s);
            fq_mul_[x * q_ + y] = from_poly(poly_mod(poly_mul(a, b, p), f_, p));
        }
    }
    for (int x = 1; x < q_; ++x) {
        for (int y = 1; y < q_; ++y) {
            if (fq_mul_[x * q_ + y] == 1) {
                fq_inv_[x] = y;
                break;
            }
        }
        if (fq_inv_[x] == 0) throw FieldError("f is not irreducible (internal)");
    }

    // g: lex-smallest monic irreducible y^2 + g1*y + g0 over F_q, checked by
    // exhaustive root absence.
    {
        bool found = false;
        for (int c0 = 0; c0 < q_ && !found; ++c0) {
            for (int c1 = 0; c1 < q_ && !found; ++c1) {
                bool has_root = false;
                for (int t = 0; t < q_; ++t) {
                    int val = add(add(mul(t, t), mul(c1, t)), c0);
                    if (val == 0) {
                        has_root = true;
                        break;
                    }
                }
                if (!has_root) {
                    g0_ = c0;
                    g1_ = c1;
                    found = true;
                }
            }
        }
        if (!found) throw FieldError("no irreducible quadratic over F_q");  // unreachable
    }

    // Direction (coset) index of every nonzero element: sigma(pi(a + b*v)).
    dir_of_.assign(q2_, -1);
    for (Elt x = 1; x < q2_; ++x) {
        int a = a_of(x), b = b_of(x);
        dir_of_[x] = (a != 0) ? mul(b, inv(a)) : q_;
    }

    if (frobenius(v()) == v()) throw FieldError("v lies in F_q (internal)");
}

int FieldTower::inv(int x) const {
    if (x == 0) throw FieldError("division by zero in F_q");
    return fq_inv_[x];
}

Elt FieldTower::add2(Elt x, Elt y) const {
    return elem(add(a_of(x), a_of(y)), add(b_of(x), b_of(y)));
}

Elt FieldTower::sub2(Elt x, Elt y) const {
    return elem(sub(a_of(x), a_of(y)), sub(b_of(x), b_of(y)));
}

Elt FieldTower::neg2(Elt x) const { return elem(neg(a_of(x)), neg(b_of(x))); }

Elt FieldTower::mul2(Elt x, Elt y) const {
    // (a1 + b1 v)(a2 + b2 v) with v^2 = -g1 v - g0
    int a1 = a_of(x), b1 = b_of(x), a2 = a_of(y), b2 = b_of(y);
    int bb = mul(b1, b2);
    int ra = sub(mul(a1, a2), mul(bb, g0_));
    int rb = sub(add(mul(a1, b2), mul(a2, b1)), mul(bb, g1_));
    return elem(ra, rb);
}

Elt FieldTower::pow2(Elt x, long long e) const {
    Elt r = 1;
    Elt base = x;
    while (e > 0) {
        if (e & 1) r = mul2(r, base);
        base = mul2(base, base);
        e >>= 1;
    }
    return r;
}

Elt FieldTower::inv2(Elt x) const {
    if (x == 0) throw FieldError("division by zero in F_{q^2}");
    // x^{-1} = x^q / N(x) with the norm N(x) = x^{q+1} in F_q
    Elt xq = frobenius(x);
    Elt norm = mul2(x, xq);
    if (b_of(norm) != 0) throw FieldError("norm not in F_q (internal)");
    return mul2(xq, elem(inv(a_of(norm)), 0));
}

std::string FieldTower::encode(Elt x) const {
    std::ostringstream os;
    int a = a_of(x), b = b_of(x);
    for (int i = 0; i < n_; ++i) {
        if (i) os << ':';
        os << b % p_;
        b /= p_;
    }
    for (int i = 0; i < n_; ++i) {
        os << ':' << a % p_;
        a /= p_;
    }
    return os.str();
}

Elt FieldTower::decode(const std::string& s) const {
    std::vector<int> digits;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ':')) {
        if (part.empty() ||
            part.find_first_not_of("0123456789") != std::string::npos)
            throw FieldError("bad element encoding: " + s);
        digits.push_back(std::stoi(part));
    }
    if (static_cast<int>(digits.size()) != 2 * n_)
        throw FieldError("bad element encoding: " + s);
    int a = 0, b = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        int db = digits[i], da = digits[n_ + i];
        if (db < 0 || db >= p_ || da < 0 || da >= p_)
            throw FieldError("digit out of range: " + s);
        b = b * p_ + db;
        a = a * p_ + da;
    }
    return elem(a, b);
}

std::string FieldTower::describe_json() const {
    std::ostringstream os;
    os << "{\"p\":" << p_ << ",\"n\":" << n_ << ",\"f\":[";
    for (size_t i = 0; i < f_.size(); ++i) os << (i ? "," : "") << f_[i];
    os << "],\"g\":[" << g0_ << "," << g1_ << ",1]}";
    return os.str();
}

}  // namespace ptg
