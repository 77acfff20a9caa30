#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptg {

/// Element of F_{q^2}, encoded as a + b*q where a, b in [0, q) index F_q
/// and the element is a + b*v for the fixed basis {1, v}.
using Elt = int;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The chain F_p < F_q < F_{q^2} with q = p^n, built from the
/// lexicographically smallest monic irreducible moduli so that repeated
/// constructions are identical everywhere.
///
/// F_q elements are indices in [0, q): the index is the base-p digit vector
/// of the residue polynomial, least significant digit first
/// (index = sum d_i * p^i for the residue sum d_i * x^i).
class FieldTower {
public:
    FieldTower(int p, int n, int max_q2 = 1 << 16);

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return q_; }
    int q2() const { return q2_; }

    /// Modulus of F_q over F_p, monic, coefficients low-degree first (length n+1).
    const std::vector<int>& f() const { return f_; }
    /// g = y^2 + g1*y + g0 over F_q (indices).
    int g0() const { return g0_; }
    int g1() const { return g1_; }
    /// The residue class of y, i.e. the basis element v.
    Elt v() const { return q_; }

    // F_q arithmetic on indices.
    int add(int x, int y) const { return fq_add_[x * q_ + y]; }
    int sub(int x, int y) const { return fq_add_[x * q_ + fq_neg_[y]]; }
    int mul(int x, int y) const { return fq_mul_[x * q_ + y]; }
    int neg(int x) const { return fq_neg_[x]; }
    int inv(int x) const;

    // F_{q^2} arithmetic.
    Elt elem(int a, int b) const { return a + b * q_; }
    int a_of(Elt x) const { return x % q_; }
    int b_of(Elt x) const { return x / q_; }
    Elt add2(Elt x, Elt y) const;
    Elt sub2(Elt x, Elt y) const;
    Elt neg2(Elt x) const;
    Elt mul2(Elt x, Elt y) const;
    Elt inv2(Elt x) const;
    Elt pow2(Elt x, long long e) const;
    Elt frobenius(Elt x) const { return pow2(x, q_); }

    bool in_base_field(Elt x) const { return b_of(x) == 0; }

    /// Direction code of a nonzero element: t in [0, q) for the class [1:t],
    /// q for infinity = [0:1]. This indexes the F_q*-coset of x, since
    /// sigma(pi(.)) is constant on cosets.
    int dir_of(Elt x) const {
        if (x == 0) throw FieldError("dir_of: zero has no direction");
        return dir_of_[x];
    }

    /// Text form: base-p digits of b then a, little-endian, joined by ':'.
    std::string encode(Elt x) const;
    Elt decode(const std::string& s) const;

    /// JSON description {p, n, f, g}.
    std::string describe_json() const;

private:
    int p_, n_, q_, q2_;
    std::vector<int> f_;
    int g0_, g1_;
    std::vector<int> fq_add_, fq_mul_, fq_neg_, fq_inv_;
    std::vector<int> dir_of_;
};

bool is_prime(int p);

/// Factor q = p^n with p prime, for rebuilding a tower from a graph key.
/// Throws FieldError if q is not a prime power.
std::pair<int, int> prime_power_split(int q);

}  // namespace ptg
