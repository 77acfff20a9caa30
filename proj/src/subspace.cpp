#include "ptg/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace ptg {

BigInt grassmannian_count(int p, int n) {
    BigInt num = 1, den = 1;
    BigInt p2n = big_pow(p, 2 * n), pn = big_pow(p, n);
    for (int i = 0; i < n; ++i) {
        num *= p2n - big_pow(p, i);
        den *= pn - big_pow(p, i);
    }
    BigInt count = num / den;
    if (count * den != num) throw FieldError("grassmannian count not integral (internal)");
    if (count > big_pow(p, 2 * n * n))
        throw FieldError("grassmannian count exceeds p^(2n^2) (internal)");
    return count;
}

namespace {

// Next k-combination of column indices in lex order; false when exhausted.
bool next_combination(std::vector<int>& c, int nmax) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < nmax - (k - i)) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

BigInt gaussian_binomial(int p, int d, int r) {
    BigInt num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= big_pow(p, d) - big_pow(p, i);
        den *= big_pow(p, r) - big_pow(p, i);
    }
    return num / den;
}

}  // namespace

std::vector<SubspaceBasis> enumerate_subspaces(const FieldTower& tw, int r,
                                               std::uint64_t budget) {
    int d = 2 * tw.n();
    int p = tw.p();
    if (r < 0 || r > d) throw FieldError("enumerate_subspaces: bad dimension");
    if (gaussian_binomial(p, d, r) > budget)
        throw BudgetExceeded("subspace enumeration exceeds budget");

    std::vector<SubspaceBasis> out;
    if (r == 0) {
        out.push_back(SubspaceBasis{});
        return out;
    }
    std::vector<int> pivots(r);
    for (int i = 0; i < r; ++i) pivots[i] = i;
    do {
        // Free slots: (row, col) with col non-pivot and col > pivots[row].
        std::vector<char> is_pivot(d, 0);
        for (int c : pivots) is_pivot[c] = 1;
        std::vector<std::pair<int, int>> slots;
        for (int row = 0; row < r; ++row)
            for (int col = pivots[row] + 1; col < d; ++col)
                if (!is_pivot[col]) slots.emplace_back(row, col);

        std::vector<int> vals(slots.size(), 0);
        while (true) {
            SubspaceBasis b;
            b.rows.assign(r, std::vector<int>(d, 0));
            for (int row = 0; row < r; ++row) b.rows[row][pivots[row]] = 1;
            for (size_t s = 0; s < slots.size(); ++s)
                b.rows[slots[s].first][slots[s].second] = vals[s];
            out.push_back(std::move(b));
            // odometer, last slot fastest
            int i = static_cast<int>(slots.size()) - 1;
            while (i >= 0 && vals[i] == p - 1) vals[i--] = 0;
            if (i < 0) break;
            ++vals[i];
        }
    } while (next_combination(pivots, d));
    return out;
}

std::vector<int> elt_coords(const FieldTower& tw, Elt x) {
    std::vector<int> c(2 * tw.n());
    int a = tw.a_of(x), b = tw.b_of(x);
    for (int i = 0; i < tw.n(); ++i) {
        c[i] = a % tw.p();
        a /= tw.p();
        c[tw.n() + i] = b % tw.p();
        b /= tw.p();
    }
    return c;
}

Elt coords_elt(const FieldTower& tw, const std::vector<int>& coords) {
    int a = 0, b = 0;
    for (int i = tw.n() - 1; i >= 0; --i) {
        a = a * tw.p() + coords[i];
        b = b * tw.p() + coords[tw.n() + i];
    }
    return tw.elem(a, b);
}

std::vector<Elt> span_elements(const FieldTower& tw, const SubspaceBasis& v) {
    int r = v.dim();
    int d = 2 * tw.n();
    long long total = 1;
    for (int i = 0; i < r; ++i) total *= tw.p();
    std::vector<Elt> out;
    out.reserve(total);
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> acc(d, 0);
        long long t = idx;
        for (int row = 0; row < r; ++row) {
            int coef = static_cast<int>(t % tw.p());
            t /= tw.p();
            for (int col = 0; col < d; ++col)
                acc[col] = (acc[col] + coef * v.rows[row][col]) % tw.p();
        }
        out.push_back(coords_elt(tw, acc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool subspace_contains(const FieldTower& tw, const SubspaceBasis& v, Elt x) {
    std::vector<int> c = elt_coords(tw, x);
    int d = 2 * tw.n();
    for (const auto& row : v.rows) {
        int pivot = 0;
        while (pivot < d && row[pivot] == 0) ++pivot;
        int coef = c[pivot];
        if (coef == 0) continue;
        for (int col = 0; col < d; ++col)
            c[col] = ((c[col] - coef * row[col]) % tw.p() + tw.p()) % tw.p();
    }
    return std::all_of(c.begin(), c.end(), [](int x0) { return x0 == 0; });
}

int cover_number(const FieldTower& tw, const SubspaceBasis& v) {
    std::vector<char> seen(tw.q() + 1, 0);
    int count = 0;
    for (Elt x : span_elements(tw, v)) {
        if (x == 0) continue;
        int d = tw.dir_of(x);
        if (!seen[d]) {
            seen[d] = 1;
            ++count;
        }
    }
    return count;
}

bool is_base_line(const FieldTower& tw, const SubspaceBasis& v) {
    long long size = 1;
    for (int i = 0; i < v.dim(); ++i) size *= tw.p();
    return size == tw.q() && cover_number(tw, v) == 1;
}

SubspaceBasis subfield_witness(const FieldTower& tw, int t) {
    if (tw.n() < 2) throw FieldError("subfield_witness: requires n >= 2");
    if (t < 1 || t >= tw.n() || tw.n() % t != 0)
        throw FieldError("subfield_witness: t must be a proper divisor of n");
    long long pt = 1;
    for (int i = 0; i < t; ++i) pt *= tw.p();
    // F_{p^t} inside F_{q^2}: the fixed points of x -> x^{p^t}.
    std::vector<Elt> subfield;
    for (Elt x = 0; x < tw.q2(); ++x)
        if (tw.pow2(x, pt) == x) subfield.push_back(x);
    if (static_cast<long long>(subfield.size()) != pt)
        throw FieldError("subfield size mismatch (internal)");

    int max_cover = (tw.q() - 1) / (static_cast<int>(pt) - 1);
    for (const auto& v : enumerate_subspaces(tw, tw.n())) {
        if (is_base_line(tw, v)) continue;
        bool closed = true;
        for (const auto& row : v.rows) {
            Elt e = coords_elt(tw, row);
            for (Elt s : subfield) {
                if (!subspace_contains(tw, v, tw.mul2(s, e))) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (!closed) continue;
        if (cover_number(tw, v) > max_cover)
            throw FieldError("subfield witness cover number too large (internal)");
        return v;
    }
    throw FieldError("no subfield witness found (internal)");
}

std::string subspace_to_string(const FieldTower& tw, const SubspaceBasis& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.rows.size(); ++i) {
        if (i) os << ';';
        os << tw.encode(coords_elt(tw, v.rows[i]));
    }
    return os.str();
}

SubspaceCatalog build_subspace_catalog(const FieldTower& tw) {
    if (tw.q() + 1 > 64) throw FieldError("subspace catalog needs q + 1 <= 64");
    SubspaceCatalog cat;
    cat.bases = enumerate_subspaces(tw, tw.n());
    cat.elements.reserve(cat.bases.size());
    cat.dir_masks.reserve(cat.bases.size());
    for (const auto& b : cat.bases) {
        auto elems = span_elements(tw, b);
        std::uint64_t mask = 0;
        for (Elt x : elems)
            if (x != 0) mask |= std::uint64_t{1} << tw.dir_of(x);
        cat.elements.push_back(std::move(elems));
        cat.dir_masks.push_back(mask);
    }
    return cat;
}

}  // namespace ptg
