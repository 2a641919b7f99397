#include "ribbons/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbons {

namespace {

// Reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(RatMat& a) {
    std::vector<std::size_t> pivots;
    if (a.empty())
        return pivots;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(a[sel], a[r]);
        Rat inv = a[r][c];
        for (std::size_t j = c; j < cols; ++j)
            a[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int rank(RatMat a) { return static_cast<int>(rref(a).size()); }

std::vector<RatVec> kernel_basis(const RatMat& a) {
    if (a.empty())
        return {};
    std::size_t cols = a[0].size();
    RatMat m = a;
    std::vector<std::size_t> pivots = rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : pivots)
        is_pivot[c] = 1;
    std::vector<RatVec> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c])
            continue;
        RatVec v(cols, Rat(0));
        v[free_c] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -m[pr][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool nonneg_solution_exists(const RatMat& a, const RatVec& b) {
    std::size_t m = a.size();
    if (m == 0)
        return true;
    std::size_t n = a[0].size();
    if (b.size() != m)
        throw std::invalid_argument("nonneg_solution_exists: dimension mismatch");

    // Phase-I tableau: columns 0..n-1 original, n..n+m-1 artificial, last
    // column the right-hand side. Minimize the sum of artificials.
    RatMat t(m, RatVec(n + m + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = flip ? -a[i][j] : a[i][j];
        t[i][n + i] = 1;
        t[i].back() = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = n + i;

    // Objective row: reduced costs for minimizing the artificial sum,
    // c_j - sum over rows of t[i][j] for the artificial basis.
    RatVec obj(n + m + 1, Rat(0));
    for (std::size_t j = 0; j < n + m + 1; ++j) {
        Rat s(0);
        for (std::size_t i = 0; i < m; ++i)
            s += t[i][j];
        Rat c = (j >= n && j < n + m) ? Rat(1) : Rat(0);
        obj[j] = c - s;
    }

    for (;;) {
        // Bland: entering variable is the lowest index with negative
        // reduced cost.
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n + m)
            break; // optimal
        // Leaving row: minimum ratio, ties by the lowest basis index.
        std::size_t leave = m;
        Rat best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0)
                continue;
            Rat ratio = t[i].back() / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m)
            return false; // unbounded below: cannot happen for phase I
        Rat piv = t[leave][enter];
        for (auto& x : t[leave])
            x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < n + m + 1; ++j)
                t[i][j] -= f * t[leave][j];
        }
        Rat f = obj[enter];
        if (f != 0)
            for (std::size_t j = 0; j < n + m + 1; ++j)
                obj[j] -= f * t[leave][j];
        basis[leave] = enter;
    }

    // Feasible iff the artificial objective reached zero, i.e. every
    // artificial basic variable has value zero.
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n && t[i].back() != 0)
            return false;
    return true;
}

RatVec primitive_integer_vector(RatVec v, bool make_first_positive) {
    Int lcm_den(1);
    for (const Rat& x : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    Int gcd_num(0);
    for (Rat& x : v) {
        x *= Rat(lcm_den);
        gcd_num = boost::multiprecision::gcd(gcd_num, numerator(x));
    }
    if (gcd_num != 0)
        for (Rat& x : v)
            x /= Rat(gcd_num);
    if (make_first_positive)
        for (const Rat& x : v) {
            if (x == 0)
                continue;
            if (x < 0)
                for (Rat& y : v)
                    y = -y;
            break;
        }
    return v;
}

} // namespace ribbons
