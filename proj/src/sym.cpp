#include "ribbons/sym.hpp"

#include "ribbons/comp_ops.hpp"
#include "ribbons/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ribbons {

SymHExpr SymHExpr::unit() {
    SymHExpr e;
    e.add_term(Partition(), 1);
    return e;
}

SymHExpr SymHExpr::h(const Partition& lambda) {
    SymHExpr e;
    e.add_term(lambda, 1);
    return e;
}

Rat SymHExpr::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SymHExpr::add_term(const Partition& lambda, const Rat& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymHExpr& SymHExpr::operator+=(const SymHExpr& o) {
    for (const auto& [l, c] : o.terms_)
        add_term(l, c);
    return *this;
}

SymHExpr& SymHExpr::operator-=(const SymHExpr& o) {
    for (const auto& [l, c] : o.terms_)
        add_term(l, -c);
    return *this;
}

SymHExpr& SymHExpr::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [l, v] : terms_)
        v *= c;
    return *this;
}

std::string SymHExpr::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [l, c] : terms_) {
        Rat mag = c < 0 ? Rat(-c) : c;
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (mag != 1)
            out += rat_str(mag) + "*";
        out += "h[" + l.str() + "]";
    }
    return out;
}

namespace {

Partition merge_partitions(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition with_extra_part(const Partition& a, int e) {
    std::vector<int> parts = a.parts();
    parts.push_back(e);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

} // namespace

SymHExpr product(const SymHExpr& a, const SymHExpr& b) {
    SymHExpr out;
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms())
            out.add_term(merge_partitions(la, lb), ca * cb);
    return out;
}

SymHExpr pow(const SymHExpr& a, int m) {
    if (m < 0)
        throw std::invalid_argument("pow: negative exponent");
    SymHExpr out = SymHExpr::unit();
    for (int i = 0; i < m; ++i)
        out = product(out, a);
    return out;
}

QsymExpr h_to_m(const SymHExpr& e) {
    int degree = -1;
    for (const auto& [l, c] : e.terms()) {
        if (degree == -1)
            degree = l.size();
        else if (degree != l.size())
            throw std::invalid_argument("h_to_m: inhomogeneous expression");
    }
    if (degree == -1)
        return QsymExpr(Basis::M, 0);
    QsymExpr out(Basis::M, degree);
    for (const auto& [lambda, c] : e.terms()) {
        QsymExpr term = QsymExpr::unit(Basis::M);
        for (int k : lambda.parts()) {
            QsymExpr hk(Basis::M, k);
            for (const Composition& beta : compositions_of(k))
                hk.add_term(beta, 1);
            term = product(term, hk);
        }
        out += c * term;
    }
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (inner_.length() > outer_.length())
        throw std::invalid_argument("skew shape: inner longer than outer");
    for (int i = 0; i < inner_.length(); ++i)
        if (inner_.part(i) > outer_.part(i))
            throw std::invalid_argument("skew shape: inner does not fit in outer");
}

SkewShape SkewShape::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return SkewShape(Partition::parse(text), Partition());
    return SkewShape(Partition::parse(text.substr(0, slash)),
                     Partition::parse(text.substr(slash + 1)));
}

int SkewShape::inner_part(int row) const {
    return row < inner_.length() ? inner_.part(row) : 0;
}

int SkewShape::cells() const { return outer_.size() - inner_.size(); }

std::string SkewShape::str() const {
    std::string s = outer_.str();
    if (!inner_.empty())
        s += "/" + inner_.str();
    return s;
}

DescentSet StandardTableau::descents() const {
    int n = shape.cells();
    std::vector<int> row_of(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int v : rows[r])
            if (v > 0)
                row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
    std::vector<int> des;
    for (int i = 1; i < n; ++i)
        if (row_of[static_cast<std::size_t>(i) + 1] > row_of[static_cast<std::size_t>(i)])
            des.push_back(i);
    return DescentSet(n, std::move(des));
}

SkewShape ribbon_shape(const Composition& beta) {
    if (beta.empty())
        throw std::invalid_argument("ribbon_shape: empty composition");
    int k = beta.length();
    std::vector<int> outer(static_cast<std::size_t>(k));
    std::vector<int> inner;
    for (int i = 0; i < k; ++i) {
        // Row i from the top holds part k-1-i; rows overlap in one column.
        int sum = 0;
        for (int j = 0; j < k - i; ++j)
            sum += beta.part(j);
        outer[static_cast<std::size_t>(i)] = sum - (k - 1 - i);
    }
    for (int i = 1; i < k; ++i)
        if (outer[static_cast<std::size_t>(i)] > 1)
            inner.push_back(outer[static_cast<std::size_t>(i)] - 1);
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

SymHExpr ribbon_in_h(const Composition& beta) {
    if (beta.empty())
        throw std::invalid_argument("ribbon_in_h: empty composition");
    SymHExpr out;
    int lb = beta.length();
    for (const Composition& alpha : coarsenings(beta)) {
        Rat sign = ((lb - alpha.length()) % 2 == 0) ? 1 : -1;
        out.add_term(sort_to_partition(alpha), sign);
    }
    return out;
}

std::pair<Composition, Composition> ribbon_product(const Composition& a,
                                                   const Composition& b) {
    return {concat(a, b), near_concat(a, b)};
}

SymHExpr ribbon_product_in_h(const Composition& a, const Composition& b) {
    return ribbon_in_h(concat(a, b)) + ribbon_in_h(near_concat(a, b));
}

bool ribbon_equal(const Composition& a, const Composition& b) {
    return ribbon_in_h(a) == ribbon_in_h(b);
}

SymHExpr jacobi_trudi(const SkewShape& shape) {
    int k = shape.outer().length();
    if (k == 0)
        return SymHExpr::unit();
    if (k > 16)
        throw ResourceError("jacobi_trudi: more than 16 rows");
    // entry(i, j) = h_{outer_i - inner_j - i + j}, 1-based i, j.
    auto exponent = [&](int i, int j) {
        return shape.outer().part(i - 1) - shape.inner_part(j - 1) - i + j;
    };
    // D[mask] = minor on the first popcount(mask) rows and the column set
    // given by mask, built by expansion along its last row.
    std::vector<SymHExpr> d(std::size_t(1) << k);
    d[0] = SymHExpr::unit();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        int m = __builtin_popcount(mask);
        SymHExpr acc;
        int pos = 0;
        for (int j = 1; j <= k; ++j) {
            if (!(mask & (1u << (j - 1))))
                continue;
            ++pos; // 1-based position of column j inside the mask
            int e = exponent(m, j);
            if (e < 0)
                continue;
            const SymHExpr& sub = d[mask & ~(1u << (j - 1))];
            Rat sign = ((m + pos) % 2 == 0) ? 1 : -1;
            if (e == 0) {
                SymHExpr t = sub;
                t *= sign;
                acc += t;
            } else {
                for (const auto& [l, c] : sub.terms())
                    acc.add_term(with_extra_part(l, e), sign * c);
            }
        }
        d[mask] = std::move(acc);
    }
    return d[(std::size_t(1) << k) - 1];
}

namespace {

// Depth-first enumeration of standard fillings. next[r] is the leftmost
// unfilled column of row r (1-based); a cell is addable when the cell above
// it, if any, is already filled.
void syt_dfs(const SkewShape& shape, std::vector<int>& next, std::vector<int>& row_of,
             int v, int n, const std::function<void(const std::vector<int>&)>& emit) {
    if (v > n) {
        emit(row_of);
        return;
    }
    int k = shape.outer().length();
    for (int r = 0; r < k; ++r) {
        int col = next[static_cast<std::size_t>(r)];
        if (col > shape.outer().part(r))
            continue;
        if (r > 0 && col > shape.inner_part(r - 1) && col <= shape.outer().part(r - 1)) {
            // Cell above exists; filled iff row r-1 has moved past it.
            if (next[static_cast<std::size_t>(r - 1)] <= col)
                continue;
        }
        next[static_cast<std::size_t>(r)] = col + 1;
        row_of[static_cast<std::size_t>(v)] = r;
        syt_dfs(shape, next, row_of, v + 1, n, emit);
        next[static_cast<std::size_t>(r)] = col;
    }
}

void for_each_filling(const SkewShape& shape,
                      const std::function<void(const std::vector<int>&)>& emit) {
    int n = shape.cells();
    if (n > 12)
        throw ResourceError("skew tableau enumeration: more than 12 cells");
    int k = shape.outer().length();
    std::vector<int> next(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r)
        next[static_cast<std::size_t>(r)] = shape.inner_part(r) + 1;
    std::vector<int> row_of(static_cast<std::size_t>(n) + 1, -1);
    if (n == 0) {
        emit(row_of);
        return;
    }
    syt_dfs(shape, next, row_of, 1, n, emit);
}

} // namespace

QsymExpr skew_schur_in_f(const SkewShape& shape) {
    int n = shape.cells();
    QsymExpr out(Basis::F, n);
    if (n == 0) {
        return QsymExpr::unit(Basis::F);
    }
    for_each_filling(shape, [&](const std::vector<int>& row_of) {
        std::vector<int> des;
        for (int i = 1; i < n; ++i)
            if (row_of[static_cast<std::size_t>(i) + 1] > row_of[static_cast<std::size_t>(i)])
                des.push_back(i);
        out.add_term(composition_of(DescentSet(n, std::move(des))), 1);
    });
    return out;
}

std::vector<StandardTableau> standard_tableaux(const SkewShape& shape) {
    std::vector<StandardTableau> out;
    int k = shape.outer().length();
    for_each_filling(shape, [&](const std::vector<int>& row_of) {
        StandardTableau t;
        t.shape = shape;
        t.rows.assign(static_cast<std::size_t>(k), {});
        std::vector<int> fill(static_cast<std::size_t>(k));
        for (int r = 0; r < k; ++r) {
            t.rows[static_cast<std::size_t>(r)].assign(
                static_cast<std::size_t>(shape.outer().part(r)), 0);
            fill[static_cast<std::size_t>(r)] = shape.inner_part(r);
        }
        for (int v = 1; v <= shape.cells(); ++v) {
            int r = row_of[static_cast<std::size_t>(v)];
            t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(
                fill[static_cast<std::size_t>(r)]++)] = v;
        }
        out.push_back(std::move(t));
    });
    return out;
}

QsymExpr schur_in_f(const Partition& lambda) {
    return skew_schur_in_f(SkewShape(lambda, Partition()));
}

QsymExpr ribbon_in_f(const Composition& beta) {
    return skew_schur_in_f(ribbon_shape(beta));
}

Composition lambda_tilde(const Partition& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("lambda_tilde: empty partition");
    int n = lambda.size();
    DescentSet s = descent_set(lambda.conjugate().as_composition());
    std::vector<int> complement;
    for (int x = 1; x < n; ++x)
        if (!s.contains(x))
            complement.push_back(x);
    return composition_of(DescentSet(n, std::move(complement)));
}

std::pair<Composition, Composition> spread(const QsymExpr& e) {
    if (e.basis() != Basis::F)
        throw std::invalid_argument("spread: expression not in the F basis");
    if (e.is_zero())
        throw std::invalid_argument("spread: zero expression");
    return {e.terms().begin()->first, e.terms().rbegin()->first};
}

std::map<Partition, Rat, PartitionOrder> schur_extract(const QsymExpr& e) {
    if (e.basis() != Basis::F)
        throw std::invalid_argument("schur_extract: expression not in the F basis");
    std::map<Partition, Rat, PartitionOrder> out;
    QsymExpr rem = e;
    while (!rem.is_zero()) {
        const auto& [beta, c] = *rem.terms().rbegin();
        const std::vector<int>& parts = beta.parts();
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i - 1] < parts[i])
                throw std::invalid_argument(
                    "schur_extract: leading term is not a partition; "
                    "expression is outside the Schur span");
        Partition lambda(parts);
        out[lambda] = c;
        rem -= c * schur_in_f(lambda);
    }
    return out;
}

std::map<Partition, Rat, PartitionOrder> ribbon_lr_coeffs(const Composition& beta) {
    return schur_extract(ribbon_in_f(beta));
}

bool verify_plethysm_average(int m, const Composition& beta) {
    if (m < 1)
        throw std::invalid_argument("verify_plethysm_average: m must be positive");
    if (beta.empty())
        throw std::invalid_argument("verify_plethysm_average: empty composition");
    if (m * beta.size() > 24)
        throw ResourceError("verify_plethysm_average: m * size > 24");
    SymHExpr lhs;
    for (const Composition& alpha : compositions_of(m))
        lhs += ribbon_in_h(circ(alpha, beta));
    return lhs == pow(ribbon_in_h(beta), m);
}

} // namespace ribbons
