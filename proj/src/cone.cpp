#include "ribbons/cone.hpp"

#include "ribbons/errors.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>

namespace ribbons {

std::vector<Composition> class_representatives(int n) {
    std::map<std::string, Composition> reps;
    for (const Composition& beta : compositions_of(n)) {
        std::string key = coarsening_multiset(beta).str();
        reps.emplace(key, beta); // first hit is lex-least: enumeration is ascending
    }
    std::vector<Composition> out;
    out.reserve(reps.size());
    for (const auto& [key, beta] : reps)
        out.push_back(beta);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> cone_vector(const Composition& beta) {
    if (beta.empty())
        throw std::invalid_argument("cone_vector: empty composition");
    PartitionMultiset m = coarsening_multiset(beta);
    std::vector<Partition> lambdas = partitions_of(beta.size());
    std::vector<long long> v;
    v.reserve(lambdas.size());
    for (const Partition& l : lambdas)
        v.push_back(m.multiplicity(l));
    return v;
}

RayMatrix ray_matrix(int n) {
    if (n < 1)
        throw std::invalid_argument("ray_matrix: n must be positive");
    if (n > 12)
        throw ResourceError("ray_matrix: n > 12");
    RayMatrix out;
    out.n = n;
    out.rows = partitions_of(n);
    out.cols = compositions_of(n);
    out.entries.assign(out.rows.size(),
                       std::vector<long long>(out.cols.size(), 0));
    for (std::size_t j = 0; j < out.cols.size(); ++j) {
        std::vector<long long> v = cone_vector(out.cols[j]);
        for (std::size_t i = 0; i < out.rows.size(); ++i)
            out.entries[i][j] = v[i];
    }
    return out;
}

std::vector<int> run_profile(const std::vector<int>& subset) {
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw std::invalid_argument("run_profile: repeated element");
    std::vector<int> runs;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i == 0 || sorted[i] != sorted[i - 1] + 1)
            runs.push_back(1);
        else
            ++runs.back();
    }
    std::sort(runs.begin(), runs.end(), std::greater<int>());
    return runs;
}

std::vector<std::vector<int>> f_lambda(const Partition& lambda, int n) {
    if (lambda.size() != n + 1)
        throw std::invalid_argument("f_lambda: lambda must be a partition of n+1");
    if (n < 0 || n > 16)
        throw ResourceError("f_lambda: n out of range");
    std::vector<int> required;
    for (int p : lambda.parts())
        if (p >= 2)
            required.push_back(p - 1);
    // parts are decreasing, so required is already sorted decreasing
    std::vector<std::vector<int>> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> subset;
        for (int x = 1; x <= n; ++x)
            if (mask & (1ul << (x - 1)))
                subset.push_back(x);
        if (run_profile(subset) == required)
            out.push_back(std::move(subset));
    }
    std::sort(out.begin(), out.end());
    return out;
}

QsymExpr multicollection_to_f(const Multicollection& mc) {
    if (mc.n < 0)
        throw std::invalid_argument("multicollection: negative n");
    QsymExpr out(Basis::F, mc.n + 1);
    for (const auto& [subset, w] : mc.weights) {
        for (int x : subset)
            if (x < 1 || x > mc.n)
                throw std::invalid_argument("multicollection: subset element outside [n]");
        std::vector<int> sorted = subset;
        std::sort(sorted.begin(), sorted.end());
        out.add_term(composition_of(DescentSet(mc.n + 1, std::move(sorted))), w);
    }
    return out;
}

std::optional<Rat> balanced_check(const Multicollection& mc, const Partition& lambda) {
    std::vector<std::vector<int>> targets = f_lambda(lambda, mc.n);
    std::optional<Rat> common;
    for (const std::vector<int>& t : targets) {
        Rat sum(0);
        for (const auto& [subset, w] : mc.weights) {
            std::vector<int> sorted = subset;
            std::sort(sorted.begin(), sorted.end());
            bool contains = std::includes(sorted.begin(), sorted.end(), t.begin(), t.end());
            if (contains)
                sum += w;
        }
        if (!common)
            common = sum;
        else if (*common != sum)
            return std::nullopt;
    }
    return common;
}

bool fully_balanced(const Multicollection& mc) {
    for (const Partition& lambda : partitions_of(mc.n + 1))
        if (!balanced_check(mc, lambda))
            return false;
    return true;
}

namespace {

// Inequality rows of the cone in Schur coordinates: row(beta)[i] is the
// coefficient of F_beta in the fundamental expansion of s_{lambda_i}.
struct ConeSystem {
    int n = 0;
    std::vector<Partition> lambdas;
    std::vector<QsymExpr> schur_f; // F expansion per lambda
    std::vector<Composition> reps;
    RatMat rows; // one per rep
};

ConeSystem cone_system(int n) {
    ConeSystem s;
    s.n = n;
    s.lambdas = partitions_of(n);
    s.schur_f.reserve(s.lambdas.size());
    for (const Partition& l : s.lambdas)
        s.schur_f.push_back(schur_in_f(l));
    s.reps = class_representatives(n);
    s.rows.reserve(s.reps.size());
    for (const Composition& beta : s.reps) {
        RatVec row;
        row.reserve(s.lambdas.size());
        for (const QsymExpr& sf : s.schur_f)
            row.push_back(sf.coeff(beta));
        s.rows.push_back(std::move(row));
    }
    return s;
}

RatMat invert(const RatMat& b) {
    std::size_t d = b.size();
    RatMat aug(d, RatVec(2 * d, Rat(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            aug[i][j] = b[i][j];
        aug[i][d + i] = 1;
    }
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t sel = c;
        while (sel < d && aug[sel][c] == 0)
            ++sel;
        if (sel == d)
            throw std::logic_error("invert: singular matrix");
        std::swap(aug[sel], aug[c]);
        Rat piv = aug[c][c];
        for (auto& x : aug[c])
            x /= piv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == c || aug[i][c] == 0)
                continue;
            Rat f = aug[i][c];
            for (std::size_t j = 0; j < 2 * d; ++j)
                aug[i][j] -= f * aug[c][j];
        }
    }
    RatMat inv(d, RatVec(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            inv[i][j] = aug[i][d + j];
    return inv;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// Extreme rays of { x : rows x >= 0 } assuming the rows have full column
// rank (pointed cone). Double description: seed with an invertible row
// subset, then cut by the remaining rows one at a time.
std::vector<RatVec> dd_rays(const RatMat& rows) {
    std::size_t d = rows.empty() ? 0 : rows[0].size();
    if (d == 0)
        return {};

    std::vector<std::size_t> seed;
    RatMat chosen;
    for (std::size_t i = 0; i < rows.size() && seed.size() < d; ++i) {
        chosen.push_back(rows[i]);
        if (rank(chosen) == static_cast<int>(chosen.size()))
            seed.push_back(i);
        else
            chosen.pop_back();
    }
    if (seed.size() < d)
        throw std::logic_error("dd_rays: inequality rows do not span");

    RatMat b(d);
    for (std::size_t k = 0; k < d; ++k)
        b[k] = rows[seed[k]];
    RatMat binv = invert(b);
    std::vector<RatVec> rays(d, RatVec(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            rays[j][i] = binv[i][j];
    for (auto& r : rays)
        r = primitive_integer_vector(std::move(r), false);

    std::vector<std::size_t> processed = seed;
    std::set<std::size_t> seeded(seed.begin(), seed.end());
    auto active_rows = [&](const RatVec& ray) {
        std::vector<std::size_t> act;
        for (std::size_t idx : processed)
            if (dot(rows[idx], ray) == 0)
                act.push_back(idx);
        std::sort(act.begin(), act.end());
        return act;
    };

    for (std::size_t next = 0; next < rows.size(); ++next) {
        if (seeded.count(next))
            continue;
        const RatVec& a = rows[next];
        std::vector<RatVec> plus, minus, zero;
        for (const RatVec& r : rays) {
            Rat s = dot(a, r);
            if (s > 0)
                plus.push_back(r);
            else if (s < 0)
                minus.push_back(r);
            else
                zero.push_back(r);
        }
        std::vector<RatVec> fresh;
        for (const RatVec& p : plus) {
            std::vector<std::size_t> ap = active_rows(p);
            for (const RatVec& m : minus) {
                std::vector<std::size_t> am = active_rows(m);
                std::vector<std::size_t> common;
                std::set_intersection(ap.begin(), ap.end(), am.begin(), am.end(),
                                      std::back_inserter(common));
                RatMat sub;
                sub.reserve(common.size());
                for (std::size_t idx : common)
                    sub.push_back(rows[idx]);
                if (rank(sub) != static_cast<int>(d) - 2)
                    continue; // not adjacent
                Rat sp = dot(a, p), sm = dot(a, m);
                RatVec w(d);
                for (std::size_t i = 0; i < d; ++i)
                    w[i] = sp * m[i] - sm * p[i];
                fresh.push_back(primitive_integer_vector(std::move(w), false));
            }
        }
        std::set<RatVec> merged(plus.begin(), plus.end());
        merged.insert(zero.begin(), zero.end());
        merged.insert(fresh.begin(), fresh.end());
        rays.assign(merged.begin(), merged.end());
        processed.push_back(next);
    }

    std::sort(rays.begin(), rays.end(), [](const RatVec& a, const RatVec& b) {
        return b < a; // descending lex on coefficient vectors
    });
    return rays;
}

std::vector<ConeRay> package_rays(const ConeSystem& s, std::vector<RatVec> vecs) {
    std::vector<ConeRay> out;
    out.reserve(vecs.size());
    for (RatVec& v : vecs) {
        ConeRay ray;
        QsymExpr f(Basis::F, s.n);
        for (std::size_t i = 0; i < s.lambdas.size(); ++i) {
            if (v[i] == 0)
                continue;
            ray.schur.emplace(s.lambdas[i], v[i]);
            f += v[i] * s.schur_f[i];
        }
        for (const auto& [beta, c] : f.terms())
            if (c < 0)
                throw std::logic_error("extreme ray with a negative fundamental coefficient");
        ray.fundamental = std::move(f);
        out.push_back(std::move(ray));
    }
    return out;
}

} // namespace

std::vector<ConeRay> extreme_rays(int n) {
    if (n < 1)
        throw std::invalid_argument("extreme_rays: n must be positive");
    if (n > 7)
        throw ResourceError("extreme_rays: n > 7");
    ConeSystem s = cone_system(n);
    return package_rays(s, dd_rays(s.rows));
}

std::vector<ConeRay> extreme_rays_reference(int n) {
    if (n < 1)
        throw std::invalid_argument("extreme_rays_reference: n must be positive");
    if (n > 5)
        throw ResourceError("extreme_rays_reference: n > 5");
    ConeSystem s = cone_system(n);
    std::size_t d = s.lambdas.size();
    std::size_t r = s.rows.size();
    if (d == 1) {
        // One-dimensional: the single generator.
        return package_rays(s, {RatVec{Rat(1)}});
    }
    std::set<RatVec> found;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
        if (pick.size() == d - 1) {
            RatMat sub;
            for (std::size_t idx : pick)
                sub.push_back(s.rows[idx]);
            std::vector<RatVec> null = kernel_basis(sub);
            if (null.size() != 1)
                return;
            RatVec z = primitive_integer_vector(std::move(null[0]), true);
            bool ok_pos = true, ok_neg = true;
            for (const RatVec& row : s.rows) {
                Rat v = dot(row, z);
                if (v < 0)
                    ok_pos = false;
                if (v > 0)
                    ok_neg = false;
                if (!ok_pos && !ok_neg)
                    return;
            }
            if (ok_neg && !ok_pos)
                for (Rat& x : z)
                    x = -x;
            found.insert(z);
            return;
        }
        for (std::size_t i = start; i < r; ++i) {
            pick.push_back(i);
            choose(i + 1);
            pick.pop_back();
        }
    };
    choose(0);
    std::vector<RatVec> vecs(found.begin(), found.end());
    std::sort(vecs.begin(), vecs.end(), [](const RatVec& a, const RatVec& b) {
        return b < a;
    });
    return package_rays(s, std::move(vecs));
}

bool is_extreme_vector(const Composition& alpha) {
    if (alpha.empty())
        throw std::invalid_argument("is_extreme_vector: empty composition");
    int n = alpha.size();
    if (n > 8)
        throw ResourceError("is_extreme_vector: size > 8");
    std::vector<long long> target = cone_vector(alpha);
    std::vector<Composition> reps = class_representatives(n);
    std::vector<std::vector<long long>> others;
    for (const Composition& beta : reps) {
        std::vector<long long> v = cone_vector(beta);
        if (v != target)
            others.push_back(std::move(v));
    }
    if (others.empty())
        return true;
    // Feasibility of: convex combination of the other vectors equals target.
    std::size_t d = target.size();
    RatMat a(d + 1, RatVec(others.size()));
    RatVec b(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < others.size(); ++j)
            a[i][j] = others[j][i];
        b[i] = target[i];
    }
    for (std::size_t j = 0; j < others.size(); ++j)
        a[d][j] = 1;
    b[d] = 1;
    return !nonneg_solution_exists(a, b);
}

FacetReport facet_report(int n) {
    if (n < 1)
        throw std::invalid_argument("facet_report: n must be positive");
    if (n > 6)
        throw ResourceError("facet_report: n > 6");
    ConeSystem s = cone_system(n);
    FacetReport rep;
    rep.n = n;
    rep.reps = s.reps;
    std::size_t d = s.lambdas.size();
    for (std::size_t i = 0; i < s.reps.size(); ++i) {
        // Can row i be written as a nonnegative combination of the others?
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < s.rows.size(); ++j)
            if (j != i)
                others.push_back(j);
        RatMat a(d, RatVec(others.size()));
        RatVec b(d);
        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t j = 0; j < others.size(); ++j)
                a[c][j] = s.rows[others[j]][c];
            b[c] = s.rows[i][c];
        }
        bool red = nonneg_solution_exists(a, b);
        rep.redundant.push_back(red);
        rep.vertex_extreme.push_back(is_extreme_vector(s.reps[i]));
        if (red)
            ++rep.redundant_count;
    }
    rep.status = rep.redundant_count == 0 ? "verified at this scale"
                                          : "redundant inequality found";
    return rep;
}

} // namespace ribbons
