#include "ribbons/verify.hpp"

#include "ribbons/comp_ops.hpp"
#include "ribbons/cone.hpp"
#include "ribbons/perms.hpp"
#include "ribbons/qsym.hpp"
#include "ribbons/sym.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ribbons {

bool SuiteResult::passed() const {
    for (const CheckResult& c : checks)
        if (!c.passed)
            return false;
    return true;
}

std::vector<std::string> verify_suite_names() {
    return {"equivalence", "ribbon", "descents", "cone"};
}

int verify_default_n_max(const std::string& suite) {
    if (suite == "equivalence")
        return 9;
    if (suite == "ribbon")
        return 8;
    if (suite == "descents")
        return 7;
    if (suite == "cone")
        return 6;
    throw std::invalid_argument("unknown verify suite: " + suite);
}

int verify_worker_count() {
    const char* env = std::getenv("RIBBONS_WORKERS");
    if (!env)
        return 1;
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

namespace {

using Job = std::pair<std::string, std::function<std::string()>>; // detail, "" = ok

std::vector<CheckResult> run_jobs(const std::vector<Job>& jobs) {
    std::vector<CheckResult> out(jobs.size());
    int workers = verify_worker_count();
    auto run_one = [&](std::size_t i) {
        CheckResult r;
        r.name = jobs[i].first;
        try {
            r.detail = jobs[i].second();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        out[i] = std::move(r);
    };
    if (workers <= 1 || jobs.size() <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i)
            run_one(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> futures;
    int count = std::min<int>(workers, static_cast<int>(jobs.size()));
    for (int w = 0; w < count; ++w)
        futures.push_back(std::async(std::launch::async, [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size())
                    return;
                run_one(i);
            }
        }));
    for (auto& f : futures)
        f.get();
    return out;
}

std::string partition_key(const std::vector<std::vector<std::string>>& groups) {
    std::vector<std::string> parts;
    for (const auto& g : groups) {
        std::string s;
        for (const auto& m : g)
            s += m + "|";
        parts.push_back(s);
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts)
        out += p + ";";
    return out;
}

// Group the compositions of n by a label function and serialize the
// induced set partition for comparison between routes.
std::string grouping(int n, const std::function<std::string(const Composition&)>& label) {
    std::map<std::string, std::vector<std::string>> groups;
    for (const Composition& beta : compositions_of(n))
        groups[label(beta)].push_back(beta.str());
    std::vector<std::vector<std::string>> gs;
    for (auto& [k, v] : groups)
        gs.push_back(v);
    return partition_key(gs);
}

std::string check_equivalence_n(int n) {
    std::string by_multiset = grouping(
        n, [](const Composition& b) { return coarsening_multiset(b).str(); });
    std::string by_class = grouping(n, [](const Composition& b) {
        std::string key;
        for (const Composition& c : equivalence_class(b))
            key += c.str() + "/";
        return key;
    });
    std::string by_h = grouping(
        n, [](const Composition& b) { return ribbon_in_h(b).str(); });
    if (by_multiset != by_class)
        return "multiset and factorization partitions disagree at n=" + std::to_string(n);
    if (by_multiset != by_h)
        return "multiset and h-expansion partitions disagree at n=" + std::to_string(n);
    return "";
}

std::string check_class_structure_n(int n) {
    long long total = 0;
    std::set<std::string> seen;
    for (const Composition& beta : compositions_of(n)) {
        std::vector<Composition> cls = equivalence_class(beta);
        std::size_t size = cls.size();
        if ((size & (size - 1)) != 0)
            return "class size of " + beta.str() + " is not a power of two";
        int nonsym = 0;
        for (const Composition& f : irreducible_factorization(beta))
            if (!is_palindrome(f))
                ++nonsym;
        if (size != (std::size_t(1) << nonsym))
            return "class size of " + beta.str() +
                   " does not match its non-palindromic factor count";
        if (!std::binary_search(cls.begin(), cls.end(), beta.reversed()))
            return "reversal of " + beta.str() + " missing from its class";
        std::string key = cls.front().str();
        if (seen.insert(key).second)
            total += static_cast<long long>(size);
    }
    if (total != (1ll << (n - 1)))
        return "class sizes do not add up to 2^(n-1) at n=" + std::to_string(n);
    return "";
}

std::string check_factorization_n(int n) {
    for (const Composition& beta : compositions_of(n)) {
        std::vector<Composition> factors = irreducible_factorization(beta);
        if (compose_all(factors) != beta)
            return "factors of " + beta.str() + " do not recompose";
        for (const Composition& f : factors) {
            int fn = f.size();
            for (int p = 2; p < fn; ++p) {
                if (fn % p != 0)
                    continue;
                auto split = try_split(f, p);
                if (split && !is_trivial_pair(split->first, split->second))
                    return "factor " + f.str() + " of " + beta.str() +
                           " splits nontrivially";
            }
        }
        for (std::size_t i = 0; i + 1 < factors.size(); ++i)
            if (is_trivial_pair(factors[i], factors[i + 1]))
                return "adjacent trivial pair left in the factors of " + beta.str();
        // Independent route: peel the leftmost factor first.
        std::vector<Composition> left;
        Composition rest = beta;
        for (;;) {
            int rn = rest.size();
            bool split_found = false;
            for (int q = 2; q < rn && !split_found; ++q) {
                if (rn % q != 0)
                    continue;
                if (auto split = try_split(rest, rn / q)) {
                    left.push_back(split->first);
                    rest = split->second;
                    split_found = true;
                }
            }
            if (!split_found)
                break;
        }
        left.push_back(rest);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < left.size(); ++i)
                if (is_trivial_pair(left[i], left[i + 1])) {
                    left[i] = circ(left[i], left[i + 1]);
                    left.erase(left.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                    changed = true;
                    break;
                }
        }
        if (left != factors)
            return "left and right peeling disagree for " + beta.str();
    }
    return "";
}

std::string check_ribbon_routes_n(int n) {
    std::string by_h = grouping(
        n, [](const Composition& b) { return ribbon_in_h(b).str(); });
    std::string by_f = grouping(
        n, [](const Composition& b) { return ribbon_in_f(b).str(); });
    std::string by_multiset = grouping(
        n, [](const Composition& b) { return coarsening_multiset(b).str(); });
    if (by_h != by_f)
        return "h and tableau routes partition differently at n=" + std::to_string(n);
    if (by_h != by_multiset)
        return "h and multiset routes partition differently at n=" + std::to_string(n);
    return "";
}

std::string check_jacobi_trudi_n(int n) {
    for (const Composition& beta : compositions_of(n))
        if (jacobi_trudi(ribbon_shape(beta)) != ribbon_in_h(beta))
            return "determinant disagrees with the coarsening expansion for " + beta.str();
    return "";
}

std::string check_ribbon_count_n(int n) {
    std::set<std::string> functions;
    std::set<std::string> classes;
    for (const Composition& beta : compositions_of(n)) {
        functions.insert(ribbon_in_h(beta).str());
        classes.insert(coarsening_multiset(beta).str());
    }
    if (functions.size() != classes.size())
        return "distinct ribbon count differs from class count at n=" + std::to_string(n);
    return "";
}

std::string check_tensor_fixed() {
    Permutation s = Permutation::parse("213");
    Permutation t = Permutation::parse("132");
    if (tensor(s, t) != Permutation::parse("465132798"))
        return "tensor(213, 132) gave " + tensor(s, t).str();
    for (const Permutation& a : {Permutation::parse("123"), Permutation::parse("132"),
                                 Permutation::parse("213"), Permutation::parse("231"),
                                 Permutation::parse("312"), Permutation::parse("321")})
        for (const Permutation& b :
             {Permutation::parse("123"), Permutation::parse("132"),
              Permutation::parse("213"), Permutation::parse("231"),
              Permutation::parse("312"), Permutation::parse("321")}) {
            if (!verify_tensor_descents(a, b))
                return "descent identity fails for " + a.str() + " x " + b.str();
            if (tensor(a, b).star() != tensor(a.star(), b.star()))
                return "star does not distribute over tensor for " + a.str() + " x " +
                       b.str();
        }
    return "";
}

std::string check_tensor_random() {
    std::mt19937_64 rng(20260824);
    for (int trial = 0; trial < 1000; ++trial) {
        int m = 2 + static_cast<int>(rng() % 5);
        int k = 2 + static_cast<int>(rng() % 5);
        std::vector<int> a(static_cast<std::size_t>(m)), b(static_cast<std::size_t>(k));
        std::iota(a.begin(), a.end(), 1);
        std::iota(b.begin(), b.end(), 1);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        Permutation s{std::vector<int>(a)}, t{std::vector<int>(b)};
        if (!verify_tensor_descents(s, t))
            return "descent identity fails for " + s.str() + " x " + t.str();
    }
    return "";
}

std::string check_descent_matrix_n(int n) {
    DescentPairMatrix mat = descent_pair_matrix(n);
    std::size_t k = mat.comps.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (mat.counts[i][j] != mat.counts[j][i])
                return "matrix is not symmetric at n=" + std::to_string(n);
    long long total = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            total += mat.counts[i][j];
    long long fact = 1;
    for (int i = 2; i <= n; ++i)
        fact *= i;
    if (total != fact)
        return "matrix entries do not sum to n! at n=" + std::to_string(n);
    for (std::size_t i = 0; i < k; ++i) {
        QsymExpr f = ribbon_in_f(mat.comps[i]);
        for (std::size_t j = 0; j < k; ++j) {
            Rat expected = f.coeff(mat.comps[j]);
            if (expected != mat.counts[j][i])
                return "count at (" + mat.comps[j].str() + ", " + mat.comps[i].str() +
                       ") differs from the tableau coefficient";
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            bool same_rows = mat.counts[i] == mat.counts[j];
            bool equiv = equivalent(mat.comps[i], mat.comps[j]);
            if (same_rows != equiv)
                return "row equality disagrees with equivalence for " +
                       mat.comps[i].str() + " and " + mat.comps[j].str();
        }
    return "";
}

std::string check_star_descents_n(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        Permutation p{std::vector<int>(perm)};
        if (descent_composition(p.star()) != descent_composition(p).reversed())
            return "star descent composition is not the reversal for " + p.str();
    } while (std::next_permutation(perm.begin(), perm.end()));
    return "";
}

std::map<int, int> expected_extra_rays() { return {{1, 0}, {2, 0}, {3, 0}, {4, 1}, {5, 2}, {6, 23}}; }

std::string check_cone_rays_n(int n) {
    std::vector<ConeRay> rays = extreme_rays(n);
    std::vector<Partition> lambdas = partitions_of(n);
    int schur_rays = 0, extra = 0;
    for (const ConeRay& ray : rays) {
        if (ray.schur.size() == 1 && ray.schur.begin()->second == 1)
            ++schur_rays;
        else
            ++extra;
        for (const auto& [beta, c] : ray.fundamental.terms())
            if (c < 0)
                return "negative fundamental coefficient in a ray at n=" + std::to_string(n);
        if (!is_symmetric(ray.fundamental))
            return "ray expansion is not symmetric at n=" + std::to_string(n);
    }
    if (schur_rays != static_cast<int>(lambdas.size()))
        return "expected one ray per Schur function at n=" + std::to_string(n) + ", got " +
               std::to_string(schur_rays);
    auto expected = expected_extra_rays();
    if (expected.count(n) && extra != expected[n])
        return "expected " + std::to_string(expected[n]) + " non-Schur rays at n=" +
               std::to_string(n) + ", got " + std::to_string(extra);
    return "";
}

std::string check_cone_reference_n(int n) {
    std::vector<ConeRay> dd = extreme_rays(n);
    std::vector<ConeRay> ref = extreme_rays_reference(n);
    if (dd.size() != ref.size())
        return "ray counts differ between methods at n=" + std::to_string(n);
    for (std::size_t i = 0; i < dd.size(); ++i)
        if (dd[i].schur != ref[i].schur)
            return "ray lists differ between methods at n=" + std::to_string(n);
    return "";
}

std::string check_facets_n(int n) {
    FacetReport report = facet_report(n);
    if (report.redundant_count != 0)
        return "redundancy scan found a redundant inequality at n=" + std::to_string(n);
    if (report.status != "verified at this scale")
        return "unexpected status: " + report.status;
    for (std::size_t i = 0; i < report.reps.size(); ++i)
        if (report.redundant[i] == report.vertex_extreme[i])
            return "redundancy and hull routes agree instead of complementing at " +
                   report.reps[i].str();
    return "";
}

std::string check_balanced_n(int n) {
    std::mt19937_64 rng(777000 + static_cast<unsigned>(n));
    std::vector<Partition> lambdas = partitions_of(n + 1);
    for (int trial = 0; trial < 40; ++trial) {
        Multicollection mc;
        mc.n = n;
        bool symmetric_source = trial % 2 == 0;
        if (symmetric_source) {
            // Random nonnegative Schur combination, pushed to subsets.
            QsymExpr f(Basis::F, n + 1);
            for (const Partition& l : lambdas)
                if (rng() % 2)
                    f += Rat(static_cast<long long>(rng() % 3)) * schur_in_f(l);
            for (const auto& [beta, c] : f.terms()) {
                std::vector<int> subset = descent_set(beta).elements();
                mc.weights[subset] = c;
            }
        } else {
            int picks = 1 + static_cast<int>(rng() % 5);
            for (int i = 0; i < picks; ++i) {
                unsigned long mask = rng() % (1ul << n);
                std::vector<int> subset;
                for (int x = 1; x <= n; ++x)
                    if (mask & (1ul << (x - 1)))
                        subset.push_back(x);
                mc.weights[subset] += Rat(static_cast<long long>(rng() % 7) - 2);
            }
        }
        bool balanced = fully_balanced(mc);
        bool symmetric = is_symmetric(multicollection_to_f(mc));
        if (balanced != symmetric)
            return "balance and symmetry disagree on a random instance at n=" +
                   std::to_string(n);
    }
    return "";
}

std::string check_class_rows_n(int n) {
    // All members of a class induce the same inequality row.
    std::vector<Partition> lambdas = partitions_of(n);
    std::vector<QsymExpr> sf;
    for (const Partition& l : lambdas)
        sf.push_back(schur_in_f(l));
    for (const Composition& beta : compositions_of(n)) {
        for (const Composition& gamma : equivalence_class(beta)) {
            for (const QsymExpr& f : sf)
                if (f.coeff(beta) != f.coeff(gamma))
                    return "inequality rows differ inside the class of " + beta.str();
        }
    }
    return "";
}

} // namespace

SuiteResult run_verify_suite(const std::string& suite, int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("verify: negative n_max");
    int bound = n_max == 0 ? verify_default_n_max(suite) : n_max;
    SuiteResult result;
    result.suite = suite;
    result.n_max = bound;
    std::vector<Job> jobs;
    auto named = [](const std::string& base, int n) {
        return base + " n=" + std::to_string(n);
    };
    if (suite == "equivalence") {
        for (int n = 1; n <= bound; ++n) {
            jobs.emplace_back(named("three-route partition", n),
                              [n] { return check_equivalence_n(n); });
            jobs.emplace_back(named("class structure", n),
                              [n] { return check_class_structure_n(n); });
            jobs.emplace_back(named("factorization", n),
                              [n] { return check_factorization_n(n); });
        }
    } else if (suite == "ribbon") {
        for (int n = 1; n <= bound; ++n)
            jobs.emplace_back(named("h/tableau/multiset partitions", n),
                              [n] { return check_ribbon_routes_n(n); });
        for (int n = 1; n <= std::min(bound, 7); ++n)
            jobs.emplace_back(named("determinant route", n),
                              [n] { return check_jacobi_trudi_n(n); });
        for (int n = 1; n <= bound; ++n)
            jobs.emplace_back(named("function count", n),
                              [n] { return check_ribbon_count_n(n); });
    } else if (suite == "descents") {
        jobs.emplace_back("tensor example and S3 x S3",
                          [] { return check_tensor_fixed(); });
        jobs.emplace_back("random tensor pairs", [] { return check_tensor_random(); });
        for (int n = 1; n <= bound; ++n)
            jobs.emplace_back(named("descent-pair matrix", n),
                              [n] { return check_descent_matrix_n(n); });
        for (int n = 1; n <= std::min(bound, 6); ++n)
            jobs.emplace_back(named("star reversal", n),
                              [n] { return check_star_descents_n(n); });
    } else if (suite == "cone") {
        int cone_bound = std::min(bound, 6);
        for (int n = 1; n <= cone_bound; ++n) {
            jobs.emplace_back(named("extreme rays", n),
                              [n] { return check_cone_rays_n(n); });
            jobs.emplace_back(named("facet scan", n), [n] { return check_facets_n(n); });
            jobs.emplace_back(named("balance vs symmetry", n),
                              [n] { return check_balanced_n(n); });
            jobs.emplace_back(named("rows constant on classes", n),
                              [n] { return check_class_rows_n(n); });
        }
        for (int n = 1; n <= std::min(cone_bound, 5); ++n)
            jobs.emplace_back(named("method cross-check", n),
                              [n] { return check_cone_reference_n(n); });
    } else {
        throw std::invalid_argument("unknown verify suite: " + suite);
    }
    result.checks = run_jobs(jobs);
    return result;
}

} // namespace ribbons
