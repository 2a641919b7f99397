#include "ribbons/comp_ops.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ribbons {

namespace {

void require_nonempty(const Composition& c, const char* op) {
    if (c.empty())
        throw std::invalid_argument(std::string(op) + ": empty composition");
}

bool all_ones(const Composition& c) {
    for (int p : c.parts())
        if (p != 1)
            return false;
    return true;
}

bool is_unit(const Composition& c) { return c.length() == 1 && c.part(0) == 1; }

} // namespace

Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> p = a.parts();
    p.insert(p.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(p));
}

Composition near_concat(const Composition& a, const Composition& b) {
    require_nonempty(a, "near_concat");
    require_nonempty(b, "near_concat");
    std::vector<int> p = a.parts();
    p.back() += b.part(0);
    p.insert(p.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(p));
}

Composition circ(const Composition& a, const Composition& b) {
    require_nonempty(a, "circ");
    require_nonempty(b, "circ");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(a.size()) *
                static_cast<std::size_t>(b.length()));
    for (int m : a.parts()) {
        for (int j = 0; j < m; ++j) {
            if (j == 0) {
                out.insert(out.end(), b.parts().begin(), b.parts().end());
            } else {
                out.back() += b.part(0);
                out.insert(out.end(), b.parts().begin() + 1, b.parts().end());
            }
        }
    }
    return Composition(std::move(out));
}

Composition compose_all(const std::vector<Composition>& factors) {
    if (factors.empty())
        throw std::invalid_argument("compose_all: empty factor list");
    Composition acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = circ(acc, factors[i]);
    return acc;
}

bool is_palindrome(const Composition& b) { return b == b.reversed(); }

bool is_trivial_pair(const Composition& a, const Composition& b) {
    if (is_unit(a) || is_unit(b))
        return true;
    if (a.length() == 1 && b.length() == 1)
        return true;
    return all_ones(a) && all_ones(b);
}

std::optional<std::pair<Composition, Composition>> try_split(const Composition& beta,
                                                             int p) {
    require_nonempty(beta, "try_split");
    int n = beta.size();
    if (p < 1 || p > n || n % p != 0)
        throw std::invalid_argument("try_split: p must divide the size");
    if (p == n)
        return std::make_pair(Composition{1}, beta);
    if (p == 1)
        return std::make_pair(beta, Composition{1});
    DescentSet s = descent_set(beta);
    int q = n / p;
    std::vector<int> s_eps, s_delta;
    for (int x : s.elements())
        if (x < p)
            s_eps.push_back(x);
    for (int y = 1; y < q; ++y)
        if (s.contains(p * y))
            s_delta.push_back(y);
    Composition eps = composition_of(DescentSet(p, std::move(s_eps)));
    Composition delta = composition_of(DescentSet(q, std::move(s_delta)));
    if (circ(delta, eps) == beta)
        return std::make_pair(std::move(delta), std::move(eps));
    return std::nullopt;
}

std::vector<Composition> irreducible_factorization(const Composition& beta) {
    require_nonempty(beta, "irreducible_factorization");
    std::vector<Composition> raw;
    std::function<void(const Composition&)> peel = [&](const Composition& b) {
        int n = b.size();
        for (int p = 2; p < n; ++p) {
            if (n % p != 0)
                continue;
            if (auto split = try_split(b, p)) {
                peel(split->first);
                raw.push_back(split->second);
                return;
            }
        }
        raw.push_back(b);
    };
    peel(beta);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
            if (is_trivial_pair(raw[i], raw[i + 1])) {
                raw[i] = circ(raw[i], raw[i + 1]);
                raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
                break;
            }
        }
    }
    return raw;
}

bool is_irreducible(const Composition& beta) {
    std::vector<Composition> f = irreducible_factorization(beta);
    return f.size() == 1 && f.front() == beta;
}

std::vector<Composition> equivalence_class(const Composition& beta) {
    std::vector<Composition> factors = irreducible_factorization(beta);
    std::set<Composition> cls;
    std::size_t k = factors.size();
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        std::vector<Composition> fs = factors;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1ul << i))
                fs[i] = fs[i].reversed();
        cls.insert(compose_all(fs));
    }
    return std::vector<Composition>(cls.begin(), cls.end());
}

bool equivalent(const Composition& a, const Composition& b) {
    if (a.size() != b.size())
        return false;
    return coarsening_multiset(a) == coarsening_multiset(b);
}

} // namespace ribbons
