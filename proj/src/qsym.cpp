#include "ribbons/qsym.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ribbons {

std::string basis_name(Basis b) { return b == Basis::M ? "M" : "F"; }

Basis parse_basis(const std::string& name) {
    if (name == "M" || name == "m")
        return Basis::M;
    if (name == "F" || name == "f")
        return Basis::F;
    throw std::invalid_argument("unknown quasisymmetric basis: " + name);
}

QsymExpr::QsymExpr(Basis basis, int degree) : basis_(basis), degree_(degree) {
    if (degree < 0)
        throw std::invalid_argument("qsym: negative degree");
}

QsymExpr QsymExpr::basis_element(Basis basis, const Composition& beta) {
    QsymExpr e(basis, beta.size());
    e.add_term(beta, 1);
    return e;
}

QsymExpr QsymExpr::unit(Basis basis) {
    QsymExpr e(basis, 0);
    e.add_term(Composition(), 1);
    return e;
}

Rat QsymExpr::coeff(const Composition& beta) const {
    auto it = terms_.find(beta);
    return it == terms_.end() ? Rat(0) : it->second;
}

void QsymExpr::add_term(const Composition& beta, const Rat& c) {
    if (beta.size() != degree_)
        throw std::invalid_argument("qsym: term degree mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(beta, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void QsymExpr::set_term(const Composition& beta, const Rat& c) {
    if (beta.size() != degree_)
        throw std::invalid_argument("qsym: term degree mismatch");
    if (c == 0)
        terms_.erase(beta);
    else
        terms_[beta] = c;
}

QsymExpr& QsymExpr::operator+=(const QsymExpr& o) {
    if (basis_ != o.basis_)
        throw std::invalid_argument("qsym: basis mismatch in sum");
    if (degree_ != o.degree_ && !o.is_zero() && !is_zero())
        throw std::invalid_argument("qsym: degree mismatch in sum");
    if (is_zero())
        degree_ = o.degree_;
    for (const auto& [beta, c] : o.terms_)
        add_term(beta, c);
    return *this;
}

QsymExpr& QsymExpr::operator-=(const QsymExpr& o) {
    QsymExpr neg = o;
    neg *= Rat(-1);
    return *this += neg;
}

QsymExpr& QsymExpr::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [beta, v] : terms_)
        v *= c;
    return *this;
}

std::string QsymExpr::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [beta, c] : terms_) {
        Rat mag = c < 0 ? Rat(-c) : c;
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (mag != 1)
            out += rat_str(mag) + "*";
        out += basis_name(basis_) + "[" + beta.str() + "]";
    }
    return out;
}

QsymExpr f_to_m(const QsymExpr& e) {
    if (e.basis() != Basis::F)
        throw std::invalid_argument("f_to_m: expression not in the F basis");
    QsymExpr out(Basis::M, e.degree());
    for (const auto& [beta, c] : e.terms())
        for (const Composition& gamma : refinements(beta))
            out.add_term(gamma, c);
    return out;
}

QsymExpr m_to_f(const QsymExpr& e) {
    if (e.basis() != Basis::M)
        throw std::invalid_argument("m_to_f: expression not in the M basis");
    QsymExpr out(Basis::F, e.degree());
    for (const auto& [beta, c] : e.terms()) {
        for (const Composition& gamma : refinements(beta)) {
            Rat sign = ((gamma.length() - beta.length()) % 2 == 0) ? 1 : -1;
            out.add_term(gamma, sign * c);
        }
    }
    return out;
}

QsymExpr to_basis(const QsymExpr& e, Basis target) {
    if (e.basis() == target)
        return e;
    return target == Basis::M ? f_to_m(e) : m_to_f(e);
}

namespace {

// Quasi-shuffle of two part sequences: interleave keeping both orders, with
// any set of "collisions" merging one part from each side by addition.
// Returns the resulting compositions with multiplicity.
void quasi_shuffle_parts(const std::vector<int>& a, std::size_t i,
                         const std::vector<int>& b, std::size_t j,
                         std::vector<int>& cur,
                         std::map<Composition, long long>& out) {
    if (i == a.size() && j == b.size()) {
        ++out[Composition(cur)];
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        quasi_shuffle_parts(a, i + 1, b, j, cur, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        quasi_shuffle_parts(a, i, b, j + 1, cur, out);
        cur.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        cur.push_back(a[i] + b[j]);
        quasi_shuffle_parts(a, i + 1, b, j + 1, cur, out);
        cur.pop_back();
    }
}

QsymExpr product_m(const QsymExpr& a, const QsymExpr& b) {
    QsymExpr out(Basis::M, a.degree() + b.degree());
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            std::map<Composition, long long> shuffles;
            std::vector<int> cur;
            quasi_shuffle_parts(alpha.parts(), 0, beta.parts(), 0, cur, shuffles);
            Rat c = ca * cb;
            for (const auto& [gamma, mult] : shuffles)
                out.add_term(gamma, c * mult);
        }
    }
    return out;
}

} // namespace

QsymExpr product(const QsymExpr& a, const QsymExpr& b) {
    if (a.basis() != b.basis())
        throw std::invalid_argument("qsym product: basis mismatch");
    if (a.basis() == Basis::M)
        return product_m(a, b);
    return m_to_f(product_m(f_to_m(a), f_to_m(b)));
}

bool is_symmetric(const QsymExpr& e) {
    QsymExpr m = to_basis(e, Basis::M);
    // Group coefficients by the sorted part multiset; each fiber must be
    // fully present with one common coefficient.
    std::map<Partition, std::pair<Rat, long long>, PartitionOrder> fibers;
    for (const auto& [beta, c] : m.terms()) {
        Partition lambda = sort_to_partition(beta);
        auto it = fibers.find(lambda);
        if (it == fibers.end()) {
            fibers.emplace(lambda, std::make_pair(c, 1));
        } else {
            if (it->second.first != c)
                return false;
            ++it->second.second;
        }
    }
    for (const auto& [lambda, cc] : fibers) {
        long long expected = 0;
        std::vector<int> parts = lambda.parts();
        std::sort(parts.begin(), parts.end());
        do {
            ++expected;
        } while (std::next_permutation(parts.begin(), parts.end()));
        if (cc.second != expected)
            return false;
    }
    return true;
}

QsymExpr monomial_sym(const Partition& lambda) {
    QsymExpr out(Basis::M, lambda.size());
    if (lambda.empty())
        return QsymExpr::unit(Basis::M);
    std::vector<int> parts = lambda.parts();
    std::sort(parts.begin(), parts.end());
    do {
        out.add_term(Composition(parts), 1);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

QsymExpr monomial_sym_in_f(const Partition& lambda) {
    if (lambda.empty())
        return QsymExpr::unit(Basis::F);
    QsymExpr out(Basis::F, lambda.size());
    for (const Composition& beta : compositions_of(lambda.size())) {
        long long mult = coarsening_multiset(beta).multiplicity(lambda);
        if (mult == 0)
            continue;
        Rat sign = ((lambda.length() - beta.length()) % 2 == 0) ? 1 : -1;
        out.add_term(beta, sign * mult);
    }
    return out;
}

} // namespace ribbons
