#pragma once

#include "ribbons/composition.hpp"
#include "ribbons/rational.hpp"

#include <map>
#include <string>

namespace ribbons {

enum class Basis { M, F };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);

// A homogeneous quasisymmetric function of fixed degree, stored as a sparse
// coefficient map over compositions of that degree in a fixed basis.
// Degree 0 is allowed; its only basis element is the empty composition
// (the unit of the algebra). Zero coefficients are never stored, and term
// iteration is in ascending lex order of the keys.
class QsymExpr {
public:
    using Terms = std::map<Composition, Rat>;

    QsymExpr() = default; // zero element of degree 0, basis M
    QsymExpr(Basis basis, int degree);
    static QsymExpr basis_element(Basis basis, const Composition& beta);
    static QsymExpr unit(Basis basis); // degree 0, coefficient 1

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Composition& beta) const;
    void add_term(const Composition& beta, const Rat& c); // checks degree
    void set_term(const Composition& beta, const Rat& c);

    QsymExpr& operator+=(const QsymExpr& o);
    QsymExpr& operator-=(const QsymExpr& o);
    QsymExpr& operator*=(const Rat& c);

    friend QsymExpr operator+(QsymExpr a, const QsymExpr& b) { return a += b; }
    friend QsymExpr operator-(QsymExpr a, const QsymExpr& b) { return a -= b; }
    friend QsymExpr operator*(QsymExpr a, const Rat& c) { return a *= c; }
    friend QsymExpr operator*(const Rat& c, QsymExpr a) { return a *= c; }

    bool operator==(const QsymExpr& o) const {
        return basis_ == o.basis_ && terms_ == o.terms_;
    }
    bool operator!=(const QsymExpr& o) const { return !(*this == o); }

    std::string str() const; // e.g. "F[2,2] + F[1,2,1]" with rational coefficients

private:
    Basis basis_ = Basis::M;
    int degree_ = 0;
    Terms terms_;
};

// Basis changes. F_beta = sum of M_gamma over refinements gamma of beta;
// the inverse carries the sign (-1)^(l(gamma) - l(beta)).
QsymExpr f_to_m(const QsymExpr& e);
QsymExpr m_to_f(const QsymExpr& e);
QsymExpr to_basis(const QsymExpr& e, Basis target);

// Product of two expressions in the same basis. In the M basis this is the
// quasi-shuffle (overlapping shuffle) product; the F-basis product routes
// through M.
QsymExpr product(const QsymExpr& a, const QsymExpr& b);

// Quasisymmetric f is symmetric iff its M coefficients are constant on the
// fibers of sort_to_partition.
bool is_symmetric(const QsymExpr& e);

// The monomial symmetric function m_lambda: sum of M_beta over the distinct
// rearrangements beta of lambda.
QsymExpr monomial_sym(const Partition& lambda);

// m_lambda written directly in the F basis via signed coarsening-multiset
// multiplicities: the F_beta coefficient is
// (-1)^(l(lambda) - l(beta)) * mult(coarsening_multiset(beta), lambda).
QsymExpr monomial_sym_in_f(const Partition& lambda);

} // namespace ribbons
