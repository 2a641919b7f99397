#pragma once

#include "ribbons/composition.hpp"
#include "ribbons/qsym.hpp"
#include "ribbons/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ribbons {

// A formal linear combination of complete homogeneous symmetric functions
// h_lambda, keyed by partition in canonical order. Not required to be
// homogeneous (determinant intermediates are not); h of the empty partition
// is the scalar 1.
class SymHExpr {
public:
    using Terms = std::map<Partition, Rat, PartitionOrder>;

    SymHExpr() = default; // zero
    static SymHExpr unit();
    static SymHExpr h(const Partition& lambda);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const Rat& c);

    SymHExpr& operator+=(const SymHExpr& o);
    SymHExpr& operator-=(const SymHExpr& o);
    SymHExpr& operator*=(const Rat& c);
    friend SymHExpr operator+(SymHExpr a, const SymHExpr& b) { return a += b; }
    friend SymHExpr operator-(SymHExpr a, const SymHExpr& b) { return a -= b; }
    friend SymHExpr operator*(SymHExpr a, const Rat& c) { return a *= c; }

    bool operator==(const SymHExpr& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymHExpr& o) const { return !(*this == o); }

    std::string str() const;

private:
    Terms terms_;
};

SymHExpr product(const SymHExpr& a, const SymHExpr& b);
SymHExpr pow(const SymHExpr& a, int m);

// Expand into the quasisymmetric M basis (h_k is the sum of M over all
// compositions of k). Requires a homogeneous input.
QsymExpr h_to_m(const SymHExpr& e);

// A skew diagram outer/inner in English notation, row 1 on top.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);
    static SkewShape parse(const std::string& text); // "4332/221", "22" or "22/"

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int inner_part(int row) const; // 0 beyond the inner length (0-based row)
    int cells() const;
    std::string str() const;

    bool operator==(const SkewShape& o) const {
        return outer_ == o.outer_ && inner_ == o.inner_;
    }

private:
    Partition outer_, inner_;
};

// A standard filling of a skew shape: entries 1..cells increase along rows
// and down columns. rows[r] covers the full outer row, 0 in inner cells.
struct StandardTableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    // i is a descent when i+1 sits in a strictly lower row.
    DescentSet descents() const;
};

// The ribbon diagram of a composition: row i from the bottom has beta_i
// cells, consecutive rows overlapping in exactly one column.
SkewShape ribbon_shape(const Composition& beta);

// Alternating sum of h over the coarsenings:
// (-1)^length(beta) * sum over coarsenings alpha of
// (-1)^length(alpha) * h_sort(alpha).
SymHExpr ribbon_in_h(const Composition& beta);

// The product of two ribbon functions is the sum of the ribbons of the
// concatenation and the near-concatenation; the second form evaluates that
// sum in the h algebra.
std::pair<Composition, Composition> ribbon_product(const Composition& a,
                                                   const Composition& b);
SymHExpr ribbon_product_in_h(const Composition& a, const Composition& b);

// Equality test through the h expansion.
bool ribbon_equal(const Composition& a, const Composition& b);

// Determinant det( h_{outer_i - inner_j - i + j} ) in the h algebra.
SymHExpr jacobi_trudi(const SkewShape& shape);

// Fundamental-basis expansion by enumerating standard fillings and reading
// descent compositions. Refuses shapes with more than 12 cells.
QsymExpr skew_schur_in_f(const SkewShape& shape);
std::vector<StandardTableau> standard_tableaux(const SkewShape& shape);

QsymExpr schur_in_f(const Partition& lambda);
QsymExpr ribbon_in_f(const Composition& beta);

// The composition of [n-1] minus the descent set of the conjugate
// partition. Always lex <= lambda, with equality exactly for one-row and
// one-column shapes; this is the lex-least composition in the fundamental
// support of s_lambda.
Composition lambda_tilde(const Partition& lambda);

// Lex-least and lex-greatest compositions in the support of a nonzero
// expression in the F basis.
std::pair<Composition, Composition> spread(const QsymExpr& e);

// Write a symmetric F-basis expression in the Schur basis by repeatedly
// stripping the lex-greatest term. Throws std::invalid_argument when the
// input is not in the Schur span.
std::map<Partition, Rat, PartitionOrder> schur_extract(const QsymExpr& e);

// Schur expansion of the ribbon function of beta; the coefficients are the
// Littlewood-Richardson numbers of its ribbon diagram.
std::map<Partition, Rat, PartitionOrder> ribbon_lr_coeffs(const Composition& beta);

// Check sum over alpha of compositions of m of r_{circ(alpha, beta)} equals
// r_beta to the m-th power, in the h algebra.
bool verify_plethysm_average(int m, const Composition& beta);

} // namespace ribbons
