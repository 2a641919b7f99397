#pragma once

#include "ribbons/composition.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ribbons {

// Concatenation alpha . beta and near-concatenation alpha (.) beta, which
// glues the last part of alpha to the first part of beta. Both are
// associative; sizes add in both cases.
Composition concat(const Composition& a, const Composition& b);
Composition near_concat(const Composition& a, const Composition& b);

// Composition product: circ(alpha, beta) replaces each part m of alpha by
// the m-fold near-concatenation power of beta, then concatenates the
// pieces. Associative, unit (1); sizes multiply.
Composition circ(const Composition& a, const Composition& b);

// Left-to-right fold of circ; requires a nonempty factor list.
Composition compose_all(const std::vector<Composition>& factors);

bool is_palindrome(const Composition& b); // b equal to its reversal

// A factor pair is trivial when it can never witness a genuine
// factorization: one factor is (1), both are single parts, or both are
// all-ones compositions.
bool is_trivial_pair(const Composition& a, const Composition& b);

// Attempt to write beta = delta o epsilon with |epsilon| = p. p must divide
// |beta| (else std::invalid_argument). If a split exists it is unique; the
// candidate is read off the descent set (epsilon from the positions below p,
// delta from the positions at multiples of p) and verified by recomposition.
std::optional<std::pair<Composition, Composition>> try_split(const Composition& beta,
                                                             int p);

// The unique factorization of beta into irreducibles: repeatedly peel the
// smallest right factor, then merge adjacent trivial pairs to a fixpoint.
// Returns {beta} when beta is irreducible.
std::vector<Composition> irreducible_factorization(const Composition& beta);

bool is_irreducible(const Composition& beta);

// All gamma with the same coarsening multiset as beta: reverse any subset
// of the irreducible factors and recompose. Sorted ascending lex; the size
// is 2^r with r the number of non-palindromic factors.
std::vector<Composition> equivalence_class(const Composition& beta);

// Complete invariant: equality of coarsening multisets.
bool equivalent(const Composition& a, const Composition& b);

} // namespace ribbons
