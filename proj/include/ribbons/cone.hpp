#pragma once

#include "ribbons/composition.hpp"
#include "ribbons/exact_linalg.hpp"
#include "ribbons/qsym.hpp"
#include "ribbons/rational.hpp"
#include "ribbons/sym.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ribbons {

// One representative per coarsening-multiset class of compositions of n,
// each the lex-least member of its class, listed ascending.
std::vector<Composition> class_representatives(int n);

// Multiplicity of each partition of n (canonical order) in the coarsening
// multiset of beta. Distinguishes classes: two compositions share this
// vector exactly when they are equivalent.
std::vector<long long> cone_vector(const Composition& beta);

// entries[i][j] = multiplicity of partitions_of(n)[i] in the coarsening
// multiset of compositions_of(n)[j].
struct RayMatrix {
    int n = 0;
    std::vector<Partition> rows;
    std::vector<Composition> cols;
    std::vector<std::vector<long long>> entries;
};
RayMatrix ray_matrix(int n);

// Multiset run-length profile of a subset of integers: lengths of maximal
// consecutive runs, sorted decreasing.
std::vector<int> run_profile(const std::vector<int>& subset);

// All subsets of [n] whose run profile is { lambda_i - 1 : lambda_i >= 2 },
// for lambda a partition of n+1. Never empty; sorted by element list.
std::vector<std::vector<int>> f_lambda(const Partition& lambda, int n);

// Rational weights on subsets of [n]; its generating quasisymmetric
// function lives in degree n+1.
struct Multicollection {
    int n = 0;
    std::map<std::vector<int>, Rat> weights;
};

QsymExpr multicollection_to_f(const Multicollection& mc);

// The covering sums of lambda: for each T in f_lambda, the total weight of
// supersets of T. Returns the common value when all sums agree, nothing
// otherwise.
std::optional<Rat> balanced_check(const Multicollection& mc, const Partition& lambda);

// Balanced for every partition of n+1; equivalent to the generating
// function being symmetric.
bool fully_balanced(const Multicollection& mc);

struct ConeRay {
    std::map<Partition, Rat, PartitionOrder> schur; // primitive integer vector
    QsymExpr fundamental;                           // nonnegative F expansion
};

// Extreme rays of the cone of symmetric functions with nonnegative
// fundamental expansion, coordinates in the Schur basis. Double description
// with exact arithmetic; refuses n > 7.
std::vector<ConeRay> extreme_rays(int n);

// Independent cross-check: enumerate kernels of all (dimension-1)-subsets
// of the inequality rows and keep the feasible directions. Refuses n > 5.
std::vector<ConeRay> extreme_rays_reference(int n);

// Whether the multiplicity vector of alpha is a vertex of the convex hull
// of the vectors of all compositions of |alpha|. Refuses |alpha| > 8.
bool is_extreme_vector(const Composition& alpha);

// For every class representative, decide whether its inequality is
// implied by the other classes' inequalities (nonnegative row combination)
// and whether its multiplicity vector is extreme. The two routes must
// complement each other; status reports the redundancy scan outcome.
struct FacetReport {
    int n = 0;
    std::vector<Composition> reps;
    std::vector<bool> redundant;
    std::vector<bool> vertex_extreme;
    int redundant_count = 0;
    std::string status;
};
FacetReport facet_report(int n); // refuses n > 6

} // namespace ribbons
