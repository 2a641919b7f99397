#pragma once

#include "ribbons/composition.hpp"
#include "ribbons/errors.hpp"

#include <string>
#include <vector>

namespace ribbons {

// A permutation of [n] in one-line notation, 1-based images.
class Permutation {
public:
    Permutation() = default; // identity on the empty set
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    // "465132798" (single digits) or "4,6,5,1,3,2,7,9,8".
    static Permutation parse(const std::string& text);

    int n() const { return static_cast<int>(images_.size()); }
    int image(int i) const; // 1-based
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // Reverse-complement: star(i) = n + 1 - image(n + 1 - i). An involution
    // that maps the descent set through S -> reversal of the composition.
    Permutation star() const;

    std::string str() const; // compact when n <= 9, comma-separated otherwise

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

DescentSet descents(const Permutation& p);
// The descent composition: the composition of n whose descent set is the
// descent set of p.
Composition descent_composition(const Permutation& p);

// Block product: replace each entry of sigma's permutation matrix by tau's,
// and read the result row by row. The image of (i-1)|tau| + j is
// (sigma(i)-1)|tau| + tau(j).
Permutation tensor(const Permutation& sigma, const Permutation& tau);

// The descent set of tensor(sigma, tau) equals the descent set of
// circ(descent_composition(sigma), descent_composition(tau)).
bool verify_tensor_descents(const Permutation& sigma, const Permutation& tau);

// counts[i][j] = number of permutations of [n] whose descent composition is
// comps[i] and whose inverse has descent composition comps[j]; comps is
// compositions_of(n) in ascending lex order.
struct DescentPairMatrix {
    int n = 0;
    std::vector<Composition> comps;
    std::vector<std::vector<long long>> counts;

    int index_of(const Composition& beta) const;
    const std::vector<long long>& row(const Composition& beta) const;
};

// Full scan of all n! permutations; refuses n > 9.
DescentPairMatrix descent_pair_matrix(int n);

} // namespace ribbons
