#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace ribbons {

// A composition of n: a finite sequence of positive integers summing to n.
// The empty composition (n = 0) is allowed; it is the unit for the graded
// algebra structures built on top of this type.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts);

    // Accepts "2,2,1,2" and, when every part is a single digit, "2212".
    static Composition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }     // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i)); } // 0-based

    Composition reversed() const;
    std::string str() const; // comma-separated, "" for the empty composition

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return !(*this == o); }
    // Lexicographic order: 1^n is smallest among compositions of n, (n) largest.
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// A partition: weakly decreasing positive parts. Empty partition allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

    Partition conjugate() const;
    Composition as_composition() const;
    std::string str() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Canonical order on partitions of equal size: descending lexicographic,
// i.e. (n) first, (1^n) last. This is the key order used in all serialized
// output and the row order of every partition-indexed matrix.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        return b.parts() < a.parts();
    }
};

// A subset of [n-1] recording descent positions, kept sorted ascending.
class DescentSet {
public:
    DescentSet() = default;
    DescentSet(int n, std::vector<int> elements);

    int n() const { return n_; }
    const std::vector<int>& elements() const { return elements_; }
    bool contains(int x) const;
    std::string str() const; // "2,4,5", "" for the empty set

    bool operator==(const DescentSet& o) const {
        return n_ == o.n_ && elements_ == o.elements_;
    }

private:
    int n_ = 1;
    std::vector<int> elements_;
};

// Bijection between compositions of n and subsets of [n-1] via partial sums.
DescentSet descent_set(const Composition& beta);
Composition composition_of(const DescentSet& s);

Composition reverse(const Composition& beta);
Partition sort_to_partition(const Composition& beta);

// Multiset of partitions with integer multiplicities, canonical key order.
class PartitionMultiset {
public:
    using Map = std::map<Partition, long long, PartitionOrder>;

    void add(const Partition& p, long long k = 1);
    long long multiplicity(const Partition& p) const;
    long long total() const; // sum of multiplicities
    const Map& counts() const { return counts_; }

    bool operator==(const PartitionMultiset& o) const { return counts_ == o.counts_; }
    bool operator!=(const PartitionMultiset& o) const { return !(*this == o); }
    std::string str() const; // {"4,3,3,2": 1, ...} in canonical key order

private:
    Map counts_;
};

// All coarsenings of beta (merge runs of adjacent parts). Deterministic
// order: merge-mask binary counter, beta itself first. 2^(length-1) results.
std::vector<Composition> coarsenings(const Composition& beta);

// The multiset { sort(alpha) : alpha a coarsening of beta }. This multiset
// is a complete invariant for equality of the associated ribbon functions.
PartitionMultiset coarsening_multiset(const Composition& beta);

// Three-way comparison in lexicographic order: negative, zero or positive
// according to a < b, a == b, a > b.
int lex_compare(const Composition& a, const Composition& b);

// Symmetry statistics of the descent set S = S(beta) inside [n-1]:
//   type(i) = |{i, n-i} ∩ S| for i not divisible by n, except that for
//   even n, type(n/2) is 0 or 2 (doubled); type(kn) = 0.
//   h(i) = +1 if i ∈ S, type 1; -1 if i ∉ S, type 1; 2 if type 2; 0 if type 0.
//   g is h with the type-2 and type-0 values flattened to 0, i.e. g records
//   only the asymmetric positions.
// Both extend n-periodically to all integers.
class TypeProfile {
public:
    explicit TypeProfile(const Composition& beta);

    int n() const { return n_; }
    int type_of(long long x) const;
    int g(long long x) const;      // in {-1, 0, +1}
    int h(long long x) const;      // in {-1, 0, +1, 2}

private:
    int index(long long x) const;  // reduce to [0, n), 0 meaning "multiple of n"
    int n_ = 1;
    std::vector<std::int8_t> type_, g_, h_; // position i stored at [i], [0] unused
};

TypeProfile type_profile(const Composition& beta);

// Enumeration helpers. Orders are fixed and documented:
//   compositions_of(n): ascending lexicographic, 1^n first, (n) last.
//   partitions_of(n): canonical (descending lexicographic), (n) first.
//   refinements(beta): all gamma refining beta (beta is a coarsening of
//     gamma), in the product order induced by compositions_of on each part.
std::vector<Composition> compositions_of(int n);
std::vector<Partition> partitions_of(int n);
std::vector<Composition> refinements(const Composition& beta);

} // namespace ribbons
