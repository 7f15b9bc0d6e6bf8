#ifndef FEITLAB_FINGROUP_HPP
#define FEITLAB_FINGROUP_HPP

#include <cstddef>
#include <vector>

#include "feitlab/permutation.hpp"

namespace feitlab {

inline constexpr std::size_t kDefaultOrderCap = 100000;

// A fully enumerated permutation group. Elements are kept strictly sorted
// (lexicographically by image table), so element index 0 is the identity and
// indices are stable, hashable handles. Immutable after construction.
class FinGroup {
public:
    // Breadth-first closure of the generators. Throws ClosureExceedsCap if
    // more than cap elements appear, DegreeMismatch if generators disagree.
    // An empty generator list yields the trivial group of the stated degree.
    static FinGroup closure(int degree, std::vector<Permutation> generators,
                            std::size_t cap = kDefaultOrderCap);

    // Wraps an element set that is already a subgroup (throws NotSubgroup
    // if it is not closed). A small generating set is derived greedily in
    // canonical element order, so the result is deterministic.
    static FinGroup from_elements(int degree, std::vector<Permutation> elements);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const Permutation& element(std::size_t i) const { return elements_[i]; }
    const Permutation& identity() const { return elements_[0]; }

    bool contains(const Permutation& p) const;
    // Index of p in the sorted element list; throws Error if absent.
    std::size_t index_of(const Permutation& p) const;

    bool is_subgroup_of(const FinGroup& g) const;
    bool same_group(const FinGroup& other) const;

    // Sorted distinct element orders.
    std::vector<int> element_orders() const;

private:
    FinGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements);

    int degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_; // strictly sorted
};

// Derived (commutator) subgroup: closure of all commutators x^{-1}y^{-1}xy.
FinGroup derived_subgroup(const FinGroup& g);

// Iterates the derived series until trivial or stable.
bool is_solvable(const FinGroup& g);

// Sylow p-subgroup by normalizer ascent from the first p-element in canonical
// order. Deterministic. Throws NotPrime if p is composite.
FinGroup sylow_subgroup(const FinGroup& g, long long p);

// {g in G : H^g = H}. Throws NotSubgroup unless H <= G.
FinGroup normalizer(const FinGroup& g, const FinGroup& h);

struct CosetOrder {
    long long order;  // order of the coset rep*K in N/K
    Permutation rep;  // canonical (least) coset representative
};

// One entry per coset of K in N, sorted by (order, rep). Throws NotNormal
// if K is not normal in N (subgroup containment is checked first).
std::vector<CosetOrder> quotient_cosets(const FinGroup& n, const FinGroup& k);

// The multiset of coset orders in N/K, ascending.
std::vector<long long> quotient_order_spectrum(const FinGroup& n, const FinGroup& k);

} // namespace feitlab

#endif
