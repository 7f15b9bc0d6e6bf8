#include "feitlab/fingroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "feitlab/errors.hpp"
#include "feitlab/numth.hpp"

namespace feitlab {

FinGroup::FinGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

FinGroup FinGroup::closure(int degree, std::vector<Permutation> generators, std::size_t cap) {
    if (cap < 1) throw Error("closure: cap must be >= 1");
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw DegreeMismatch("closure: generator degree " + std::to_string(g.degree()) +
                                 " != stated degree " + std::to_string(degree));

    std::set<Permutation> elems;
    std::deque<Permutation> frontier;
    Permutation id(degree);
    elems.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Permutation x = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            Permutation y = x * g;
            if (elems.insert(y).second) {
                if (elems.size() > cap)
                    throw ClosureExceedsCap("closure: generated more than " + std::to_string(cap) + " elements");
                frontier.push_back(std::move(y));
            }
        }
    }
    std::vector<Permutation> sorted(elems.begin(), elems.end());
    return FinGroup(degree, std::move(generators), std::move(sorted));
}

FinGroup FinGroup::from_elements(int degree, std::vector<Permutation> elements) {
    for (const auto& p : elements)
        if (p.degree() != degree) throw DegreeMismatch("from_elements: degree mismatch");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || !elements.front().is_identity())
        throw NotSubgroup("from_elements: set does not contain the identity");

    // Greedy generating set in canonical order; the final closure doubles as
    // the subgroup check.
    std::vector<Permutation> gens;
    FinGroup h = closure(degree, {}, elements.size());
    for (const auto& p : elements) {
        if (h.contains(p)) continue;
        gens.push_back(p);
        h = closure(degree, gens, elements.size());
    }
    if (h.elements() != elements)
        throw NotSubgroup("from_elements: element set is not closed");
    return FinGroup(degree, std::move(gens), std::move(elements));
}

bool FinGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t FinGroup::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) throw Error("index_of: element not in group");
    return static_cast<std::size_t>(it - elements_.begin());
}

bool FinGroup::is_subgroup_of(const FinGroup& g) const {
    if (degree_ != g.degree()) return false;
    for (const auto& p : elements_)
        if (!g.contains(p)) return false;
    return true;
}

bool FinGroup::same_group(const FinGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
}

std::vector<int> FinGroup::element_orders() const {
    std::set<int> orders;
    for (const auto& p : elements_) orders.insert(p.order());
    return std::vector<int>(orders.begin(), orders.end());
}

FinGroup derived_subgroup(const FinGroup& g) {
    std::set<Permutation> comms;
    for (const auto& x : g.elements()) {
        Permutation xi = x.inverse();
        for (const auto& y : g.elements()) {
            comms.insert(xi * y.inverse() * x * y);
        }
    }
    std::vector<Permutation> gens(comms.begin(), comms.end());
    return FinGroup::closure(g.degree(), std::move(gens), g.order());
}

bool is_solvable(const FinGroup& g) {
    FinGroup current = g;
    while (current.order() > 1) {
        FinGroup next = derived_subgroup(current);
        if (next.order() == current.order()) return false; // perfect, stuck
        current = std::move(next);
    }
    return true;
}

namespace {

// x^(p'-part of o(x)): the p-element component of x.
Permutation p_component(const Permutation& x, long long p) {
    long long ord = x.order();
    long long pprime = ord / numth::p_part(ord, p);
    return x.pow(pprime);
}

} // namespace

FinGroup sylow_subgroup(const FinGroup& g, long long p) {
    if (!numth::is_prime(p)) throw NotPrime("sylow_subgroup: " + std::to_string(p) + " is not prime");
    long long target = numth::p_part(static_cast<long long>(g.order()), p);
    if (target == 1) return FinGroup::closure(g.degree(), {});

    // Seed: first element (canonical order) with order divisible by p.
    std::vector<Permutation> gens;
    for (const auto& x : g.elements()) {
        if (x.order() % p == 0) {
            gens.push_back(p_component(x, p));
            break;
        }
    }
    FinGroup sylow = FinGroup::closure(g.degree(), gens, g.order());

    // Ascent: a proper p-subgroup grows inside its own normalizer.
    while (static_cast<long long>(sylow.order()) < target) {
        FinGroup norm = normalizer(g, sylow);
        bool grew = false;
        for (const auto& x : norm.elements()) {
            Permutation y = p_component(x, p);
            if (y.is_identity() || sylow.contains(y)) continue;
            gens.push_back(std::move(y));
            sylow = FinGroup::closure(g.degree(), gens, g.order());
            grew = true;
            break;
        }
        if (!grew)
            throw Error("sylow_subgroup: ascent stalled (internal bug)");
    }
    return sylow;
}

FinGroup normalizer(const FinGroup& g, const FinGroup& h) {
    if (h.degree() != g.degree()) throw NotSubgroup("normalizer: degree mismatch");
    if (!h.is_subgroup_of(g)) throw NotSubgroup("normalizer: H is not a subgroup of G");

    std::vector<Permutation> result;
    for (const auto& x : g.elements()) {
        bool normalizes = true;
        for (const auto& hg : h.generators()) {
            if (!h.contains(conjugate(hg, x))) {
                normalizes = false;
                break;
            }
        }
        if (normalizes) result.push_back(x);
    }
    return FinGroup::from_elements(g.degree(), std::move(result));
}

std::vector<CosetOrder> quotient_cosets(const FinGroup& n, const FinGroup& k) {
    if (!k.is_subgroup_of(n)) throw NotNormal("quotient: K is not a subgroup of N");
    for (const auto& x : n.generators())
        for (const auto& kg : k.generators())
            if (!k.contains(conjugate(kg, x)))
                throw NotNormal("quotient: K is not normal in N");

    std::vector<char> assigned(n.order(), 0);
    std::vector<CosetOrder> cosets;
    for (std::size_t i = 0; i < n.order(); ++i) {
        if (assigned[i]) continue;
        const Permutation& rep = n.element(i); // least element of its coset
        for (const auto& kk : k.elements())
            assigned[n.index_of(rep * kk)] = 1;
        long long m = 1;
        Permutation power = rep;
        while (!k.contains(power)) {
            power = power * rep;
            ++m;
        }
        cosets.push_back(CosetOrder{m, rep});
    }
    std::sort(cosets.begin(), cosets.end(), [](const CosetOrder& a, const CosetOrder& b) {
        return a.order != b.order ? a.order < b.order : a.rep < b.rep;
    });
    return cosets;
}

std::vector<long long> quotient_order_spectrum(const FinGroup& n, const FinGroup& k) {
    std::vector<long long> orders;
    for (const auto& c : quotient_cosets(n, k)) orders.push_back(c.order);
    return orders;
}

} // namespace feitlab
