#ifndef FEITLAB_PERMUTATION_HPP
#define FEITLAB_PERMUTATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace feitlab {

// A permutation of {0, ..., degree-1}, stored as its image table.
// Composition is function composition: (a * b)(x) = a(b(x)).
class Permutation {
public:
    // Identity of the given degree.
    explicit Permutation(int degree);

    // Takes ownership of an image table; throws Error unless it is a bijection.
    explicit Permutation(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[point]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    int order() const; // lcm of cycle lengths

    Permutation inverse() const;
    Permutation operator*(const Permutation& rhs) const; // rhs applied first
    Permutation pow(long long k) const;                  // k may be negative

    // h conjugated by g: g h g^{-1}.
    friend Permutation conjugate(const Permutation& h, const Permutation& g);

    auto operator<=>(const Permutation&) const = default;

    // Disjoint-cycle text with 1-based points, identity renders as "()".
    std::string cycles() const;

    // Parses "(1 2 3)(4 5)" (or "()") with points in 1..degree.
    // Throws ParseError on malformed text or out-of-range points.
    static Permutation parse_cycles(const std::string& text, int degree);

private:
    std::vector<int> images_;
};

} // namespace feitlab

#endif
