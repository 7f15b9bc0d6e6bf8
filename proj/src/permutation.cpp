#include "feitlab/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "feitlab/errors.hpp"

namespace feitlab {

Permutation::Permutation(int degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[v])
            throw Error("Permutation: image table is not a bijection");
        seen[v] = 1;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

int Permutation::order() const {
    std::vector<char> seen(images_.size(), 0);
    long long ord = 1;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        do {
            seen[j] = 1;
            j = images_[j];
            ++len;
        } while (j != i);
        ord = std::lcm(ord, static_cast<long long>(len));
    }
    return static_cast<int>(ord);
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree())
        throw DegreeMismatch("Permutation composition: degree mismatch");
    std::vector<int> img(images_.size());
    for (int i = 0; i < degree(); ++i) img[i] = images_[rhs.images_[i]];
    return Permutation(std::move(img));
}

Permutation Permutation::pow(long long k) const {
    int m = order();
    k %= m;
    if (k < 0) k += m;
    Permutation result(degree());
    Permutation base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

Permutation conjugate(const Permutation& h, const Permutation& g) {
    return g * h * g.inverse();
}

std::string Permutation::cycles() const {
    std::vector<char> seen(images_.size(), 0);
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) {
            seen[i] = 1;
            continue;
        }
        any = true;
        out << '(' << (i + 1);
        seen[i] = 1;
        for (int j = images_[i]; j != i; j = images_[j]) {
            out << ' ' << (j + 1);
            seen[j] = 1;
        }
        out << ')';
    }
    return any ? out.str() : "()";
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> moved(degree, 0);

    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos == text.size()) throw ParseError("cycle text is empty");
    bool saw_cycle = false;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '(') throw ParseError("expected '(' in cycle text: " + text);
        ++pos;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (pos == text.size()) throw ParseError("unterminated cycle: " + text);
            if (text[pos] == ')') { ++pos; break; }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected point number in cycle text: " + text);
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                ++pos;
            }
            if (v < 1 || v > degree)
                throw ParseError("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
            cyc.push_back(v - 1);
        }
        saw_cycle = true;
        if (cyc.size() < 2) {
            if (cyc.size() == 1) throw ParseError("singleton cycle in: " + text);
            continue; // "()" is the identity
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (moved[from]) throw ParseError("point repeated across cycles: " + text);
            moved[from] = 1;
            img[from] = to;
        }
    }
    if (!saw_cycle) throw ParseError("no cycles found in: " + text);
    return Permutation(std::move(img));
}

} // namespace feitlab
