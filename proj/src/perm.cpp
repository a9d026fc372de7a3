#include "pgaut/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace pgaut {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("Permutation: images not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(unchecked_t{}, std::move(im));
}

Permutation Permutation::from_two_sequences(const std::vector<int>& from,
                                            const std::vector<int>& to) {
    if (from.size() != to.size())
        throw std::invalid_argument("from_two_sequences: length mismatch");
    std::vector<int> im(from.size(), -1);
    for (std::size_t i = 0; i < from.size(); ++i) {
        int a = from[i], b = to[i];
        if (a < 0 || a >= static_cast<int>(from.size()) || im[a] != -1)
            throw std::invalid_argument("from_two_sequences: bad source sequence");
        im[a] = b;
    }
    return Permutation(std::move(im));  // validated constructor
}

Permutation Permutation::from_cycles(int n,
                                     const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i)
            im[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

int Permutation::smallest_moved_point() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return i;
    return -1;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
    return Permutation(unchecked_t{}, std::move(im));
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(f.degree());
    for (int i = 0; i < f.degree(); ++i) im[i] = f.images_[g.images_[i]];
    return Permutation(Permutation::unchecked_t{}, std::move(im));
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        out += '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = images_[j];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

}  // namespace pgaut
