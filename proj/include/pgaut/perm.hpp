#ifndef PGAUT_PERM_HPP
#define PGAUT_PERM_HPP

#include <string>
#include <vector>

namespace pgaut {

class Permutation {
public:
    Permutation() = default;
    // Validates that `images` is a bijection on {0..N-1}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // Maps from[i] to to[i]; both must enumerate {0..N-1}.
    static Permutation from_two_sequences(const std::vector<int>& from,
                                          const std::vector<int>& to);
    static Permutation from_cycles(int n,
                                   const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int v) const { return images_[v]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    int smallest_moved_point() const;  // -1 for the identity
    Permutation inverse() const;

    std::string cycle_string() const;

    bool operator==(const Permutation&) const = default;

private:
    struct unchecked_t {};
    Permutation(unchecked_t, std::vector<int> images)
        : images_(std::move(images)) {}

    friend Permutation compose(const Permutation& f, const Permutation& g);
    std::vector<int> images_;
};

// (f * g)(x) = f(g(x)): g is applied first.
Permutation compose(const Permutation& f, const Permutation& g);

}  // namespace pgaut

#endif
