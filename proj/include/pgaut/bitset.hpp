#ifndef PGAUT_BITSET_HPP
#define PGAUT_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pgaut {

// Fixed-size bit vector used for adjacency rows and cell masks.
// Kept minimal: the refinement and twin-detection inner loops need
// count(a & b) and count(a & ~b) without temporaries.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    static std::size_t and_count(const Bitset& a, const Bitset& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    static std::size_t andnot_count(const Bitset& a, const Bitset& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & ~b.words_[i]);
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                fn(wi * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace pgaut

#endif
