#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace mcsc {

// Fixed-capacity dynamic bitset. Used for element sets (capacity n) and
// subset-id sets (capacity m). Operations between sets require equal capacity.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {
        if (nbits < 0) throw std::invalid_argument("Bitset: negative capacity");
    }

    Bitset(int nbits, std::initializer_list<int> bits) : Bitset(nbits) {
        for (int b : bits) set(b);
    }

    static Bitset from(int nbits, const std::vector<int>& bits) {
        Bitset s(nbits);
        for (int b : bits) s.set(b);
        return s;
    }

    int capacity() const { return nbits_; }

    bool test(int i) const {
        check(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        check(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    // this \ o
    Bitset minus(const Bitset& o) const {
        match(o);
        Bitset r(*this);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }

    bool intersects(const Bitset& o) const {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // true iff o is a subset of this
    bool contains_all(const Bitset& o) const {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

private:
    void check(int i) const {
        if (i < 0 || i >= nbits_) throw std::out_of_range("Bitset: bit index out of range");
    }
    void match(const Bitset& o) const {
        if (nbits_ != o.nbits_) throw std::invalid_argument("Bitset: capacity mismatch");
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mcsc
