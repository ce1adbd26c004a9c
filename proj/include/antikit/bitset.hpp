#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace antikit {

/// Dynamically sized bit vector. Adjacency rows and search domains are
/// stored this way so that neighbourhood intersections are word-parallel.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() noexcept {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    bool intersects(const Bitset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    std::size_t intersection_count(const Bitset& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    Bitset& operator&=(const Bitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    /// this &= ~other
    Bitset& subtract(const Bitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    std::size_t find_first() const noexcept { return find_from(0); }
    std::size_t find_next(std::size_t i) const noexcept { return find_from(i + 1); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    std::size_t find_from(std::size_t i) const noexcept {
        if (i >= bits_) return npos;
        std::size_t wi = i >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return npos;
            w = words_[wi];
        }
    }

    void trim() noexcept {
        if (bits_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace antikit
