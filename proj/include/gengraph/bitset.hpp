#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace gengraph {

/// Fixed-universe bit set over element indices 0..n-1.  This is the working
/// representation for subgroups; closure loops touch it constantly, so it is
/// a thin wrapper over packed 64-bit words.
class ElementSet {
public:
    ElementSet() : n_(0) {}
    explicit ElementSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool operator==(const ElementSet& o) const { return w_ == o.w_; }
    bool operator!=(const ElementSet& o) const { return w_ != o.w_; }

    /// True when every member of `o` is also a member of this set.
    bool contains_all(const ElementSet& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (o.w_[k] & ~w_[k]) return false;
        return true;
    }

    bool is_proper_subset_of(const ElementSet& o) const {
        return o.contains_all(*this) && w_ != o.w_;
    }

    void unite_with(const ElementSet& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(int(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> m;
        m.reserve(count());
        for_each([&](int i) { m.push_back(i); });
        return m;
    }

    /// Index of the first member >= from, or -1 when there is none.
    int next_member(int from) const {
        if (from >= n_) return -1;
        std::size_t k = std::size_t(from) >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (w) return int(k * 64 + std::countr_zero(w));
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    /// Lexicographic order on the sorted member sequences (used as the
    /// deterministic tie-break for chief series).
    bool members_lex_less(const ElementSet& o) const {
        int i = next_member(0), j = o.next_member(0);
        while (i >= 0 && j >= 0) {
            if (i != j) return i < j;
            i = next_member(i + 1);
            j = o.next_member(j + 1);
        }
        return i < 0 && j >= 0;  // proper prefix compares smaller
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ull ^ std::size_t(n_);
        for (auto w : w_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    int n_;
    std::vector<std::uint64_t> w_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace gengraph
