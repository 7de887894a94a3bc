#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ringlab {

// Bitset over element indices of one ring. Predicate sweeps are
// intersection/membership heavy, so sets of elements are stored this way
// throughout.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return universe_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int b = std::countr_zero(w);
                out.push_back(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ringlab
