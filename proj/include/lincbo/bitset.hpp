#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lincbo {

/// Fixed-capacity set of small integer indices backed by 64-bit words.
///
/// The tag parameter makes attribute sets and object sets distinct types so
/// they cannot be mixed up; both share this implementation. Indices are
/// 0-based internally. All unused high bits are kept at zero.
template <class Tag>
class IndexSet {
public:
    using word_type = std::uint64_t;
    static constexpr int word_bits = 64;

    IndexSet() = default;

    explicit IndexSet(int capacity)
        : capacity_(capacity), words_((capacity + word_bits - 1) / word_bits, 0) {
        if (capacity < 0) throw std::invalid_argument("IndexSet: negative capacity");
    }

    static IndexSet full(int capacity) {
        IndexSet s(capacity);
        for (auto& w : s.words_) w = ~word_type{0};
        s.trim();
        return s;
    }

    int capacity() const { return capacity_; }

    bool contains(int i) const {
        return (words_[static_cast<std::size_t>(i) / word_bits] >> (i % word_bits)) & 1u;
    }

    void add(int i) { words_[static_cast<std::size_t>(i) / word_bits] |= word_type{1} << (i % word_bits); }
    void remove(int i) { words_[static_cast<std::size_t>(i) / word_bits] &= ~(word_type{1} << (i % word_bits)); }

    bool empty() const {
        for (word_type w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (word_type w : words_) c += std::popcount(w);
        return c;
    }

    /// Smallest member, or -1 if empty.
    int min() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k) * word_bits + std::countr_zero(words_[k]);
        return -1;
    }

    /// Removes and returns the smallest member; -1 if empty.
    int pop_min() {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k]) {
                int b = std::countr_zero(words_[k]);
                words_[k] &= words_[k] - 1;
                return static_cast<int>(k) * word_bits + b;
            }
        }
        return -1;
    }

    IndexSet& operator|=(const IndexSet& o) {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    IndexSet& operator&=(const IndexSet& o) {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    /// In-place difference: this \ o.
    IndexSet& operator-=(const IndexSet& o) {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

    bool operator==(const IndexSet& o) const { return capacity_ == o.capacity_ && words_ == o.words_; }
    bool operator!=(const IndexSet& o) const { return !(*this == o); }

    bool is_subset_of(const IndexSet& o) const {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool is_proper_subset_of(const IndexSet& o) const { return is_subset_of(o) && *this != o; }

    bool intersects(const IndexSet& o) const {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    /// |this \ o| without materializing the difference.
    int count_minus(const IndexSet& o) const {
        check_same(o);
        int c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & ~o.words_[k]);
        return c;
    }

    /// Members strictly below `limit` coincide in both sets. limit <= 0 is
    /// the empty prefix and always holds.
    bool prefix_equal(const IndexSet& o, int limit) const {
        check_same(o);
        if (limit <= 0) return true;
        std::size_t end = static_cast<std::size_t>(limit) / word_bits;
        for (std::size_t k = 0; k < end && k < words_.size(); ++k)
            if (words_[k] != o.words_[k]) return false;
        int tail = limit % word_bits;
        if (tail && end < words_.size()) {
            word_type mask = (word_type{1} << tail) - 1;
            if ((words_[end] ^ o.words_[end]) & mask) return false;
        }
        return true;
    }

    /// Merges src \ *this into both *this and `queue`; returns the smallest
    /// index actually added, or -1 if src added nothing.
    int absorb(const IndexSet& src, IndexSet& queue) {
        check_same(src);
        check_same(queue);
        int lowest = -1;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            word_type added = src.words_[k] & ~words_[k];
            if (added) {
                if (lowest < 0) lowest = static_cast<int>(k) * word_bits + std::countr_zero(added);
                words_[k] |= added;
                queue.words_[k] |= added;
            }
        }
        return lowest;
    }

    /// Keeps members <= hi only; hi < 0 clears everything.
    void clear_above(int hi) {
        if (hi < 0) {
            for (auto& w : words_) w = 0;
            return;
        }
        std::size_t k = static_cast<std::size_t>(hi) / word_bits;
        int b = hi % word_bits;
        if (k < words_.size()) {
            if (b < word_bits - 1) words_[k] &= (word_type{1} << (b + 1)) - 1;
            for (std::size_t j = k + 1; j < words_.size(); ++j) words_[j] = 0;
        }
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            word_type w = words_[k];
            while (w) {
                fn(static_cast<int>(k) * word_bits + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    const std::vector<word_type>& words() const { return words_; }

private:
    void check_same(const IndexSet& o) const {
        if (capacity_ != o.capacity_) throw std::invalid_argument("IndexSet: capacity mismatch");
    }

    void trim() {
        int tail = capacity_ % word_bits;
        if (tail && !words_.empty()) words_.back() &= (word_type{1} << tail) - 1;
    }

    int capacity_ = 0;
    std::vector<word_type> words_;
};

struct attribute_tag {};
struct object_tag {};

using AttributeSet = IndexSet<attribute_tag>;
using ObjectSet = IndexSet<object_tag>;

/// Lectic (Ganter) order: characteristic vectors read as binary numbers with
/// attribute 0 as the most significant digit. Extends strict inclusion.
template <class Tag>
bool lectic_less(const IndexSet<Tag>& a, const IndexSet<Tag>& b) {
    const auto& aw = a.words();
    const auto& bw = b.words();
    for (std::size_t k = 0; k < aw.size(); ++k) {
        auto diff = aw[k] ^ bw[k];
        if (diff) {
            auto low = diff & (~diff + 1);
            return (bw[k] & low) != 0;
        }
    }
    return false;
}

/// "{1,3,4}" with 1-based indices, mirroring the usual display convention.
template <class Tag>
std::string to_display_string(const IndexSet<Tag>& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ',';
        out += std::to_string(i + 1);
        first = false;
    });
    out += '}';
    return out;
}

}  // namespace lincbo
