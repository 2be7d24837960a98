#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace treelab {

/// Finite binary string. Ordered shortlex (length first, then lexicographic),
/// which is the tie-break order used everywhere in the library.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::string bits) : bits_(std::move(bits)) {
        for (char c : bits_)
            if (c != '0' && c != '1') throw std::invalid_argument("BitString: bad character");
    }

    /// Parses the textual encoding: bit sequence, with the empty string
    /// written as the token "ε" (or "e" as an ASCII fallback).
    static BitString parse(const std::string& tok) {
        if (tok == "\xce\xb5" || tok == "e" || tok.empty()) return BitString();
        return BitString(tok);
    }

    std::size_t length() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int bit(std::size_t i) const { return bits_[i] - '0'; }
    const std::string& bits() const { return bits_; }

    /// Display form; the empty string renders as "ε".
    std::string str() const { return bits_.empty() ? "\xce\xb5" : bits_; }

    bool is_prefix_of(const BitString& o) const {
        return bits_.size() <= o.bits_.size() &&
               o.bits_.compare(0, bits_.size(), bits_) == 0;
    }
    bool is_proper_prefix_of(const BitString& o) const {
        return bits_.size() < o.bits_.size() && is_prefix_of(o);
    }
    bool comparable(const BitString& o) const {
        return is_prefix_of(o) || o.is_prefix_of(*this);
    }

    BitString operator*(const BitString& o) const { return BitString(bits_ + o.bits_); }

    BitString prefix(std::size_t n) const { return BitString(bits_.substr(0, n)); }

    /// Suffix after dropping the first n bits.
    BitString suffix(std::size_t n) const { return BitString(bits_.substr(n)); }

    BitString append(int b) const { return BitString(bits_ + char('0' + b)); }

    /// All prefixes including λ and the string itself, shortest first.
    std::vector<BitString> prefixes() const {
        std::vector<BitString> out;
        out.reserve(bits_.size() + 1);
        for (std::size_t n = 0; n <= bits_.size(); ++n) out.push_back(prefix(n));
        return out;
    }

    friend bool operator==(const BitString&, const BitString&) = default;
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
        if (a.bits_.size() != b.bits_.size())
            return a.bits_.size() <=> b.bits_.size();
        int c = a.bits_.compare(b.bits_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// All strings of the given length, in lexicographic order.
    static std::vector<BitString> level(std::size_t n) {
        std::vector<BitString> out;
        out.reserve(std::size_t(1) << n);
        std::string s(n, '0');
        while (true) {
            out.push_back(BitString(s));
            std::size_t i = n;
            while (i > 0 && s[i - 1] == '1') s[--i] = '0';
            if (i == 0) break;
            s[i - 1] = '1';
        }
        return out;
    }

private:
    std::string bits_;
};

inline BitString lambda() { return BitString(); }

} // namespace treelab
