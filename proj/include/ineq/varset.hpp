#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ineq {

// Ceiling on the number of random variables. 2^n - 1 coordinates.
inline constexpr int kMaxVars = 16;

// Subset of the variable indices 1..kMaxVars, stored as a bitmask with
// variable i at bit i-1. Ordering by mask is the canonical subset order
// (h1, h2, h12, h3, h13, ...).
class VarSet {
public:
    constexpr VarSet() = default;

    static constexpr VarSet from_bits(std::uint32_t bits) { return VarSet(bits); }
    static VarSet of(std::initializer_list<int> indices);
    static VarSet of(const std::vector<int>& indices);
    static VarSet singleton(int index);
    static VarSet full(int n);

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int index) const { return index >= 1 && index <= kMaxVars && ((bits_ >> (index - 1)) & 1u); }
    int size() const;
    int max_index() const;
    std::vector<int> indices() const;

    constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint(VarSet other) const { return (bits_ & other.bits_) == 0; }
    constexpr bool within(int n) const { return (bits_ & ~full_bits(n)) == 0; }

    constexpr VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
    constexpr VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
    constexpr VarSet operator-(VarSet o) const { return VarSet(bits_ & ~o.bits_); }

    constexpr auto operator<=>(const VarSet&) const = default;

    // "12" when every index is a single digit, otherwise "{1,10}".
    std::string coord_label() const;
    // "1" for a singleton, "{1,2}" otherwise; "{}" when empty.
    std::string group_label() const;

private:
    constexpr explicit VarSet(std::uint32_t bits) : bits_(bits) {}
    static constexpr std::uint32_t full_bits(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

    std::uint32_t bits_ = 0;
};

// Number of entropy coordinates for n variables.
constexpr int num_coords(int n) { return (1 << n) - 1; }

// Position of a nonempty subset in a canonically ordered coordinate vector.
constexpr int coord_index(VarSet s) { return static_cast<int>(s.bits()) - 1; }

void check_var_count(int n);

} // namespace ineq
