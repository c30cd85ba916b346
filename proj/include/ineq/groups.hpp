#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "ineq/linform.hpp"
#include "ineq/models.hpp"

namespace ineq {

inline constexpr int kMaxGroupOrder = 512;

// Finite group given by its multiplication table over elements 0..order-1.
class Group {
public:
    // Validates closure, associativity, identity and inverses.
    Group(int order, std::vector<int> table);

    // Closure of the given permutations (images of 0..k-1) under composition.
    static Group from_permutations(const std::vector<std::vector<int>>& generators);

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    int inverse(int a) const { return inverse_[a]; }
    const std::vector<int>& table() const { return table_; }

private:
    int order_;
    std::vector<int> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
};

Group cyclic_group(int m);
Group dihedral_group(int m);        // order 2m
Group symmetric_group(int k);
Group alternating_group(int k);
Group direct_product(const Group& a, const Group& b);

// Sorted element indices.
using Subgroup = std::vector<int>;

Subgroup generated_subgroup(const Group& g, std::span<const int> generators);
// Every subgroup, trivial and whole group included, in a deterministic order.
std::vector<Subgroup> enumerate_subgroups(const Group& g);

// A group with n designated subgroups G_1..G_n.
class GroupSpec {
public:
    // Throws InvalidGroup unless every subgroup is a subgroup of g.
    GroupSpec(Group g, std::vector<Subgroup> subgroups);

    const Group& group() const { return group_; }
    const std::vector<Subgroup>& subgroups() const { return subgroups_; }
    int n() const { return static_cast<int>(subgroups_.size()); }

    // |intersection of G_i over i in s|; |G| for the empty set.
    long intersection_order(VarSet s) const;

private:
    Group group_;
    std::vector<Subgroup> subgroups_;
};

// h_a = log2(|G| / |G_a|) with G_a the intersection of the G_i, i in a.
EntropyVector group_vector(const GroupSpec& g);

// Decides sum_a c_a log(|G|/|G_a|) >= 0 exactly by comparing integer products.
bool verify_group_multiplicative(const LinForm& b, const GroupSpec& g);

// "m", m*m table entries, then one subgroup (element list) per line.
GroupSpec read_group_spec(std::istream& in);
void write_group_spec(std::ostream& out, const GroupSpec& g);

} // namespace ineq
