#include "ineq/varset.hpp"

#include <bit>

#include "ineq/error.hpp"

namespace ineq {

VarSet VarSet::singleton(int index)
{
    if (index < 1 || index > kMaxVars)
        throw Error(Errc::OutOfRange, "variable index " + std::to_string(index) + " outside 1.." + std::to_string(kMaxVars));
    return VarSet(1u << (index - 1));
}

VarSet VarSet::of(std::initializer_list<int> indices)
{
    VarSet s;
    for (int i : indices)
        s = s | singleton(i);
    return s;
}

VarSet VarSet::of(const std::vector<int>& indices)
{
    VarSet s;
    for (int i : indices)
        s = s | singleton(i);
    return s;
}

VarSet VarSet::full(int n)
{
    check_var_count(n);
    return VarSet(full_bits(n));
}

int VarSet::size() const
{
    return std::popcount(bits_);
}

int VarSet::max_index() const
{
    return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_);
}

std::vector<int> VarSet::indices() const
{
    std::vector<int> out;
    for (int i = 1; i <= kMaxVars; ++i)
        if (contains(i))
            out.push_back(i);
    return out;
}

std::string VarSet::coord_label() const
{
    auto idx = indices();
    bool short_form = !idx.empty() && idx.back() < 10;
    std::string out;
    if (short_form) {
        for (int i : idx)
            out += static_cast<char>('0' + i);
        return out;
    }
    out = "{";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k)
            out += ',';
        out += std::to_string(idx[k]);
    }
    return out + "}";
}

std::string VarSet::group_label() const
{
    auto idx = indices();
    if (idx.size() == 1)
        return std::to_string(idx.front());
    std::string out = "{";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k)
            out += ',';
        out += std::to_string(idx[k]);
    }
    return out + "}";
}

void check_var_count(int n)
{
    if (n < 1 || n > kMaxVars)
        throw Error(Errc::OutOfRange, "variable count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVars));
}

} // namespace ineq
