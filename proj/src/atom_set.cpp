#include "subchi/atom_set.hpp"

#include <algorithm>

#include "subchi/errors.hpp"

namespace subchi {

namespace {

void check_atom(std::size_t universe, int atom) {
    if (atom < 1 || static_cast<std::size_t>(atom) > universe)
        throw InvalidArgument("atom index " + std::to_string(atom) + " outside {1.." +
                              std::to_string(universe) + "}");
}

}  // namespace

AtomSet::AtomSet(std::size_t universe, std::initializer_list<int> atoms) : bits_(universe) {
    for (int a : atoms)
        insert(a);
}

AtomSet AtomSet::from_atoms(std::size_t universe, const std::vector<int>& atoms) {
    AtomSet s(universe);
    for (int a : atoms)
        s.insert(a);
    return s;
}

AtomSet AtomSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe < 64 && (mask >> universe) != 0)
        throw InvalidArgument("mask has bits outside the atom set");
    AtomSet s(universe);
    for (std::size_t i = 0; i < universe && i < 64; ++i)
        if ((mask >> i) & 1U)
            s.bits_.set(i);
    return s;
}

AtomSet AtomSet::full(std::size_t universe) {
    AtomSet s(universe);
    s.bits_.set();
    return s;
}

bool AtomSet::contains(int atom) const {
    check_atom(universe(), atom);
    return bits_.test(static_cast<std::size_t>(atom - 1));
}

void AtomSet::insert(int atom) {
    check_atom(universe(), atom);
    bits_.set(static_cast<std::size_t>(atom - 1));
}

void AtomSet::erase(int atom) {
    check_atom(universe(), atom);
    bits_.reset(static_cast<std::size_t>(atom - 1));
}

std::vector<int> AtomSet::atoms() const {
    std::vector<int> out;
    out.reserve(count());
    for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i))
        out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::uint64_t AtomSet::mask() const {
    if (universe() > 64)
        throw InvalidArgument("mask() needs at most 64 atoms");
    std::uint64_t m = 0;
    for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i))
        m |= std::uint64_t{1} << i;
    return m;
}

AtomSet& AtomSet::operator|=(const AtomSet& other) {
    if (universe() != other.universe())
        throw InvalidArgument("atom sets over different universes");
    bits_ |= other.bits_;
    return *this;
}

AtomSet& AtomSet::operator&=(const AtomSet& other) {
    if (universe() != other.universe())
        throw InvalidArgument("atom sets over different universes");
    bits_ &= other.bits_;
    return *this;
}

AtomSet& AtomSet::operator-=(const AtomSet& other) {
    if (universe() != other.universe())
        throw InvalidArgument("atom sets over different universes");
    bits_ -= other.bits_;
    return *this;
}

bool AtomSet::lex_less(const AtomSet& a, const AtomSet& b) {
    const auto la = a.atoms();
    const auto lb = b.atoms();
    return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

std::string AtomSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int a : atoms()) {
        if (!first)
            out += ',';
        out += std::to_string(a);
        first = false;
    }
    return out + "}";
}

}  // namespace subchi
