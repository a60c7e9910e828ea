#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace subchi {

// A subset of the atom set {1..N}. Atoms are 1-based throughout the public
// interface; bit (a - 1) stores atom a.
class AtomSet {
public:
    AtomSet() = default;
    explicit AtomSet(std::size_t universe) : bits_(universe) {}
    AtomSet(std::size_t universe, std::initializer_list<int> atoms);

    static AtomSet from_atoms(std::size_t universe, const std::vector<int>& atoms);
    static AtomSet from_mask(std::size_t universe, std::uint64_t mask);
    static AtomSet full(std::size_t universe);

    std::size_t universe() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    bool contains(int atom) const;
    void insert(int atom);
    void erase(int atom);

    // Sorted 1-based atom list.
    std::vector<int> atoms() const;
    // Requires universe() <= 64.
    std::uint64_t mask() const;

    bool is_subset_of(const AtomSet& other) const { return bits_.is_subset_of(other.bits_); }
    bool intersects(const AtomSet& other) const { return bits_.intersects(other.bits_); }

    AtomSet& operator|=(const AtomSet& other);
    AtomSet& operator&=(const AtomSet& other);
    AtomSet& operator-=(const AtomSet& other);
    friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
    friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
    friend AtomSet operator-(AtomSet a, const AtomSet& b) { return a -= b; }

    friend bool operator==(const AtomSet& a, const AtomSet& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const AtomSet& a, const AtomSet& b) { return !(a == b); }

    // Lexicographic comparison of the sorted atom lists ({1} < {1,2} < {2}).
    static bool lex_less(const AtomSet& a, const AtomSet& b);

    // "{1,2,5}"
    std::string to_string() const;

    const boost::dynamic_bitset<std::uint64_t>& bits() const { return bits_; }

private:
    boost::dynamic_bitset<std::uint64_t> bits_;
};

}  // namespace subchi
