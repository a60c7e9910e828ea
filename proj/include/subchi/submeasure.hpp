#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subchi/atom_set.hpp"
#include "subchi/rational.hpp"

namespace subchi {

enum class SubmeasureKind { Table, Uniform, Weighted, Capped };

std::string to_string(SubmeasureKind kind);

// A monotone subadditive set function on the power set of {1..N} with exact
// rational values. Immutable after construction.
//
//   table    - explicit value per subset (N <= 20), indexed by bitmask
//   uniform  - w * |A|
//   weighted - sum of per-atom weights
//   capped   - min(cap, sum of per-atom weights)
//
// Builders validate the data they need to evaluate (nonnegativity, sizes); the
// submeasure axioms themselves are checked by verify_axioms so that a bad
// table can be reported with a witness.
class FiniteSubmeasure {
public:
    static constexpr int kMaxTableAtoms = 20;

    static FiniteSubmeasure uniform(int atoms, Rational weight);
    static FiniteSubmeasure weighted(std::vector<Rational> weights);
    static FiniteSubmeasure capped(Rational cap, std::vector<Rational> weights);
    static FiniteSubmeasure capped_uniform(int atoms, Rational cap, Rational weight);
    static FiniteSubmeasure table(int atoms, std::vector<Rational> values_by_mask);

    int atom_count() const { return atoms_; }
    SubmeasureKind kind() const { return kind_; }
    bool is_measure() const { return kind_ == SubmeasureKind::Uniform || kind_ == SubmeasureKind::Weighted; }
    // True when every atom carries the same weight (uniform, or capped with equal weights).
    bool has_uniform_weights() const;

    Rational eval(const AtomSet& s) const;
    Rational eval_mask(std::uint64_t mask) const;
    Rational total() const;
    Rational atom_value(int atom) const;

    const std::vector<Rational>& weights() const { return weights_; }
    const std::optional<Rational>& cap() const { return cap_; }
    const std::vector<Rational>& table_values() const { return table_; }

private:
    FiniteSubmeasure() = default;

    SubmeasureKind kind_ = SubmeasureKind::Uniform;
    int atoms_ = 0;
    std::vector<Rational> weights_;
    std::optional<Rational> cap_;
    std::vector<Rational> table_;
};

// Values of every subset, indexed by bitmask. Needs atom_count() <= 24.
std::vector<Rational> all_mask_values(const FiniteSubmeasure& mu);

// Numerators over a common denominator, when they fit comfortably in 62 bits.
std::optional<std::vector<std::int64_t>> scale_to_common_denominator(const std::vector<Rational>& values);

// Ordered list of nonempty disjoint blocks covering {1..N}.
class Partition {
public:
    Partition() = default;
    Partition(std::size_t universe, std::vector<AtomSet> blocks);
    static Partition from_lists(std::size_t universe, const std::vector<std::vector<int>>& blocks);
    static Partition singletons(std::size_t universe);
    static Partition whole(std::size_t universe);
    // Contiguous blocks of near-equal size, larger blocks first.
    static Partition contiguous(std::size_t universe, std::size_t block_count);

    std::size_t universe() const { return universe_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<AtomSet>& blocks() const { return blocks_; }
    const AtomSet& block(std::size_t i) const { return blocks_.at(i); }

    // Index of the block holding `atom`.
    std::size_t block_of(int atom) const;
    // Union of the blocks selected by `block_mask` (bit i = block i).
    AtomSet union_of(std::uint64_t block_mask) const;
    // Every block of *this lies inside a block of `coarser`.
    bool refines(const Partition& coarser) const;

    std::vector<std::vector<int>> to_lists() const;
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.universe_ == b.universe_ && a.blocks_ == b.blocks_;
    }

private:
    std::size_t universe_ = 0;
    std::vector<AtomSet> blocks_;
};

struct AxiomReport {
    bool ok = true;
    bool exhaustive = true;
    std::uint64_t checks = 0;
    // On failure: "normalization", "monotonicity" or "subadditivity" and the
    // witness pair. For monotonicity a is a subset of b with mu(a) > mu(b);
    // for subadditivity mu(a u b) > mu(a) + mu(b).
    std::string axiom;
    AtomSet a;
    AtomSet b;
};

struct AxiomCheckOptions {
    int exhaustive_limit = 12;
    std::uint64_t samples = 200000;
    std::uint64_t seed = 1;
};

AxiomReport verify_axioms(const FiniteSubmeasure& mu, const AxiomCheckOptions& options = {});

struct Cover {
    int k = 0;
    std::vector<AtomSet> sets;
};

// Minimum number of sets of submeasure strictly below delta covering the
// ground set, with a witness cover. Throws Infeasible when some singleton has
// submeasure >= delta.
Cover covering_number(const FiniteSubmeasure& mu, const Rational& delta);

// mu_P(B) = mu(union of the blocks indexed by B).
FiniteSubmeasure induced_submeasure(const FiniteSubmeasure& mu, const Partition& partition);

// Coarsest common refinement; blocks ordered by the tuple of block indices
// they come from (so a single input is returned unchanged).
Partition common_refinement(const std::vector<Partition>& partitions);

// Disjointify a cover in order: first set whole, later sets minus their
// predecessors, empty remainders dropped.
Partition disjointify(std::size_t universe, const std::vector<AtomSet>& cover);

// Resolution-indexed family of submeasures whose atoms have submeasure 1/r at
// resolution r (the finite stand-in for a diffused submeasure).
struct SubmeasureFamily {
    enum class Kind { Uniform, Capped };
    Kind kind = Kind::Uniform;
    Rational cap = 1;  // capped family only

    static SubmeasureFamily uniform() { return {}; }
    static SubmeasureFamily capped(Rational cap) { return {Kind::Capped, std::move(cap)}; }

    FiniteSubmeasure at(int resolution) const;
    std::string describe() const;
};

}  // namespace subchi
