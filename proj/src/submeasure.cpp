#include "subchi/submeasure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <unordered_map>

#include "subchi/errors.hpp"

namespace subchi {

std::string to_string(SubmeasureKind kind) {
    switch (kind) {
    case SubmeasureKind::Table: return "table";
    case SubmeasureKind::Uniform: return "uniform";
    case SubmeasureKind::Weighted: return "weighted";
    case SubmeasureKind::Capped: return "capped";
    }
    return "unknown";
}

namespace {

void require_nonnegative(const std::vector<Rational>& values, const char* what) {
    for (const auto& v : values)
        if (v < 0)
            throw InvalidArgument(std::string(what) + " must be nonnegative, got " + to_string(v));
}

}  // namespace

FiniteSubmeasure FiniteSubmeasure::uniform(int atoms, Rational weight) {
    if (atoms < 1)
        throw InvalidArgument("a submeasure needs at least one atom");
    if (weight < 0)
        throw InvalidArgument("uniform weight must be nonnegative");
    FiniteSubmeasure mu;
    mu.kind_ = SubmeasureKind::Uniform;
    mu.atoms_ = atoms;
    mu.weights_.assign(static_cast<std::size_t>(atoms), weight);
    return mu;
}

FiniteSubmeasure FiniteSubmeasure::weighted(std::vector<Rational> weights) {
    if (weights.empty())
        throw InvalidArgument("a submeasure needs at least one atom");
    require_nonnegative(weights, "weights");
    FiniteSubmeasure mu;
    mu.kind_ = SubmeasureKind::Weighted;
    mu.atoms_ = static_cast<int>(weights.size());
    mu.weights_ = std::move(weights);
    return mu;
}

FiniteSubmeasure FiniteSubmeasure::capped(Rational cap, std::vector<Rational> weights) {
    if (weights.empty())
        throw InvalidArgument("a submeasure needs at least one atom");
    require_nonnegative(weights, "weights");
    if (cap < 0)
        throw InvalidArgument("cap must be nonnegative");
    FiniteSubmeasure mu;
    mu.kind_ = SubmeasureKind::Capped;
    mu.atoms_ = static_cast<int>(weights.size());
    mu.weights_ = std::move(weights);
    mu.cap_ = std::move(cap);
    return mu;
}

FiniteSubmeasure FiniteSubmeasure::capped_uniform(int atoms, Rational cap, Rational weight) {
    if (atoms < 1)
        throw InvalidArgument("a submeasure needs at least one atom");
    return capped(std::move(cap), std::vector<Rational>(static_cast<std::size_t>(atoms), weight));
}

FiniteSubmeasure FiniteSubmeasure::table(int atoms, std::vector<Rational> values_by_mask) {
    if (atoms < 1 || atoms > kMaxTableAtoms)
        throw InvalidArgument("table submeasures support 1.." + std::to_string(kMaxTableAtoms) + " atoms");
    if (values_by_mask.size() != (std::size_t{1} << atoms))
        throw InvalidArgument("table needs exactly 2^N values");
    require_nonnegative(values_by_mask, "table values");
    FiniteSubmeasure mu;
    mu.kind_ = SubmeasureKind::Table;
    mu.atoms_ = atoms;
    mu.table_ = std::move(values_by_mask);
    return mu;
}

bool FiniteSubmeasure::has_uniform_weights() const {
    if (kind_ == SubmeasureKind::Table)
        return false;
    return std::all_of(weights_.begin(), weights_.end(), [&](const Rational& w) { return w == weights_.front(); });
}

Rational FiniteSubmeasure::eval(const AtomSet& s) const {
    if (s.universe() != static_cast<std::size_t>(atoms_))
        throw InvalidArgument("atom set universe " + std::to_string(s.universe()) +
                              " does not match submeasure on " + std::to_string(atoms_) + " atoms");
    if (kind_ == SubmeasureKind::Table)
        return table_[s.mask()];
    if (kind_ == SubmeasureKind::Uniform)
        return weights_.front() * static_cast<long long>(s.count());
    Rational sum = 0;
    const auto& bits = s.bits();
    for (auto i = bits.find_first(); i != boost::dynamic_bitset<std::uint64_t>::npos; i = bits.find_next(i))
        sum += weights_[i];
    if (kind_ == SubmeasureKind::Capped && *cap_ < sum)
        return *cap_;
    return sum;
}

Rational FiniteSubmeasure::eval_mask(std::uint64_t mask) const {
    return eval(AtomSet::from_mask(static_cast<std::size_t>(atoms_), mask));
}

Rational FiniteSubmeasure::total() const {
    return eval(AtomSet::full(static_cast<std::size_t>(atoms_)));
}

Rational FiniteSubmeasure::atom_value(int atom) const {
    AtomSet s(static_cast<std::size_t>(atoms_));
    s.insert(atom);
    return eval(s);
}

std::vector<Rational> all_mask_values(const FiniteSubmeasure& mu) {
    const int n = mu.atom_count();
    if (n > 24)
        throw ResourceLimit("subset enumeration limited to 24 atoms, got " + std::to_string(n));
    const std::size_t size = std::size_t{1} << n;
    if (mu.kind() == SubmeasureKind::Table)
        return mu.table_values();
    // Additive part first, built incrementally from the lowest set bit.
    std::vector<Rational> values(size);
    const auto& w = mu.weights();
    for (std::size_t m = 1; m < size; ++m) {
        const int low = std::countr_zero(static_cast<std::uint64_t>(m));
        values[m] = values[m & (m - 1)] + w[static_cast<std::size_t>(low)];
    }
    if (mu.kind() == SubmeasureKind::Capped) {
        const Rational& cap = *mu.cap();
        for (auto& v : values)
            if (cap < v)
                v = cap;
    }
    return values;
}

std::optional<std::vector<std::int64_t>> scale_to_common_denominator(const std::vector<Rational>& values) {
    BigInt lcm = 1;
    for (const auto& v : values) {
        const BigInt den = boost::multiprecision::denominator(v);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
        if (lcm > (BigInt(1) << 62))
            return std::nullopt;
    }
    const BigInt limit = BigInt(1) << 61;
    std::vector<std::int64_t> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        const BigInt scaled = boost::multiprecision::numerator(v) * (lcm / boost::multiprecision::denominator(v));
        if (scaled > limit || scaled < -limit)
            return std::nullopt;
        out.push_back(scaled.convert_to<std::int64_t>());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::size_t universe, std::vector<AtomSet> blocks)
    : universe_(universe), blocks_(std::move(blocks)) {
    if (universe_ == 0)
        throw InvalidArgument("partition of an empty ground set");
    AtomSet seen(universe_);
    for (const auto& b : blocks_) {
        if (b.universe() != universe_)
            throw InvalidArgument("partition block over a different ground set");
        if (b.empty())
            throw InvalidArgument("partition has an empty block");
        if (b.intersects(seen))
            throw InvalidArgument("partition blocks are not disjoint");
        seen |= b;
    }
    if (seen.count() != universe_)
        throw InvalidArgument("partition blocks do not cover the ground set");
}

Partition Partition::from_lists(std::size_t universe, const std::vector<std::vector<int>>& blocks) {
    std::vector<AtomSet> sets;
    sets.reserve(blocks.size());
    for (const auto& b : blocks)
        sets.push_back(AtomSet::from_atoms(universe, b));
    return Partition(universe, std::move(sets));
}

Partition Partition::singletons(std::size_t universe) {
    std::vector<AtomSet> sets;
    for (std::size_t a = 1; a <= universe; ++a)
        sets.push_back(AtomSet(universe, {static_cast<int>(a)}));
    return Partition(universe, std::move(sets));
}

Partition Partition::whole(std::size_t universe) {
    return Partition(universe, {AtomSet::full(universe)});
}

Partition Partition::contiguous(std::size_t universe, std::size_t block_count) {
    if (block_count == 0 || block_count > universe)
        throw InvalidArgument("cannot split " + std::to_string(universe) + " atoms into " +
                              std::to_string(block_count) + " nonempty blocks");
    std::vector<AtomSet> sets;
    int next = 1;
    for (std::size_t b = 0; b < block_count; ++b) {
        const std::size_t size = universe / block_count + (b < universe % block_count ? 1 : 0);
        AtomSet s(universe);
        for (std::size_t j = 0; j < size; ++j)
            s.insert(next++);
        sets.push_back(std::move(s));
    }
    return Partition(universe, std::move(sets));
}

std::size_t Partition::block_of(int atom) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].contains(atom))
            return i;
    throw InvalidArgument("atom " + std::to_string(atom) + " not in partition");
}

AtomSet Partition::union_of(std::uint64_t block_mask) const {
    AtomSet out(universe_);
    for (std::size_t i = 0; i < blocks_.size() && i < 64; ++i)
        if ((block_mask >> i) & 1U)
            out |= blocks_[i];
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (coarser.universe_ != universe_)
        return false;
    return std::all_of(blocks_.begin(), blocks_.end(), [&](const AtomSet& b) {
        return std::any_of(coarser.blocks_.begin(), coarser.blocks_.end(),
                           [&](const AtomSet& c) { return b.is_subset_of(c); });
    });
}

std::vector<std::vector<int>> Partition::to_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_)
        out.push_back(b.atoms());
    return out;
}

std::string Partition::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i)
            out += ',';
        out += blocks_[i].to_string();
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

template <typename Value>
AxiomReport check_exhaustive(int n, const std::vector<Value>& v) {
    AxiomReport report;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    auto fail = [&](const char* axiom, std::uint64_t a, std::uint64_t b) {
        report.ok = false;
        report.axiom = axiom;
        report.a = AtomSet::from_mask(static_cast<std::size_t>(n), a);
        report.b = AtomSet::from_mask(static_cast<std::size_t>(n), b);
        return report;
    };
    ++report.checks;
    if (v[0] != 0)
        return fail("normalization", 0, 0);
    // Single-atom extensions suffice for monotonicity.
    for (std::uint64_t a = 0; a <= full; ++a) {
        for (int i = 0; i < n; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if (a & bit)
                continue;
            ++report.checks;
            if (v[a | bit] < v[a])
                return fail("monotonicity", a, a | bit);
        }
    }
    // Given monotonicity, disjoint pairs suffice for subadditivity.
    for (std::uint64_t a = 1; a <= full; ++a) {
        const std::uint64_t rest = full & ~a;
        for (std::uint64_t b = rest; b != 0; b = (b - 1) & rest) {
            if (b < a)
                continue;
            ++report.checks;
            if (v[a] + v[b] < v[a | b])
                return fail("subadditivity", a, b);
        }
    }
    return report;
}

}  // namespace

AxiomReport verify_axioms(const FiniteSubmeasure& mu, const AxiomCheckOptions& options) {
    const int n = mu.atom_count();
    if (n <= options.exhaustive_limit && n <= 24) {
        const auto values = all_mask_values(mu);
        if (auto scaled = scale_to_common_denominator(values))
            return check_exhaustive(n, *scaled);
        return check_exhaustive(n, values);
    }

    AxiomReport report;
    report.exhaustive = false;
    const auto universe = static_cast<std::size_t>(n);
    if (mu.eval(AtomSet(universe)) != 0) {
        report.ok = false;
        report.axiom = "normalization";
        report.a = report.b = AtomSet(universe);
        return report;
    }
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
        AtomSet a(universe), b(universe);
        for (int i = 1; i <= n; ++i) {
            const auto r = rng();
            if (r & 1U)
                a.insert(i);
            if (r & 2U)
                b.insert(i);
        }
        const Rational va = mu.eval(a), vb = mu.eval(b), vu = mu.eval(a | b);
        report.checks += 2;
        if (vu < va) {
            report.ok = false;
            report.axiom = "monotonicity";
            report.a = a;
            report.b = a | b;
            return report;
        }
        if (va + vb < vu) {
            report.ok = false;
            report.axiom = "subadditivity";
            report.a = a;
            report.b = b;
            return report;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Covering numbers

namespace {

bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    while (a != 0 && b != 0) {
        const int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb)
            return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// All admissible sets have at most `s` atoms and every s-set is admissible.
// Reproduces the greedy witness: consecutive chunks, the last one padded with
// the smallest atoms.
Cover uniform_cover(int n, int s) {
    const auto universe = static_cast<std::size_t>(n);
    Cover cover;
    int next = 1;
    while (next + s - 1 <= n) {
        AtomSet chunk(universe);
        for (int a = next; a < next + s; ++a)
            chunk.insert(a);
        cover.sets.push_back(std::move(chunk));
        next += s;
    }
    const int rest = n - next + 1;
    if (rest > 0) {
        AtomSet last(universe);
        for (int a = 1; a <= s - rest; ++a)
            last.insert(a);
        for (int a = next; a <= n; ++a)
            last.insert(a);
        cover.sets.push_back(std::move(last));
    }
    cover.k = static_cast<int>(cover.sets.size());
    return cover;
}

class CoverSearch {
public:
    CoverSearch(int n, std::vector<std::uint64_t> maximal)
        : n_(n), full_((std::uint64_t{1} << n) - 1), maximal_(std::move(maximal)) {
        std::sort(maximal_.begin(), maximal_.end(), mask_lex_less);
        by_atom_.resize(static_cast<std::size_t>(n));
        for (auto m : maximal_) {
            max_size_ = std::max(max_size_, std::popcount(m));
            for (int i = 0; i < n; ++i)
                if ((m >> i) & 1U)
                    by_atom_[static_cast<std::size_t>(i)].push_back(m);
        }
    }

    std::vector<std::uint64_t> solve() {
        best_ = greedy();
        std::vector<std::uint64_t> chosen;
        dfs(full_, chosen);
        return best_;
    }

private:
    std::vector<std::uint64_t> greedy() const {
        std::vector<std::uint64_t> out;
        std::uint64_t uncovered = full_;
        while (uncovered) {
            std::uint64_t pick = 0;
            int gain = -1;
            for (auto m : maximal_) {  // lex order, so the first maximum wins ties
                const int g = std::popcount(m & uncovered);
                if (g > gain) {
                    gain = g;
                    pick = m;
                }
            }
            out.push_back(pick);
            uncovered &= ~pick;
        }
        return out;
    }

    void dfs(std::uint64_t uncovered, std::vector<std::uint64_t>& chosen) {
        const int depth = static_cast<int>(chosen.size());
        if (uncovered == 0) {
            if (depth < static_cast<int>(best_.size()))
                best_ = chosen;
            return;
        }
        const int remaining = std::popcount(uncovered);
        if (depth + (remaining + max_size_ - 1) / max_size_ >= static_cast<int>(best_.size()))
            return;
        auto [it, inserted] = seen_.try_emplace(uncovered, depth);
        if (!inserted) {
            if (it->second <= depth)
                return;
            it->second = depth;
        }
        const int atom = std::countr_zero(uncovered);
        for (auto m : by_atom_[static_cast<std::size_t>(atom)]) {
            chosen.push_back(m);
            dfs(uncovered & ~m, chosen);
            chosen.pop_back();
        }
    }

    int n_;
    std::uint64_t full_;
    std::vector<std::uint64_t> maximal_;
    std::vector<std::vector<std::uint64_t>> by_atom_;
    int max_size_ = 1;
    std::vector<std::uint64_t> best_;
    std::unordered_map<std::uint64_t, int> seen_;
};

}  // namespace

Cover covering_number(const FiniteSubmeasure& mu, const Rational& delta) {
    if (delta <= 0)
        throw InvalidArgument("covering threshold must be positive");
    const int n = mu.atom_count();
    const auto universe = static_cast<std::size_t>(n);
    for (int a = 1; a <= n; ++a)
        if (mu.atom_value(a) >= delta)
            throw Infeasible("atom " + std::to_string(a) + " has submeasure " + to_string(mu.atom_value(a)) +
                             " >= " + to_string(delta));

    if (mu.kind() == SubmeasureKind::Capped && *mu.cap() < delta)
        return Cover{1, {AtomSet::full(universe)}};
    if (mu.has_uniform_weights()) {
        // Here admissibility is |A| * w < delta.
        const Rational& w = mu.weights().front();
        int s = n;
        if (w > 0) {
            const Rational ratio = delta / w;
            BigInt ceil_ratio = boost::multiprecision::numerator(ratio) / boost::multiprecision::denominator(ratio);
            if (ceil_ratio * boost::multiprecision::denominator(ratio) != boost::multiprecision::numerator(ratio))
                ceil_ratio += 1;
            const BigInt largest = ceil_ratio - 1;
            if (largest < n)
                s = largest.convert_to<int>();
        }
        return uniform_cover(n, s);
    }

    if (n > FiniteSubmeasure::kMaxTableAtoms)
        throw ResourceLimit("exact set cover limited to " + std::to_string(FiniteSubmeasure::kMaxTableAtoms) +
                            " atoms for non-uniform submeasures");
    const auto values = all_mask_values(mu);
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<char> admissible(size);
    for (std::uint64_t m = 0; m < size; ++m)
        admissible[m] = values[m] < delta;
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t m = 1; m < size; ++m) {
        if (!admissible[m])
            continue;
        bool is_max = true;
        for (int i = 0; i < n && is_max; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if (!(m & bit) && admissible[m | bit])
                is_max = false;
        }
        if (is_max)
            maximal.push_back(m);
    }
    CoverSearch search(n, std::move(maximal));
    Cover cover;
    for (auto m : search.solve())
        cover.sets.push_back(AtomSet::from_mask(universe, m));
    cover.k = static_cast<int>(cover.sets.size());
    return cover;
}

// ---------------------------------------------------------------------------

FiniteSubmeasure induced_submeasure(const FiniteSubmeasure& mu, const Partition& partition) {
    if (partition.universe() != static_cast<std::size_t>(mu.atom_count()))
        throw InvalidArgument("partition ground set does not match the submeasure");
    const auto& blocks = partition.blocks();
    if (mu.kind() == SubmeasureKind::Table) {
        const int k = static_cast<int>(blocks.size());
        std::vector<Rational> values(std::size_t{1} << k);
        for (std::uint64_t b = 0; b < values.size(); ++b)
            values[b] = mu.eval(partition.union_of(b));
        return FiniteSubmeasure::table(k, std::move(values));
    }
    std::vector<Rational> sums;
    sums.reserve(blocks.size());
    for (const auto& block : blocks) {
        Rational s = 0;
        for (int a : block.atoms())
            s += mu.weights()[static_cast<std::size_t>(a - 1)];
        sums.push_back(std::move(s));
    }
    const bool equal = std::all_of(sums.begin(), sums.end(), [&](const Rational& s) { return s == sums.front(); });
    switch (mu.kind()) {
    case SubmeasureKind::Uniform:
        if (equal)
            return FiniteSubmeasure::uniform(static_cast<int>(sums.size()), sums.front());
        return FiniteSubmeasure::weighted(std::move(sums));
    case SubmeasureKind::Weighted:
        return FiniteSubmeasure::weighted(std::move(sums));
    case SubmeasureKind::Capped:
        return FiniteSubmeasure::capped(*mu.cap(), std::move(sums));
    case SubmeasureKind::Table:
        break;
    }
    throw InvalidArgument("unsupported submeasure kind");
}

Partition common_refinement(const std::vector<Partition>& partitions) {
    if (partitions.empty())
        throw InvalidArgument("common refinement of no partitions");
    const std::size_t universe = partitions.front().universe();
    for (const auto& p : partitions)
        if (p.universe() != universe)
            throw InvalidArgument("partitions over different ground sets");
    std::map<std::vector<std::size_t>, AtomSet> groups;
    for (std::size_t a = 1; a <= universe; ++a) {
        std::vector<std::size_t> signature;
        signature.reserve(partitions.size());
        for (const auto& p : partitions)
            signature.push_back(p.block_of(static_cast<int>(a)));
        auto [it, _] = groups.try_emplace(std::move(signature), AtomSet(universe));
        it->second.insert(static_cast<int>(a));
    }
    std::vector<AtomSet> blocks;
    blocks.reserve(groups.size());
    for (auto& [_, set] : groups)
        blocks.push_back(std::move(set));
    return Partition(universe, std::move(blocks));
}

Partition disjointify(std::size_t universe, const std::vector<AtomSet>& cover) {
    std::vector<AtomSet> blocks;
    AtomSet taken(universe);
    for (const auto& s : cover) {
        AtomSet rest = s - taken;
        if (!rest.empty())
            blocks.push_back(rest);
        taken |= s;
    }
    return Partition(universe, std::move(blocks));
}

FiniteSubmeasure SubmeasureFamily::at(int resolution) const {
    if (resolution < 1)
        throw InvalidArgument("family resolution must be positive");
    const Rational w = make_rational(1, resolution);
    if (kind == Kind::Capped)
        return FiniteSubmeasure::capped_uniform(resolution, cap, w);
    return FiniteSubmeasure::uniform(resolution, w);
}

std::string SubmeasureFamily::describe() const {
    if (kind == Kind::Capped)
        return "capped(cap=" + to_string(cap) + ")";
    return "uniform";
}

}  // namespace subchi
