#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subchi {

// A nonempty partial function {1..n} -> Z/p, stored as the increasing domain
// and the matching values. Comparison is canonical: by |dom|, then domain,
// then values, lexicographically.
class PartialFn {
public:
    PartialFn() = default;
    // entries: (position, value) pairs in any order.
    PartialFn(int n, std::vector<std::pair<int, int>> entries);

    int ambient() const { return n_; }
    std::size_t size() const { return dom_.size(); }
    const std::vector<int>& domain() const { return dom_; }
    const std::vector<int>& values() const { return values_; }
    std::optional<int> at(int position) const;

    // Graph inclusion: *this is a restriction of g.
    bool is_restriction_of(const PartialFn& g) const;
    // Values in {0..p-1}.
    bool valid_for(int p) const;

    // q + f, values taken mod p.
    PartialFn shifted(int q, int p) const;
    // f u {(position, value)} in ambient max(n, position).
    PartialFn extended(int position, int value) const;
    // Same graph, different ambient size.
    PartialFn with_ambient(int n) const;

    // "1,2,4:0,0,1"
    std::string label() const;
    static PartialFn parse(int n, std::string_view label);

    friend bool operator==(const PartialFn& a, const PartialFn& b) {
        return a.dom_ == b.dom_ && a.values_ == b.values_;
    }
    friend std::strong_ordering operator<=>(const PartialFn& a, const PartialFn& b);

private:
    int n_ = 0;
    std::vector<int> dom_;
    std::vector<int> values_;
};

struct ComponentIntervals {
    int count = 0;
    int last_value = 0;
};

// Number of value-runs of the domain-ordered value sequence and the value on
// the run containing max(dom f).
ComponentIntervals component_intervals(const PartialFn& f);

// Membership in V^{n,l}_p: n - |dom f| <= l and at most l component intervals.
bool in_vertex_set(const PartialFn& f, int n, int l, int p);

}  // namespace subchi
