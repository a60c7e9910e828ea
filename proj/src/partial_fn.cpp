#include "subchi/partial_fn.hpp"

#include <algorithm>
#include <charconv>

#include "subchi/errors.hpp"

namespace subchi {

PartialFn::PartialFn(int n, std::vector<std::pair<int, int>> entries) : n_(n) {
    if (n < 1)
        throw InvalidArgument("partial function needs n >= 1");
    if (entries.empty())
        throw InvalidArgument("partial function with empty domain");
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto [pos, value] = entries[i];
        if (pos < 1 || pos > n)
            throw InvalidArgument("position " + std::to_string(pos) + " outside {1.." + std::to_string(n) + "}");
        if (i > 0 && entries[i - 1].first == pos)
            throw InvalidArgument("position " + std::to_string(pos) + " assigned twice");
        if (value < 0)
            throw InvalidArgument("negative residue");
        dom_.push_back(pos);
        values_.push_back(value);
    }
}

std::optional<int> PartialFn::at(int position) const {
    const auto it = std::lower_bound(dom_.begin(), dom_.end(), position);
    if (it == dom_.end() || *it != position)
        return std::nullopt;
    return values_[static_cast<std::size_t>(it - dom_.begin())];
}

bool PartialFn::is_restriction_of(const PartialFn& g) const {
    if (size() > g.size())
        return false;
    std::size_t j = 0;
    for (std::size_t i = 0; i < dom_.size(); ++i) {
        while (j < g.dom_.size() && g.dom_[j] < dom_[i])
            ++j;
        if (j == g.dom_.size() || g.dom_[j] != dom_[i] || g.values_[j] != values_[i])
            return false;
    }
    return true;
}

bool PartialFn::valid_for(int p) const {
    return std::all_of(values_.begin(), values_.end(), [p](int v) { return v >= 0 && v < p; });
}

PartialFn PartialFn::shifted(int q, int p) const {
    PartialFn out = *this;
    for (auto& v : out.values_)
        v = ((v + q) % p + p) % p;
    return out;
}

PartialFn PartialFn::extended(int position, int value) const {
    std::vector<std::pair<int, int>> entries;
    entries.reserve(size() + 1);
    for (std::size_t i = 0; i < dom_.size(); ++i)
        entries.emplace_back(dom_[i], values_[i]);
    entries.emplace_back(position, value);
    return PartialFn(std::max(n_, position), std::move(entries));
}

PartialFn PartialFn::with_ambient(int n) const {
    if (!dom_.empty() && dom_.back() > n)
        throw InvalidArgument("domain does not fit in {1.." + std::to_string(n) + "}");
    PartialFn out = *this;
    out.n_ = n;
    return out;
}

std::string PartialFn::label() const {
    std::string out;
    for (std::size_t i = 0; i < dom_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(dom_[i]);
    }
    out += ':';
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view whole) {
    std::vector<int> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size())
            throw ParseError("bad partial function label '" + std::string(whole) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

PartialFn PartialFn::parse(int n, std::string_view label) {
    const auto colon = label.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("partial function label needs 'dom:values', got '" + std::string(label) + "'");
    const auto dom = parse_int_list(label.substr(0, colon), label);
    const auto values = parse_int_list(label.substr(colon + 1), label);
    if (dom.size() != values.size())
        throw ParseError("domain and value lists differ in length in '" + std::string(label) + "'");
    std::vector<std::pair<int, int>> entries;
    for (std::size_t i = 0; i < dom.size(); ++i)
        entries.emplace_back(dom[i], values[i]);
    try {
        return PartialFn(n, std::move(entries));
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string(e.what()) + " in '" + std::string(label) + "'");
    }
}

std::strong_ordering operator<=>(const PartialFn& a, const PartialFn& b) {
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    if (auto c = a.dom_ <=> b.dom_; c != 0)
        return c;
    return a.values_ <=> b.values_;
}

ComponentIntervals component_intervals(const PartialFn& f) {
    if (f.size() == 0)
        throw InvalidArgument("component intervals of an empty partial function");
    const auto& v = f.values();
    int runs = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] != v[i - 1])
            ++runs;
    return {runs, v.back()};
}

bool in_vertex_set(const PartialFn& f, int n, int l, int p) {
    if (f.size() == 0 || !f.valid_for(p))
        return false;
    if (!f.domain().empty() && f.domain().back() > n)
        return false;
    if (n - static_cast<int>(f.size()) > l)
        return false;
    return component_intervals(f).count <= l;
}

}  // namespace subchi
