#include "subchi/partial_complexes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <unordered_map>

#include "subchi/errors.hpp"

namespace subchi {

bool is_prime(long long n) {
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

int PartialFnComplex::index_of(const PartialFn& f) const {
    const auto idx = complex->find_vertex(f.label());
    if (!idx)
        throw InvalidArgument("'" + f.label() + "' is not a vertex");
    return *idx;
}

namespace {

void check_prime(int p) {
    if (!is_prime(p))
        throw InvalidArgument(std::to_string(p) + " is not prime");
}

std::optional<GroupAction> shift_action(const std::vector<PartialFn>& vertices, int p,
                                        const std::unordered_map<std::string, int>& index) {
    GroupAction a{p, {}};
    a.generator.reserve(vertices.size());
    for (const auto& f : vertices)
        a.generator.push_back(index.at(f.shifted(1, p).label()));
    return a;
}

std::unordered_map<std::string, int> label_index(const std::vector<PartialFn>& vertices) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index.emplace(vertices[i].label(), static_cast<int>(i));
    return index;
}

std::vector<std::string> labels_of(const std::vector<PartialFn>& vertices) {
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (const auto& f : vertices)
        labels.push_back(f.label());
    return labels;
}

double binomial(int n, int k) {
    double b = 1;
    for (int i = 1; i <= k; ++i)
        b = b * (n - k + i) / i;
    return b;
}

bool is_chain(std::vector<PartialFn>& chain) {
    std::sort(chain.begin(), chain.end());
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (!chain[i - 1].is_restriction_of(chain[i]) || chain[i - 1].size() == chain[i].size())
            return false;
    return true;
}

std::string describe_chain(const std::vector<PartialFn>& chain) {
    std::string out = "{";
    for (std::size_t i = 0; i < chain.size(); ++i)
        out += (i ? " " : "") + chain[i].label();
    return out + "}";
}

}  // namespace

PartialFnComplex build_K(int n, int l, int p, const ComplexLimits& limits) {
    if (n < 1 || l < 0)
        throw InvalidArgument("build_K needs n >= 1 and l >= 0");
    if (n < l)
        throw InvalidArgument("build_K needs n >= l");
    check_prime(p);
    const int lo = std::max(1, n - l);
    if (n > 16)
        throw ResourceLimit("build_K supports n <= 16");

    double projected = 0;
    for (int s = lo; s <= n; ++s)
        projected += binomial(n, s) * std::pow(static_cast<double>(p), s);
    if (projected > static_cast<double>(limits.max_vertices))
        throw ResourceLimit("K^{" + std::to_string(n) + "," + std::to_string(l) + "}_" + std::to_string(p) +
                            " would exceed " + std::to_string(limits.max_vertices) + " candidate vertices");

    PartialFnComplex out;
    out.n = n;
    out.l = l;
    out.p = p;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        const int size = std::popcount(mask);
        if (size < lo)
            continue;
        std::vector<int> dom;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1U)
                dom.push_back(i + 1);
        std::vector<int> values(static_cast<std::size_t>(size), 0);
        while (true) {
            std::vector<std::pair<int, int>> entries;
            for (int i = 0; i < size; ++i)
                entries.emplace_back(dom[static_cast<std::size_t>(i)], values[static_cast<std::size_t>(i)]);
            PartialFn f(n, std::move(entries));
            if (component_intervals(f).count <= l)
                out.vertices.push_back(std::move(f));
            int i = size - 1;
            while (i >= 0 && ++values[static_cast<std::size_t>(i)] == p)
                values[static_cast<std::size_t>(i--)] = 0;
            if (i < 0)
                break;
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    const auto index = label_index(out.vertices);

    // Maximal chains: one-point extensions from the smallest admissible
    // domains up to total functions.
    std::vector<Simplex> facets;
    std::vector<int> path;
    std::function<void(int)> extend = [&](int v) {
        path.push_back(v);
        const PartialFn& f = out.vertices[static_cast<std::size_t>(v)];
        if (static_cast<int>(f.size()) == n) {
            Simplex s = path;
            std::sort(s.begin(), s.end());
            facets.push_back(std::move(s));
            if (facets.size() > limits.max_simplices)
                throw ResourceLimit("K^{" + std::to_string(n) + "," + std::to_string(l) + "}_" + std::to_string(p) +
                                    " has more than " + std::to_string(limits.max_simplices) + " facets");
        } else {
            for (int pos = 1; pos <= n; ++pos) {
                if (f.at(pos))
                    continue;
                for (int value = 0; value < p; ++value) {
                    const auto it = index.find(f.extended(pos, value).with_ambient(n).label());
                    if (it != index.end())
                        extend(it->second);
                }
            }
        }
        path.pop_back();
    };
    for (std::size_t v = 0; v < out.vertices.size() && static_cast<int>(out.vertices[v].size()) == lo; ++v)
        extend(static_cast<int>(v));

    auto action = shift_action(out.vertices, p, index);
    if (facets.empty() && !out.vertices.empty())
        throw InvalidArgument("no maximal chains found");
    out.complex = std::make_shared<const Complex>(
        Complex::from_maximal_facets(labels_of(out.vertices), std::move(facets), std::move(action)));
    return out;
}

PartialFnComplex build_S(int l_plus_1, int p, const ComplexLimits& limits) {
    if (l_plus_1 < 1)
        throw InvalidArgument("build_S needs l+1 >= 1");
    check_prime(p);
    double facets_projected = std::pow(static_cast<double>(p), l_plus_1);
    if (facets_projected > static_cast<double>(limits.max_simplices))
        throw ResourceLimit("S^" + std::to_string(l_plus_1) + "_" + std::to_string(p) + " has too many facets");

    PartialFnComplex out;
    out.n = l_plus_1;
    out.l = l_plus_1 - 1;
    out.p = p;
    for (int i = 1; i <= l_plus_1; ++i)
        for (int a = 0; a < p; ++a)
            out.vertices.emplace_back(l_plus_1, std::vector<std::pair<int, int>>{{i, a}});
    const auto index = label_index(out.vertices);

    std::vector<Simplex> facets;
    std::vector<int> choice(static_cast<std::size_t>(l_plus_1), 0);
    while (true) {
        Simplex s;
        for (int i = 0; i < l_plus_1; ++i)
            s.push_back(i * p + choice[static_cast<std::size_t>(i)]);
        facets.push_back(std::move(s));
        int i = l_plus_1 - 1;
        while (i >= 0 && ++choice[static_cast<std::size_t>(i)] == p)
            choice[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
    }
    auto action = shift_action(out.vertices, p, index);
    out.complex = std::make_shared<const Complex>(
        Complex::from_maximal_facets(labels_of(out.vertices), std::move(facets), std::move(action)));
    return out;
}

PartialFn map_s(std::vector<PartialFn> chain, int n, int l, int p) {
    if (chain.empty())
        throw InvalidArgument("map_s needs a nonempty chain");
    for (const auto& f : chain)
        if (!in_vertex_set(f, n, l, p))
            throw InvalidArgument("'" + f.label() + "' is not a vertex of K^{" + std::to_string(n) + "," +
                                  std::to_string(l) + "}_" + std::to_string(p));
    if (!is_chain(chain))
        throw InvalidArgument(describe_chain(chain) + " is not a chain under inclusion");
    if (chain.size() > 1)
        return chain.back().with_ambient(n + 1);
    const PartialFn& f = chain.front();
    return f.extended(n + 1, component_intervals(f).last_value);
}

LemmaMap lemma_map(int n, int l, int p, const ComplexLimits& limits) {
    LemmaMap out;
    out.domain = build_K(n, l, p, limits);
    out.sd = barycentric(*out.domain.complex, limits);
    out.codomain = build_K(n + 1, l, p, limits);
    out.map.source = std::make_shared<const Complex>(out.sd.complex);
    out.map.target = out.codomain.complex;
    out.map.assignment.reserve(out.sd.origin.size());
    for (const auto& s : out.sd.origin) {
        std::vector<PartialFn> chain;
        chain.reserve(s.size());
        for (int v : s)
            chain.push_back(out.domain.vertices[static_cast<std::size_t>(v)]);
        out.map.assignment.push_back(out.codomain.index_of(map_s(std::move(chain), n, l, p)));
    }
    return out;
}

SimplicialMap inclusion_map(int l, int p, const ComplexLimits& limits) {
    const auto s = build_S(l + 1, p, limits);
    const auto k = build_K(l + 1, l + 1, p, limits);
    SimplicialMap f;
    f.source = s.complex;
    f.target = k.complex;
    for (const auto& v : s.vertices)
        f.assignment.push_back(k.index_of(v));
    return f;
}

SimplicialMap compose_tower(int l, int p, int l_n, const ComplexLimits& limits) {
    if (l < 0 || l_n < 0)
        throw InvalidArgument("compose_tower needs l >= 0 and l_n >= 0");
    const auto s = build_S(l + 1, p, limits);
    std::shared_ptr<const Complex> stage = s.complex;
    std::vector<PartialFn> image;
    for (const auto& v : s.vertices)
        image.push_back(v.with_ambient(l + 1));

    for (int j = 1; j <= l_n; ++j) {
        const int n = l + j;
        auto sd = barycentric(*stage, limits);
        std::vector<PartialFn> next;
        next.reserve(sd.origin.size());
        for (const auto& simplex : sd.origin) {
            std::vector<PartialFn> chain;
            for (int v : simplex)
                chain.push_back(image[static_cast<std::size_t>(v)]);
            std::vector<PartialFn> sorted = chain;
            if (!is_chain(sorted))
                throw NotSimplicial("stage " + std::to_string(j - 1) + " sends " + describe_simplex(*stage, simplex) +
                                    " to " + describe_chain(sorted) + ", which is not a chain in K^{" +
                                    std::to_string(n) + "," + std::to_string(l + 1) + "}_" + std::to_string(p));
            next.push_back(map_s(std::move(chain), n, l + 1, p));
        }
        stage = std::make_shared<const Complex>(std::move(sd.complex));
        image = std::move(next);
    }

    const auto target = build_K(l + 1 + l_n, l + 1, p, limits);
    SimplicialMap f;
    f.source = stage;
    f.target = target.complex;
    f.assignment.reserve(image.size());
    for (const auto& v : image)
        f.assignment.push_back(target.index_of(v.with_ambient(l + 1 + l_n)));
    return f;
}

}  // namespace subchi
