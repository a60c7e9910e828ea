#include "subchi/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "subchi/errors.hpp"
#include "subchi/partial_fn.hpp"

namespace subchi {

int GroupAction::apply(int vertex, int q) const {
    q = ((q % order) + order) % order;
    for (int i = 0; i < q; ++i)
        vertex = generator[static_cast<std::size_t>(vertex)];
    return vertex;
}

namespace {

Simplex image_of(const Simplex& s, const std::vector<int>& map) {
    Simplex out;
    out.reserve(s.size());
    for (int v : s)
        out.push_back(map[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Complex::Complex(std::vector<std::string> labels, std::vector<Simplex> facets, std::optional<GroupAction> action)
    : labels_(std::move(labels)), action_(std::move(action)) {
    const int n = static_cast<int>(labels_.size());
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw InvalidArgument("facet repeats a vertex");
        for (int v : f)
            if (v < 0 || v >= n)
                throw InvalidArgument("facet vertex out of range");
    }
    std::sort(facets.begin(), facets.end(),
              [](const Simplex& a, const Simplex& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // Keep maximal facets only; larger ones come first.
    std::vector<Simplex> kept;
    for (auto& f : facets) {
        const bool covered = std::any_of(kept.begin(), kept.end(), [&](const Simplex& g) {
            return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
        });
        if (!covered)
            kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end());
    facets_ = std::move(kept);
    index();
}

Complex Complex::from_maximal_facets(std::vector<std::string> labels, std::vector<Simplex> facets,
                                     std::optional<GroupAction> action) {
    Complex k;
    k.labels_ = std::move(labels);
    k.facets_ = std::move(facets);
    std::sort(k.facets_.begin(), k.facets_.end());
    k.action_ = std::move(action);
    k.index();
    return k;
}

Complex Complex::points(std::vector<std::string> labels) {
    std::vector<Simplex> facets;
    for (int v = 0; v < static_cast<int>(labels.size()); ++v)
        facets.push_back({v});
    return from_maximal_facets(std::move(labels), std::move(facets));
}

void Complex::index() {
    label_index_.clear();
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (!label_index_.emplace(labels_[i], static_cast<int>(i)).second)
            throw InvalidArgument("duplicate vertex label '" + labels_[i] + "'");
    incidence_.assign(labels_.size(), {});
    for (std::size_t f = 0; f < facets_.size(); ++f)
        for (int v : facets_[f])
            incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
    if (action_) {
        if (action_->order < 1 || action_->generator.size() != labels_.size())
            throw InvalidArgument("group action does not match the vertex set");
        for (int v : action_->generator)
            if (v < 0 || v >= static_cast<int>(labels_.size()))
                throw InvalidArgument("group action maps outside the vertex set");
    }
}

std::optional<int> Complex::find_vertex(std::string_view label) const {
    const auto it = label_index_.find(std::string(label));
    if (it == label_index_.end())
        return std::nullopt;
    return it->second;
}

int Complex::dimension() const {
    int d = -1;
    for (const auto& f : facets_)
        d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool Complex::contains(const Simplex& s) const {
    if (facets_.empty())
        return false;
    if (s.empty())
        return true;
    int pivot = -1;
    for (int v : s) {
        if (v < 0 || v >= static_cast<int>(labels_.size()))
            return false;
        if (pivot < 0 || incidence_[static_cast<std::size_t>(v)].size() < incidence_[static_cast<std::size_t>(pivot)].size())
            pivot = v;
    }
    for (int f : incidence_[static_cast<std::size_t>(pivot)]) {
        const auto& facet = facets_[static_cast<std::size_t>(f)];
        if (std::includes(facet.begin(), facet.end(), s.begin(), s.end()))
            return true;
    }
    return false;
}

bool Complex::is_facet(const Simplex& s) const {
    return std::binary_search(facets_.begin(), facets_.end(), s);
}

std::size_t Complex::face_count_upper_bound() const {
    std::size_t total = 0;
    for (const auto& f : facets_) {
        if (f.size() >= 63)
            return static_cast<std::size_t>(-1);
        total += (std::size_t{1} << f.size()) - 1;
    }
    return total;
}

std::vector<std::vector<Simplex>> Complex::simplices_by_dimension(std::size_t cap) const {
    const int top = dimension();
    std::vector<std::set<Simplex>> groups(static_cast<std::size_t>(std::max(top + 1, 0)));
    std::size_t total = 0;
    for (const auto& f : facets_) {
        const std::size_t n = f.size();
        if (n >= 30)
            throw ResourceLimit("facet of dimension " + std::to_string(n - 1) + " is too large to enumerate");
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1U)
                    s.push_back(f[i]);
            const std::size_t d = s.size() - 1;
            if (groups[d].insert(std::move(s)).second && ++total > cap)
                throw ResourceLimit("complex has more than " + std::to_string(cap) + " simplices");
        }
    }
    std::vector<std::vector<Simplex>> out;
    out.reserve(groups.size());
    for (auto& g : groups)
        out.emplace_back(g.begin(), g.end());
    return out;
}

bool Complex::action_is_valid() const {
    if (!action_)
        return true;
    const auto& gen = action_->generator;
    std::vector<char> hit(gen.size(), 0);
    for (int v : gen) {
        if (hit[static_cast<std::size_t>(v)])
            return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < static_cast<int>(gen.size()); ++v)
        if (action_->apply(v, action_->order) != v)
            return false;
    for (const auto& f : facets_)
        if (!is_facet(image_of(f, gen)))
            return false;
    return true;
}

Complex Complex::with_action(GroupAction action) const {
    return from_maximal_facets(labels_, facets_, std::move(action));
}

Complex Complex::without_action() const {
    return from_maximal_facets(labels_, facets_, std::nullopt);
}

// ---------------------------------------------------------------------------

Complex join(const Complex& left, const Complex& right, bool tag) {
    std::vector<std::string> labels;
    labels.reserve(left.vertex_count() + right.vertex_count());
    for (const auto& l : left.labels())
        labels.push_back(tag ? "a." + l : l);
    for (const auto& l : right.labels())
        labels.push_back(tag ? "b." + l : l);
    if (!tag)
        for (const auto& l : right.labels())
            if (left.find_vertex(l))
                throw InvalidArgument("join operands share vertex '" + l + "'; enable tagging");

    const int offset = static_cast<int>(left.vertex_count());
    std::vector<Simplex> facets;
    facets.reserve(left.facets().size() * right.facets().size());
    for (const auto& f : left.facets())
        for (const auto& g : right.facets()) {
            Simplex s = f;
            for (int v : g)
                s.push_back(v + offset);
            facets.push_back(std::move(s));
        }

    std::optional<GroupAction> action;
    if (left.action() && right.action() && left.action()->order == right.action()->order) {
        GroupAction a{left.action()->order, left.action()->generator};
        for (int v : right.action()->generator)
            a.generator.push_back(v + offset);
        action = std::move(a);
    }
    return Complex::from_maximal_facets(std::move(labels), std::move(facets), std::move(action));
}

namespace {

std::string chain_label(const Complex& k, const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += '|';
        out += k.label(s[i]);
    }
    return out + "}";
}

std::size_t factorial_capped(std::size_t n, std::size_t cap) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
        if (f > cap)
            return cap + 1;
    }
    return f;
}

}  // namespace

Subdivision barycentric(const Complex& k, const ComplexLimits& limits) {
    if (k.face_count_upper_bound() > limits.max_vertices) {
        // The bound counts shared faces repeatedly; only refuse on the exact count.
        k.simplices_by_dimension(limits.max_vertices);
    }
    std::size_t flag_count = 0;
    for (const auto& f : k.facets()) {
        flag_count += factorial_capped(f.size(), limits.max_simplices);
        if (flag_count > limits.max_simplices)
            throw ResourceLimit("subdivision would have more than " + std::to_string(limits.max_simplices) + " facets");
    }
    const auto groups = k.simplices_by_dimension(limits.max_vertices);

    Subdivision sd;
    std::map<Simplex, int> index;
    std::vector<std::string> labels;
    for (const auto& group : groups)
        for (const auto& s : group) {
            index.emplace(s, static_cast<int>(sd.origin.size()));
            sd.origin.push_back(s);
            labels.push_back(chain_label(k, s));
        }

    std::vector<Simplex> facets;
    facets.reserve(flag_count);
    for (const auto& f : k.facets()) {
        if (f.empty())
            continue;
        Simplex order = f;
        do {
            Simplex flag;
            Simplex prefix;
            flag.reserve(order.size());
            for (int v : order) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                flag.push_back(index.at(prefix));
            }
            std::sort(flag.begin(), flag.end());
            facets.push_back(std::move(flag));
        } while (std::next_permutation(order.begin(), order.end()));
    }

    std::optional<GroupAction> action;
    if (k.action()) {
        GroupAction a{k.action()->order, {}};
        a.generator.reserve(sd.origin.size());
        for (const auto& s : sd.origin)
            a.generator.push_back(index.at(image_of(s, k.action()->generator)));
        action = std::move(a);
    }
    sd.complex = Complex::from_maximal_facets(std::move(labels), std::move(facets), std::move(action));
    return sd;
}

long long reduced_euler_characteristic(const Complex& k) {
    if (k.is_void())
        return 0;
    long long chi = -1;
    const auto groups = k.simplices_by_dimension();
    for (std::size_t d = 0; d < groups.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(groups[d].size());
    return chi;
}

// ---------------------------------------------------------------------------
// Text format

std::string complex_to_text(const Complex& k) {
    std::ostringstream os;
    os << "# complex vertices=" << k.vertex_count() << " facets=" << k.facets().size();
    if (k.action())
        os << " action=Z/" << k.action()->order;
    os << '\n';
    os << "# vertices:";
    for (const auto& l : k.labels())
        os << ' ' << l;
    os << '\n';
    for (const auto& f : k.facets()) {
        if (f.empty()) {
            os << "-\n";
            continue;
        }
        for (std::size_t i = 0; i < f.size(); ++i)
            os << (i ? " " : "") << k.label(f[i]);
        os << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::string_view> split_top_level(std::string_view body) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '{')
            ++depth;
        else if (body[i] == '}')
            --depth;
        else if (body[i] == '|' && depth == 0) {
            parts.push_back(body.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(body.substr(start));
    return parts;
}

}  // namespace

std::string shift_label(std::string_view label, int q, int p) {
    if (label.size() >= 2 && label.front() == '{' && label.back() == '}') {
        std::string out = "{";
        const auto parts = split_top_level(label.substr(1, label.size() - 2));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i)
                out += '|';
            out += shift_label(parts[i], q, p);
        }
        return out + "}";
    }
    if (label.size() > 2 && (label[0] == 'a' || label[0] == 'b') && label[1] == '.')
        return std::string(label.substr(0, 2)) + shift_label(label.substr(2), q, p);
    const auto colon = label.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("cannot shift label '" + std::string(label) + "'");
    // The ambient size is irrelevant to the label; use the largest position.
    const PartialFn f = PartialFn::parse(1 << 20, label);
    return f.shifted(q, p).label();
}

Complex complex_from_text(std::string_view text, std::optional<int> p) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    auto vertex = [&](const std::string& l) {
        auto [it, inserted] = index.emplace(l, static_cast<int>(labels.size()));
        if (inserted)
            labels.push_back(l);
        return it->second;
    };
    std::vector<Simplex> facets;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.rfind("# vertices:", 0) == 0) {
            std::istringstream vs(line.substr(11));
            std::string l;
            while (vs >> l)
                vertex(l);
            continue;
        }
        if (line.empty() || line[0] == '#')
            continue;
        if (line == "-") {
            facets.push_back({});
            continue;
        }
        std::istringstream ls(line);
        Simplex f;
        std::string l;
        while (ls >> l)
            f.push_back(vertex(l));
        facets.push_back(std::move(f));
    }
    std::optional<GroupAction> action;
    if (p) {
        if (*p < 1)
            throw InvalidArgument("action order must be positive");
        GroupAction a{*p, {}};
        for (const auto& l : labels) {
            const auto it = index.find(shift_label(l, 1, *p));
            if (it == index.end())
                throw ParseError("vertex set is not closed under the Z/" + std::to_string(*p) + " shift: '" + l + "'");
            a.generator.push_back(it->second);
        }
        action = std::move(a);
    }
    return Complex(std::move(labels), std::move(facets), std::move(action));
}

}  // namespace subchi
