#include "subchi/harness.hpp"

#include <cmath>
#include <sstream>

#include "subchi/errors.hpp"
#include "subchi/partial_complexes.hpp"
#include "subchi/submeasure_io.hpp"

namespace subchi {

using nlohmann::json;

Rational constant_C_cubed(const Rational& mu_x, const Rational& epsilon) {
    if (epsilon <= 0)
        throw InvalidArgument("epsilon must be positive");
    return mu_x * mu_x / (16 * epsilon);
}

namespace {

std::optional<BigInt> integer_cube_root(const BigInt& v) {
    if (v < 0)
        return std::nullopt;
    BigInt lo = 0;
    BigInt hi = 1;
    while (hi * hi * hi < v)
        hi *= 2;
    while (lo < hi) {
        const BigInt mid = (lo + hi) / 2;
        if (mid * mid * mid < v)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo * lo * lo != v)
        return std::nullopt;
    return lo;
}

std::string str(const Rational& q) { return to_string(q); }

Anchor anchor(std::string name, const Rational& lhs, std::string relation, const Rational& rhs) {
    bool pass = false;
    if (relation == "<")
        pass = lhs < rhs;
    else if (relation == "<=")
        pass = lhs <= rhs;
    else if (relation == ">")
        pass = lhs > rhs;
    else if (relation == ">=")
        pass = lhs >= rhs;
    else if (relation == "=")
        pass = lhs == rhs;
    else
        throw InvalidArgument("unknown relation " + relation);
    return Anchor{std::move(name), str(lhs), std::move(relation), str(rhs), pass};
}

}  // namespace

std::optional<Rational> exact_cube_root(const Rational& cube) {
    if (cube < 0) {
        auto r = exact_cube_root(-cube);
        if (r)
            return -*r;
        return std::nullopt;
    }
    const auto num = integer_cube_root(boost::multiprecision::numerator(cube));
    const auto den = integer_cube_root(boost::multiprecision::denominator(cube));
    if (!num || !den)
        return std::nullopt;
    return Rational(*num, *den);
}

Cover k_eps_cover(const FiniteSubmeasure& mu, const Rational& epsilon, int d) {
    if (d < 1)
        throw InvalidArgument("d must be at least 1");
    if (epsilon <= 0)
        throw InvalidArgument("epsilon must be positive");
    return covering_number(mu, epsilon / (4 * d));
}

int k_eps(const FiniteSubmeasure& mu, const Rational& epsilon, int d) {
    return k_eps_cover(mu, epsilon, d).k;
}

namespace {

// max{d >= 1 : accept(k(d))}, scanning upward while k stays feasible.
template <typename Accept>
int scan_inverse(const FiniteSubmeasure& mu, const Rational& epsilon, Accept accept) {
    constexpr int kMaxScan = 1'000'000;
    int best = 0;
    for (int d = 1; d <= kMaxScan; ++d) {
        int k = 0;
        try {
            k = k_eps(mu, epsilon, d);
        } catch (const Infeasible&) {
            return best;
        }
        if (!accept(k))
            return best;
        best = d;
    }
    throw ResourceLimit("F scan exceeded " + std::to_string(kMaxScan) + " steps");
}

}  // namespace

int F_eps(const FiniteSubmeasure& mu, const Rational& epsilon, const Rational& m) {
    return scan_inverse(mu, epsilon, [&](int k) { return Rational(k) <= m; });
}

int F_bound(const FiniteSubmeasure& mu, const Rational& epsilon, int n) {
    if (n < 1)
        throw InvalidArgument("n must be at least 1");
    const Rational target = constant_C_cubed(mu.total(), epsilon) * n;
    return scan_inverse(mu, epsilon, [&](int k) {
        const Rational kk(k);
        return kk * kk * kk <= target;
    });
}

long long choose_prime(long long k, long long d) {
    if (k < 1 || d < 1)
        throw InvalidArgument("choose_prime needs k >= 1 and d >= 1");
    const long long lo = k * (d + 1);
    for (long long p = lo + 1; p < 2 * lo; ++p)
        if (is_prime(p))
            return p;
    throw InvalidArgument("degenerate: no prime in (" + std::to_string(lo) + ", " + std::to_string(2 * lo) + ")");
}

PnResult build_P_n(const FiniteSubmeasure& mu, const Rational& epsilon, int n) {
    if (n < 1)
        throw InvalidArgument("n must be at least 1");
    const auto universe = static_cast<std::size_t>(mu.atom_count());
    PnResult out;
    out.F_bound = F_bound(mu, epsilon, n);
    for (int d = 1; d <= out.F_bound; ++d)
        out.q_partitions.push_back(disjointify(universe, k_eps_cover(mu, epsilon, d).sets));
    const Partition base = out.q_partitions.empty() ? Partition::whole(universe) : common_refinement(out.q_partitions);

    const Rational threshold = Rational(1) / n;
    std::vector<AtomSet> blocks;
    for (const auto& block : base.blocks()) {
        AtomSet chunk(universe);
        for (int a : block.atoms()) {
            AtomSet candidate = chunk;
            candidate.insert(a);
            if (mu.eval(candidate) < threshold) {
                chunk = std::move(candidate);
                continue;
            }
            if (mu.atom_value(a) >= threshold)
                throw Infeasible("atom " + std::to_string(a) + " has submeasure " + to_string(mu.atom_value(a)) +
                                 " >= 1/" + std::to_string(n));
            blocks.push_back(std::move(chunk));
            chunk = AtomSet(universe);
            chunk.insert(a);
        }
        blocks.push_back(std::move(chunk));
    }
    out.partition = Partition(universe, std::move(blocks));
    return out;
}

TheoremInstance derive_instance(const FiniteSubmeasure& mu, const Rational& epsilon, int n, int d,
                                const PnResult& pn) {
    if (d < 1)
        throw InvalidArgument("the color budget d must be at least 1");
    TheoremInstance inst;
    inst.mu_x = mu.total();
    inst.epsilon = epsilon;
    inst.n = n;
    inst.d = d;
    inst.C_cubed = constant_C_cubed(inst.mu_x, epsilon);
    inst.F_bound = pn.F_bound;
    inst.k_n = static_cast<int>(pn.partition.size());
    for (const auto& block : pn.partition.blocks())
        inst.max_block = std::max(inst.max_block, mu.eval(block));
    if (inst.F_bound >= 1)
        inst.k_at_bound = k_eps(mu, epsilon, inst.F_bound);
    try {
        inst.k_next = k_eps(mu, epsilon, inst.F_bound + 1);
    } catch (const Infeasible&) {
    }

    const Cover cover = k_eps_cover(mu, epsilon, d);
    inst.k = cover.k;
    inst.p = choose_prime(inst.k, d);
    inst.l = static_cast<long long>(d) * inst.p;
    inst.l_n = inst.k_n - inst.l - 1;
    const Partition q = d <= static_cast<int>(pn.q_partitions.size())
                            ? pn.q_partitions[static_cast<std::size_t>(d - 1)]
                            : disjointify(static_cast<std::size_t>(mu.atom_count()), cover.sets);
    inst.refines_Q_d = pn.partition.refines(q);
    return inst;
}

std::vector<Anchor> verify_inequality_chain(const TheoremInstance& inst) {
    if (inst.d < 1)
        throw InvalidArgument("the color budget d must be at least 1");
    const Rational eps = inst.epsilon;
    const Rational mx = inst.mu_x;
    const Rational d(inst.d);
    const Rational k(inst.k);
    const Rational p(inst.p);
    const Rational l(inst.l);
    const Rational n(inst.n);
    const Rational target = inst.C_cubed * n;
    // Mass of l+1 blocks of P_n, the bound used for each of the six
    // "differ at most at l+1 points" steps.
    const Rational spread = (l + 1) * inst.max_block;

    std::vector<Anchor> out;
    out.push_back(anchor("increasing", k, ">=", d * mx * 4 / eps));
    if (inst.F_bound >= 1) {
        const Rational kb(*inst.k_at_bound);
        out.push_back(anchor("inverse.lower", kb * kb * kb, "<=", target));
    } else {
        out.push_back(Anchor{"inverse.lower", "F_bound=0", "=", "vacuous", true});
    }
    if (inst.k_next) {
        const Rational kn(*inst.k_next);
        out.push_back(anchor("inverse.upper", kn * kn * kn, ">", target));
    } else {
        out.push_back(Anchor{"inverse.upper", "inf", ">", str(target), true});
    }
    out.push_back(anchor("eqq0.lower", k * (d + 1), "<", p));
    out.push_back(anchor("eqq0.upper", p, "<", 2 * k * (d + 1)));
    out.push_back(anchor("eqq1", (p - k) * (d + 1), ">", d * p));
    out.push_back(anchor("claim", (l + 1) / n, "<", eps / 8));
    out.push_back(anchor("eq:k", 4 * d / eps * mx, "<=", k));
    out.push_back(anchor("eq:epsilon.a", d + 1, "<=", 4 * d));
    out.push_back(anchor("eq:epsilon.b", 4 * d, "<=", eps / mx * k));
    out.push_back(Anchor{"refines", "P_n", "refines", "Q_" + std::to_string(inst.d), inst.refines_Q_d});
    out.push_back(anchor("borsuk_ulam", l + 1, ">", d * (p - 1)));
    out.push_back(anchor("pigeonhole", (p - k + 1) * (d + 1), ">", l + 1));
    out.push_back(anchor("preimage", d * (eps / (4 * d)), "=", eps / 4));
    out.push_back(anchor("one", spread, "<=", eps / 8));
    out.push_back(anchor("two", spread, "<=", eps / 8));
    out.push_back(anchor("arithmetic", eps / 4 + 2 * spread, "<=", eps / 2));
    out.push_back(anchor("contradiction", eps / 4 + 6 * spread, "<", eps));
    return out;
}

TheoremReport theorem_check(const SubmeasureFamily& family, int resolution, const Rational& epsilon, int n,
                            int modulus, int box, const TheoremOptions& options) {
    if (resolution < 1)
        throw InvalidArgument("resolution must be positive");
    TheoremReport report;
    report.family = family.describe();
    report.resolution = resolution;
    report.box = box;
    report.modulus = modulus;
    const FiniteSubmeasure mu = family.at(resolution);
    const PnResult pn = build_P_n(mu, epsilon, n);
    report.partition = pn.partition;

    const int d = options.d ? *options.d : (pn.F_bound >= 2 ? pn.F_bound - 1 : 1);
    try {
        report.instance = derive_instance(mu, epsilon, n, d, pn);
        report.anchors = verify_inequality_chain(report.instance);
        report.chain_available = true;
        report.chain_note = report.instance.in_regime() ? "d < F_bound: every anchor must hold"
                                                        : "d >= F_bound: anchors are informational";
    } catch (const Infeasible& e) {
        TheoremInstance& inst = report.instance;
        inst.mu_x = mu.total();
        inst.epsilon = epsilon;
        inst.n = n;
        inst.d = d;
        inst.C_cubed = constant_C_cubed(inst.mu_x, epsilon);
        inst.F_bound = pn.F_bound;
        inst.k_n = static_cast<int>(pn.partition.size());
        report.chain_note = std::string("k(d) infeasible at this resolution: ") + e.what();
    }

    const GammaSpec spec(mu, pn.partition, epsilon);
    const FiniteGraph upper_graph = quotient_graph(spec, modulus, options.graph_limits);
    const FiniteGraph lower_graph = box_subgraph(spec, box, options.graph_limits);
    const auto upper = chromatic_number(upper_graph.graph, ChromaticMode::Exact, options.solver_limits);
    const auto lower = chromatic_number(lower_graph.graph, ChromaticMode::Exact, options.solver_limits);
    if (upper.status == ChromaticResult::Status::Uncolorable) {
        report.uncolorable = true;
        report.verdict = "vacuous";
    } else {
        report.chi_upper = upper.value();
        report.verdict = pn.F_bound <= *report.chi_upper ? "pass" : "fail";
    }
    if (lower.status != ChromaticResult::Status::Uncolorable)
        report.chi_lower = lower.value();

    if (report.chain_available && report.instance.in_regime())
        for (const auto& a : report.anchors)
            if (!a.pass)
                report.verdict = "fail";
    return report;
}

json anchors_to_json(const std::vector<Anchor>& anchors) {
    json out = json::array();
    for (const auto& a : anchors)
        out.push_back({{"name", a.name}, {"lhs", a.lhs}, {"relation", a.relation}, {"rhs", a.rhs}, {"pass", a.pass}});
    return out;
}

json instance_to_json(const TheoremInstance& inst) {
    json c;
    c["mu_X"] = to_string(inst.mu_x);
    c["epsilon"] = to_string(inst.epsilon);
    c["n"] = inst.n;
    c["C_cubed"] = to_string(inst.C_cubed);
    const auto root = exact_cube_root(inst.C_cubed);
    c["C"] = root ? json(to_string(*root)) : json(nullptr);
    c["C_approx"] = std::cbrt(to_double(inst.C_cubed));
    c["F_bound"] = inst.F_bound;
    c["d"] = inst.d;
    c["k"] = inst.k;
    c["p"] = inst.p;
    c["l"] = inst.l;
    c["k_n"] = inst.k_n;
    c["l_n"] = inst.l_n;
    c["max_block"] = to_string(inst.max_block);
    c["in_regime"] = inst.in_regime();
    return c;
}

json theorem_report_to_json(const TheoremReport& r) {
    json out;
    out["family"] = r.family;
    out["resolution"] = r.resolution;
    out["constants"] = instance_to_json(r.instance);
    if (!r.chain_available)
        for (const char* key : {"k", "p", "l", "l_n", "max_block"})
            out["constants"][key] = nullptr;
    out["partition"] = partition_to_json(r.partition);
    out["anchors"] = anchors_to_json(r.anchors);
    out["chain_note"] = r.chain_note;
    out["box"] = r.box;
    out["quotient"] = r.modulus;
    out["chi_lower"] = r.chi_lower ? json(*r.chi_lower) : json(nullptr);
    out["chi_upper"] = r.chi_upper ? json(*r.chi_upper) : json(nullptr);
    out["uncolorable"] = r.uncolorable;
    out["F_bound"] = r.instance.F_bound;
    out["verdict"] = r.verdict;
    return out;
}

std::string theorem_report_to_text(const TheoremReport& r) {
    std::ostringstream os;
    const auto& inst = r.instance;
    os << "family " << r.family << " at resolution " << r.resolution << '\n';
    os << "mu(X) = " << to_string(inst.mu_x) << ", eps = " << to_string(inst.epsilon) << ", n = " << inst.n << '\n';
    os << "C^3 = " << to_string(inst.C_cubed) << ", F_bound = " << inst.F_bound << '\n';
    os << "P_n: " << r.partition.size() << " blocks\n";
    if (r.chain_available) {
        os << "d = " << inst.d << ", k = " << inst.k << ", p = " << inst.p << ", l = " << inst.l
           << ", l_n = " << inst.l_n << '\n';
    }
    os << r.chain_note << '\n';
    for (const auto& a : r.anchors)
        os << "  " << (a.pass ? "pass" : "FAIL") << "  " << a.name << ": " << a.lhs << ' ' << a.relation << ' '
           << a.rhs << '\n';
    os << "chi(box " << r.box << ") = " << (r.chi_lower ? std::to_string(*r.chi_lower) : "uncolorable") << '\n';
    os << "chi(quotient " << r.modulus << ") = " << (r.chi_upper ? std::to_string(*r.chi_upper) : "uncolorable")
       << '\n';
    os << "verdict: " << r.verdict << '\n';
    return os.str();
}

}  // namespace subchi
