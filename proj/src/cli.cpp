#include "subchi/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "subchi/coloring.hpp"
#include "subchi/complex.hpp"
#include "subchi/errors.hpp"
#include "subchi/gamma.hpp"
#include "subchi/harness.hpp"
#include "subchi/homology.hpp"
#include "subchi/partial_complexes.hpp"
#include "subchi/simplicial_map.hpp"
#include "subchi/submeasure_io.hpp"

namespace subchi::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error("usage", what) {}
};

class VerificationFailure : public Error {
public:
    VerificationFailure(std::string kind, const std::string& what) : Error(std::move(kind), what) {}
};

struct Options {
    std::string format = "text";
    std::uint64_t seed = 1;
    std::size_t resource_cap = 0;

    // submeasure sources
    std::string file;
    std::string spec;
    int blocks = 0;
    std::string partition;
    std::string eps;
    std::string delta;
    std::uint64_t samples = 200000;

    // gamma
    int box = 0;
    int quotient = 0;
    std::string mode = "exact";
    std::string coarse;
    std::string fine;
    std::uint64_t node_limit = SolverLimits{}.node_limit;

    // complexes
    int n = 0;
    int l = -1;
    int p = 0;
    int l_plus_1 = 0;
    int l_n = 0;
    int times = 1;
    std::string left;
    std::string right;
    bool no_tag = false;
    std::string chain;
    std::string map = "s";
    int action = 0;

    // homology
    std::string source;
    int up_to = -1;
    int prime = 0;
    int dump_boundary = -1;

    // harness
    std::string family = "uniform";
    std::string cap = "1/2";
    int resolution = 0;
    std::string mu_x;
    int d = 0;
    int d_max = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Rational need_rational(const std::string& text, const char* flag) {
    if (text.empty())
        throw UsageError(std::string("missing ") + flag);
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f)
            return;
    std::string list;
    for (const char* f : allowed)
        list += std::string(list.empty() ? "" : "|") + f;
    throw UsageError("--format " + o.format + " is not supported here (use " + list + ")");
}

ComplexLimits complex_limits(const Options& o) {
    ComplexLimits lim;
    if (o.resource_cap) {
        lim.max_vertices = o.resource_cap;
        lim.max_simplices = 5 * o.resource_cap;
    }
    return lim;
}

GraphLimits graph_limits(const Options& o) {
    GraphLimits lim;
    if (o.resource_cap)
        lim.max_vertices = o.resource_cap;
    return lim;
}

FiniteSubmeasure load_submeasure(const Options& o) {
    if (!o.file.empty() && !o.spec.empty())
        throw UsageError("give either --file or --spec");
    if (!o.file.empty())
        return parse_submeasure(read_file(o.file));
    if (!o.spec.empty())
        return parse_submeasure(o.spec);
    if (o.blocks > 0)
        return FiniteSubmeasure::uniform(o.blocks, Rational(1) / o.blocks);
    throw UsageError("no submeasure given (use --file, --spec or --blocks)");
}

Partition load_partition(const std::string& text, std::size_t universe) {
    if (text.empty())
        return Partition::singletons(universe);
    if (!text.empty() && text.front() == '@')
        return parse_partition(universe, read_file(text.substr(1)));
    return parse_partition(universe, text);
}

std::string atoms_to_string(const AtomSet& s) { return s.to_string(); }

// ---------------------------------------------------------------------------
// submeasure

int submeasure_verify(const Options& o, std::ostream& out) {
    check_format(o, {"text", "json"});
    const auto mu = load_submeasure(o);
    AxiomCheckOptions opts;
    opts.seed = o.seed;
    opts.samples = o.samples;
    const auto r = verify_axioms(mu, opts);
    if (o.format == "json") {
        json j{{"ok", r.ok}, {"exhaustive", r.exhaustive}, {"checks", r.checks}};
        if (!r.ok)
            j["counterexample"] = {{"axiom", r.axiom}, {"A", r.a.atoms()}, {"B", r.b.atoms()}};
        out << j.dump(2) << '\n';
    } else if (r.ok) {
        out << "ok (" << (r.exhaustive ? "exhaustive" : "sampled") << ", " << r.checks << " checks)\n";
    } else {
        out << "counterexample " << r.axiom << ": A=" << atoms_to_string(r.a) << " B=" << atoms_to_string(r.b)
            << '\n';
    }
    return r.ok ? kOk : kVerificationFailure;
}

int submeasure_cover(const Options& o, std::ostream& out) {
    check_format(o, {"text", "json", "csv"});
    const auto mu = load_submeasure(o);
    const Rational delta = need_rational(o.delta, "--delta");
    Cover c;
    try {
        c = covering_number(mu, delta);
    } catch (const Infeasible& e) {
        throw VerificationFailure("infeasible", e.what());
    }
    if (o.format == "json") {
        json sets = json::array();
        for (const auto& s : c.sets)
            sets.push_back(s.atoms());
        out << json{{"k", c.k}, {"delta", to_string(delta)}, {"cover", sets}}.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "set,atom\n";
        for (std::size_t i = 0; i < c.sets.size(); ++i)
            for (int a : c.sets[i].atoms())
                out << i << ',' << a << '\n';
    } else {
        out << "k = " << c.k << '\n';
        for (const auto& s : c.sets)
            out << "  " << s.to_string() << " mu=" << to_string(mu.eval(s)) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// gamma

GammaSpec load_gamma(const Options& o) {
    auto mu = load_submeasure(o);
    auto part = load_partition(o.partition, static_cast<std::size_t>(mu.atom_count()));
    return GammaSpec(std::move(mu), std::move(part), need_rational(o.eps, "--eps"));
}

FiniteGraph materialize(const GammaSpec& spec, const Options& o) {
    if ((o.box > 0) == (o.quotient > 0))
        throw UsageError("give exactly one of --box or --quotient");
    return o.box > 0 ? box_subgraph(spec, o.box, graph_limits(o)) : quotient_graph(spec, o.quotient, graph_limits(o));
}

int gamma_build(const Options& o, std::ostream& out) {
    check_format(o, {"text", "dot", "json", "csv"});
    const auto g = materialize(load_gamma(o), o);
    if (o.format == "dot") {
        out << to_dot(g);
    } else if (o.format == "json") {
        json vs = json::array();
        for (const auto& v : g.vertices)
            vs.push_back(point_label(v));
        json es = json::array();
        for (int v = 0; v < g.graph.size(); ++v)
            if (g.graph.has_loop(v))
                es.push_back({point_label(g.vertices[static_cast<std::size_t>(v)]),
                              point_label(g.vertices[static_cast<std::size_t>(v)])});
        for (const auto& [u, v] : g.graph.edges())
            es.push_back({point_label(g.vertices[static_cast<std::size_t>(u)]),
                          point_label(g.vertices[static_cast<std::size_t>(v)])});
        out << json{{"graph", g.describe()}, {"vertices", vs}, {"edges", es}, {"uncolorable", g.uncolorable()}}.dump(2)
            << '\n';
    } else {
        out << to_edge_list(g);
    }
    return kOk;
}

int gamma_chi(const Options& o, std::ostream& out) {
    check_format(o, {"text", "json", "csv"});
    if (o.mode != "exact" && o.mode != "bounds")
        throw UsageError("--mode must be exact or bounds");
    const auto g = materialize(load_gamma(o), o);
    const auto r = chromatic_number(g.graph, o.mode == "exact" ? ChromaticMode::Exact : ChromaticMode::Bounds,
                                    SolverLimits{o.node_limit});
    const bool uncolorable = r.status == ChromaticResult::Status::Uncolorable;
    if (o.format == "json") {
        json j{{"graph", g.describe()}, {"status", to_string(r.status)}};
        if (!uncolorable) {
            j["lower"] = r.lower;
            j["upper"] = r.upper;
            json colors = json::object();
            for (std::size_t v = 0; v < r.coloring.size(); ++v)
                colors[point_label(g.vertices[v])] = r.coloring[v];
            j["coloring"] = colors;
        }
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        if (!uncolorable)
            out << coloring_csv(g, r.coloring);
    } else if (uncolorable) {
        out << "uncolorable\n";
    } else if (r.status == ChromaticResult::Status::Exact) {
        out << r.lower << '\n';
    } else {
        out << r.lower << ' ' << r.upper << '\n';
    }
    if (uncolorable)
        throw VerificationFailure("uncolorable", g.describe() + " has loops");
    return kOk;
}

int gamma_refine_check(const Options& o, std::ostream& out) {
    check_format(o, {"text", "json"});
    const auto mu = load_submeasure(o);
    const Rational eps = need_rational(o.eps, "--eps");
    const auto universe = static_cast<std::size_t>(mu.atom_count());
    const GammaSpec coarse(mu, load_partition(o.coarse, universe), eps);
    const GammaSpec fine(mu, load_partition(o.fine, universe), eps);
    const int box = o.box > 0 ? o.box : 3;
    const auto r = diagonal_refinement_hom(coarse, fine, box);
    if (o.format == "json") {
        json j{{"ok", r.ok}, {"pairs_checked", r.pairs_checked}, {"edges_checked", r.edges_checked}};
        if (r.counterexample)
            j["counterexample"] = {point_label(r.counterexample->first), point_label(r.counterexample->second)};
        out << j.dump(2) << '\n';
    } else if (r.ok) {
        out << "ok (" << r.edges_checked << " edges checked)\n";
    } else {
        out << "counterexample " << point_label(r.counterexample->first) << " -- "
            << point_label(r.counterexample->second) << '\n';
    }
    return r.ok ? kOk : kVerificationFailure;
}

// ---------------------------------------------------------------------------
// complexes

json complex_to_json(const Complex& k) {
    json facets = json::array();
    for (const auto& f : k.facets()) {
        json labels = json::array();
        for (int v : f)
            labels.push_back(k.label(v));
        facets.push_back(labels);
    }
    json j{{"vertices", k.labels()}, {"facets", facets}, {"dimension", k.dimension()}};
    j["action_order"] = k.action() ? json(k.action()->order) : json(nullptr);
    return j;
}

int print_complex(const Complex& k, const Options& o, std::ostream& out) {
    check_format(o, {"text", "json"});
    if (o.format == "json")
        out << complex_to_json(k).dump(2) << '\n';
    else
        out << complex_to_text(k);
    return kOk;
}

std::optional<int> action_order(const Options& o) {
    if (o.action > 0)
        return o.action;
    return std::nullopt;
}

Complex load_complex_file(const std::string& path, const Options& o) {
    return complex_from_text(read_file(path), action_order(o));
}

int complex_build_k(const Options& o, std::ostream& out) {
    return print_complex(*build_K(o.n, o.l, o.p, complex_limits(o)).complex, o, out);
}

int complex_build_s(const Options& o, std::ostream& out) {
    return print_complex(*build_S(o.l_plus_1, o.p, complex_limits(o)).complex, o, out);
}

int complex_join(const Options& o, std::ostream& out) {
    if (o.left.empty() || o.right.empty())
        throw UsageError("join needs --left and --right");
    return print_complex(join(load_complex_file(o.left, o), load_complex_file(o.right, o), !o.no_tag), o, out);
}

int complex_sd(const Options& o, std::ostream& out) {
    if (o.file.empty())
        throw UsageError("sd needs --file");
    Complex k = load_complex_file(o.file, o);
    for (int i = 0; i < o.times; ++i)
        k = barycentric(k, complex_limits(o)).complex;
    return print_complex(k, o, out);
}

std::vector<PartialFn> parse_chain(const std::string& text, int n) {
    std::vector<PartialFn> chain;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!item.empty())
            chain.push_back(PartialFn::parse(n, item));
    return chain;
}

int complex_map_s(const Options& o, std::ostream& out) {
    check_format(o, {"text", "json"});
    if (o.chain.empty())
        throw UsageError("map-s needs --chain \"dom:values;dom:values;...\"");
    const auto image = map_s(parse_chain(o.chain, o.n), o.n, o.l, o.p);
    if (o.format == "json")
        out << json{{"image", image.label()}, {"n", o.n + 1}}.dump(2) << '\n';
    else
        out << image.label() << '\n';
    return kOk;
}

int complex_verify(const Options& o, std::ostream& out) {
    check_format(o, {"text", "json"});
    SimplicialMap f;
    int p = o.p;
    std::string what;
    try {
        if (o.map == "s") {
            f = lemma_map(o.n, o.l, o.p, complex_limits(o)).map;
            what = "s: sd(K^{" + std::to_string(o.n) + "," + std::to_string(o.l) + "}_" + std::to_string(o.p) + ")";
        } else if (o.map == "inclusion") {
            f = inclusion_map(o.l, o.p, complex_limits(o));
            what = "i: S^" + std::to_string(o.l + 1) + "_" + std::to_string(o.p);
        } else if (o.map == "tower") {
            f = compose_tower(o.l, o.p, o.l_n, complex_limits(o));
            what = "tower(" + std::to_string(o.l) + "," + std::to_string(o.p) + "," + std::to_string(o.l_n) + ")";
        } else if (o.map == "identity") {
            if (o.file.empty())
                throw UsageError("--map identity needs --file");
            auto k = std::make_shared<const Complex>(load_complex_file(o.file, o));
            p = k->action() ? k->action()->order : 0;
            f = identity_map(k);
            what = "identity";
        } else {
            throw UsageError("--map must be s, inclusion, tower or identity");
        }
    } catch (const NotSimplicial& e) {
        if (o.format == "json")
            out << json{{"map", o.map}, {"simplicial", false}, {"equivariant", nullptr}, {"detail", e.what()}}.dump(2)
                << '\n';
        else
            out << "counterexample (construction): " << e.what() << '\n';
        return kVerificationFailure;
    }

    const auto simp = verify_simplicial(f);
    std::optional<EquivarianceReport> eq;
    if (p > 0 && f.source->action() && f.target->action())
        eq = verify_equivariant(f, p);
    const bool ok = simp.ok && (!eq || eq->ok);

    if (o.format == "json") {
        json j{{"map", what}, {"simplicial", simp.ok}, {"facets_checked", simp.facets_checked}};
        if (!simp.ok)
            j["counterexample"] = {{"facet", describe_simplex(*f.source, *simp.counterexample)},
                                   {"image", describe_simplex(*f.target, *simp.image)}};
        j["equivariant"] = eq ? json(eq->ok) : json(nullptr);
        if (eq && !eq->ok)
            j["equivariance_counterexample"] = {{"vertex", f.source->label(*eq->vertex)}, {"q", *eq->shift}};
        j["ok"] = ok;
        out << j.dump(2) << '\n';
    } else if (ok) {
        out << "ok\n";
    } else {
        if (!simp.ok)
            out << "counterexample simplicial: " << describe_simplex(*f.source, *simp.counterexample) << " -> "
                << describe_simplex(*f.target, *simp.image) << '\n';
        if (eq && !eq->ok)
            out << "counterexample equivariant: vertex " << f.source->label(*eq->vertex) << ", q = " << *eq->shift
                << '\n';
    }
    return ok ? kOk : kVerificationFailure;
}

// ---------------------------------------------------------------------------
// homology

Complex load_homology_source(const Options& o) {
    if (!o.file.empty())
        return load_complex_file(o.file, o);
    if (o.source == "S")
        return *build_S(o.l_plus_1, o.p, complex_limits(o)).complex;
    if (o.source == "K")
        return *build_K(o.n, o.l, o.p, complex_limits(o)).complex;
    throw UsageError("give --file, or --source S (with --l-plus-1, --p) or --source K (with --n, --l, --p)");
}

std::optional<int> coefficient_prime(const Options& o) {
    if (o.prime == 0)
        return std::nullopt;
    if (!is_prime(o.prime))
        throw UsageError("--prime must be prime");
    return o.prime;
}

int homology_betti(const Options& o, std::ostream& out) {
    check_format(o, {"text", "csv", "json"});
    const Complex k = load_homology_source(o);
    const auto data = boundary_matrices(k, complex_limits(o).max_simplices);
    if (o.dump_boundary >= 0) {
        if (o.dump_boundary >= static_cast<int>(data.boundary.size()))
            throw UsageError("no boundary matrix in dimension " + std::to_string(o.dump_boundary));
        out << matrix_coordinates(data.boundary[static_cast<std::size_t>(o.dump_boundary)]);
        return kOk;
    }
    const int up_to = o.up_to >= 0 ? o.up_to : std::max(k.dimension(), 0);
    const auto betti = reduced_betti(data, up_to, coefficient_prime(o));
    if (o.format == "csv") {
        out << betti_csv(betti);
    } else if (o.format == "json") {
        out << json{{"reduced_betti", betti},
                    {"coefficients", o.prime ? "Z/" + std::to_string(o.prime) : std::string("Q")},
                    {"boundary_squares_to_zero", boundary_squares_to_zero(data)}}
                   .dump(2)
            << '\n';
    } else {
        for (std::size_t d = 0; d < betti.size(); ++d)
            out << "b~" << d << " = " << betti[d] << '\n';
    }
    return kOk;
}

int homology_connectivity(const Options& o, std::ostream& out) {
    check_format(o, {"text", "json"});
    if (o.up_to < 0)
        throw UsageError("connectivity needs --up-to L (the claimed connectivity)");
    const Complex k = load_homology_source(o);
    const auto r = check_connectivity_necessary(k, o.up_to, coefficient_prime(o));
    if (o.format == "json") {
        json j{{"ok", r.ok}, {"reduced_betti", r.betti}, {"check", "necessary condition (homology only)"}};
        j["failing_dimension"] = r.failing_dimension ? json(*r.failing_dimension) : json(nullptr);
        out << j.dump(2) << '\n';
    } else if (r.ok) {
        out << "ok (necessary condition: b~0..b~" << o.up_to << " vanish)\n";
    } else {
        out << "fails at dimension " << *r.failing_dimension << " (b~" << *r.failing_dimension << " = "
            << r.betti[static_cast<std::size_t>(*r.failing_dimension)] << ")\n";
    }
    return r.ok ? kOk : kVerificationFailure;
}

// ---------------------------------------------------------------------------
// harness

SubmeasureFamily load_family(const Options& o) {
    if (o.family == "uniform")
        return SubmeasureFamily::uniform();
    if (o.family == "capped")
        return SubmeasureFamily::capped(need_rational(o.cap, "--cap"));
    throw UsageError("--family must be uniform or capped");
}

int need_positive(int v, const char* flag) {
    if (v < 1)
        throw UsageError(std::string("missing or nonpositive ") + flag);
    return v;
}

int harness_constants(const Options& o, std::ostream& out) {
    check_format(o, {"text", "json"});
    const Rational eps = need_rational(o.eps, "--eps");
    json j;
    Rational mu_x;
    std::optional<FiniteSubmeasure> mu;
    if (o.resolution > 0) {
        mu = load_family(o).at(o.resolution);
        mu_x = mu->total();
    } else {
        mu_x = need_rational(o.mu_x, "--mu-x");
    }
    const Rational c3 = constant_C_cubed(mu_x, eps);
    const auto root = exact_cube_root(c3);
    j["mu_X"] = to_string(mu_x);
    j["epsilon"] = to_string(eps);
    j["C_cubed"] = to_string(c3);
    j["C"] = root ? json(to_string(*root)) : json(nullptr);
    if (mu) {
        json ks = json::array();
        const int d_max = o.d_max > 0 ? o.d_max : 8;
        for (int d = 1; d <= d_max; ++d) {
            try {
                ks.push_back({{"d", d}, {"k", k_eps(*mu, eps, d)}});
            } catch (const Infeasible&) {
                ks.push_back({{"d", d}, {"k", nullptr}});
            }
        }
        j["k_eps"] = ks;
        if (o.n > 0)
            j["F_bound"] = F_bound(*mu, eps, o.n);
    }
    if (o.format == "json") {
        out << j.dump(2) << '\n';
    } else {
        out << "mu(X) = " << to_string(mu_x) << "\neps = " << to_string(eps) << "\nC^3 = " << to_string(c3) << '\n';
        out << "C = " << (root ? to_string(*root) : "cbrt(" + to_string(c3) + ")") << '\n';
        if (j.contains("k_eps"))
            for (const auto& e : j["k_eps"])
                out << "k(" << e["d"].get<int>() << ") = " << (e["k"].is_null() ? "infeasible" : e["k"].dump())
                    << '\n';
        if (j.contains("F_bound"))
            out << "F_bound(n=" << o.n << ") = " << j["F_bound"].get<int>() << '\n';
    }
    return kOk;
}

int harness_inequalities(const Options& o, std::ostream& out) {
    check_format(o, {"text", "json", "csv"});
    const Rational eps = need_rational(o.eps, "--eps");
    const auto mu = load_family(o).at(need_positive(o.resolution, "--resolution"));
    const int n = need_positive(o.n, "--n");
    const auto pn = build_P_n(mu, eps, n);
    const int d = o.d > 0 ? o.d : (pn.F_bound >= 2 ? pn.F_bound - 1 : 1);
    const auto inst = derive_instance(mu, eps, n, d, pn);
    const auto anchors = verify_inequality_chain(inst);
    bool all = true;
    for (const auto& a : anchors)
        all = all && a.pass;
    if (o.format == "json") {
        out << json{{"constants", instance_to_json(inst)}, {"anchors", anchors_to_json(anchors)}, {"all_pass", all}}
                   .dump(2)
            << '\n';
    } else if (o.format == "csv") {
        out << "name,lhs,relation,rhs,pass\n";
        for (const auto& a : anchors)
            out << a.name << ',' << a.lhs << ',' << a.relation << ',' << a.rhs << ',' << (a.pass ? 1 : 0) << '\n';
    } else {
        out << "d = " << inst.d << ", k = " << inst.k << ", p = " << inst.p << ", l = " << inst.l
            << ", F_bound = " << inst.F_bound << (inst.in_regime() ? " (d < F_bound)" : " (d >= F_bound)") << '\n';
        for (const auto& a : anchors)
            out << (a.pass ? "pass" : "FAIL") << "  " << a.name << ": " << a.lhs << ' ' << a.relation << ' ' << a.rhs
                << '\n';
    }
    return all ? kOk : kVerificationFailure;
}

int harness_theorem_check(const Options& o, std::ostream& out) {
    check_format(o, {"text", "json"});
    TheoremOptions opts;
    opts.graph_limits = graph_limits(o);
    opts.solver_limits.node_limit = o.node_limit;
    if (o.d > 0)
        opts.d = o.d;
    const auto r = theorem_check(load_family(o), need_positive(o.resolution, "--resolution"),
                                 need_rational(o.eps, "--eps"), need_positive(o.n, "--n"),
                                 o.quotient > 0 ? o.quotient : 5, o.box > 0 ? o.box : 3, opts);
    if (o.format == "json")
        out << theorem_report_to_json(r).dump(2) << '\n';
    else
        out << theorem_report_to_text(r);
    return r.passed() ? kOk : kVerificationFailure;
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "text|json|csv|dot");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--resource-cap", o.resource_cap, "cap on vertices/simplices (overrides SUBCHI_RESOURCE_CAP)");
}

void add_submeasure_source(CLI::App* cmd, Options& o) {
    cmd->add_option("--file", o.file, "submeasure spec file (JSON)");
    cmd->add_option("--spec", o.spec, "inline submeasure spec (JSON)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    std::function<int(const Options&, std::ostream&)> action;

    CLI::App app{"subchi: submeasure graphs, equivariant complexes and the chromatic bound harness", "subchi"};
    app.require_subcommand(1);
    auto bind = [&](CLI::App* cmd, int (*fn)(const Options&, std::ostream&)) {
        add_common(cmd, o);
        cmd->callback([&action, fn] { action = fn; });
    };

    auto* sub = app.add_subcommand("submeasure", "finite submeasures")->require_subcommand(1);
    {
        auto* c = sub->add_subcommand("verify", "check normalization, monotonicity and subadditivity");
        add_submeasure_source(c, o);
        c->add_option("--samples", o.samples, "samples when N > 12");
        bind(c, submeasure_verify);
        c = sub->add_subcommand("cover", "minimum cover by sets of submeasure < delta");
        add_submeasure_source(c, o);
        c->add_option("--delta", o.delta, "threshold a/b")->required();
        bind(c, submeasure_cover);
    }

    auto* gam = app.add_subcommand("gamma", "lattice graphs of a submeasure")->require_subcommand(1);
    {
        for (const char* name : {"build", "chi"}) {
            auto* c = gam->add_subcommand(name, std::string(name) == "build" ? "materialize a box or quotient graph"
                                                                              : "chromatic number of a box or quotient");
            add_submeasure_source(c, o);
            c->add_option("--blocks", o.blocks, "uniform submeasure on this many atoms, singleton blocks");
            c->add_option("--partition", o.partition, "blocks as JSON lists, or @file");
            c->add_option("--eps", o.eps, "epsilon a/b")->required();
            c->add_option("--box", o.box, "box side B");
            c->add_option("--quotient", o.quotient, "modulus m");
            if (std::string(name) == "chi") {
                c->add_option("--mode", o.mode, "exact|bounds");
                c->add_option("--node-limit", o.node_limit, "search node limit");
                bind(c, gamma_chi);
            } else {
                bind(c, gamma_build);
            }
        }
        auto* c = gam->add_subcommand("refine-check", "diagonal embedding maps coarse edges to fine edges");
        add_submeasure_source(c, o);
        c->add_option("--blocks", o.blocks, "uniform submeasure on this many atoms");
        c->add_option("--coarse", o.coarse, "coarse partition (JSON or @file)")->required();
        c->add_option("--fine", o.fine, "fine partition (JSON or @file)")->required();
        c->add_option("--eps", o.eps, "epsilon a/b")->required();
        c->add_option("--box", o.box, "box side B (default 3)");
        bind(c, gamma_refine_check);
    }

    auto* cx = app.add_subcommand("complex", "equivariant simplicial complexes")->require_subcommand(1);
    {
        auto* c = cx->add_subcommand("build-k", "K^{n,l}_p");
        c->add_option("--n", o.n)->required();
        c->add_option("--l", o.l)->required();
        c->add_option("--p", o.p)->required();
        bind(c, complex_build_k);
        c = cx->add_subcommand("build-s", "S^{l+1}_p");
        c->add_option("--l-plus-1", o.l_plus_1)->required();
        c->add_option("--p", o.p)->required();
        bind(c, complex_build_s);
        c = cx->add_subcommand("join", "join of two complexes");
        c->add_option("--left", o.left)->required();
        c->add_option("--right", o.right)->required();
        c->add_flag("--no-tag", o.no_tag, "keep labels as they are");
        c->add_option("--action", o.action, "recover the Z/p shift action from labels");
        bind(c, complex_join);
        c = cx->add_subcommand("sd", "barycentric subdivision");
        c->add_option("--file", o.file)->required();
        c->add_option("--times", o.times, "iterations");
        c->add_option("--action", o.action, "recover the Z/p shift action from labels");
        bind(c, complex_sd);
        c = cx->add_subcommand("map-s", "image of a chain under the lemma map");
        c->add_option("--n", o.n)->required();
        c->add_option("--l", o.l)->required();
        c->add_option("--p", o.p)->required();
        c->add_option("--chain", o.chain, "\"dom:values;dom:values\"")->required();
        bind(c, complex_map_s);
        c = cx->add_subcommand("verify", "check a map for simpliciality and equivariance");
        c->add_option("--map", o.map, "s|inclusion|tower|identity");
        c->add_option("--n", o.n);
        c->add_option("--l", o.l);
        c->add_option("--p", o.p);
        c->add_option("--ln", o.l_n, "tower height");
        c->add_option("--file", o.file, "complex for --map identity");
        c->add_option("--action", o.action, "recover the Z/p shift action from labels");
        bind(c, complex_verify);
    }

    auto* ho = app.add_subcommand("homology", "reduced simplicial homology")->require_subcommand(1);
    for (const char* name : {"betti", "connectivity"}) {
        auto* c = ho->add_subcommand(name, std::string(name) == "betti" ? "reduced Betti numbers"
                                                                         : "vanishing of b~0..b~l (necessary condition)");
        c->add_option("--file", o.file, "complex text file");
        c->add_option("--source", o.source, "S or K");
        c->add_option("--n", o.n);
        c->add_option("--l", o.l);
        c->add_option("--l-plus-1", o.l_plus_1);
        c->add_option("--p", o.p);
        c->add_option("--up-to", o.up_to, std::string(name) == "betti" ? "top dimension" : "claimed connectivity");
        c->add_option("--prime", o.prime, "coefficients in Z/q instead of Q");
        c->add_option("--action", o.action, "recover the Z/p shift action from labels");
        if (std::string(name) == "betti") {
            c->add_option("--dump-boundary", o.dump_boundary, "print this boundary matrix as row col value");
            bind(c, homology_betti);
        } else {
            bind(c, homology_connectivity);
        }
    }

    auto* ha = app.add_subcommand("harness", "constants and inequality chain of the chromatic bound")
                   ->require_subcommand(1);
    {
        auto family_opts = [&](CLI::App* c) {
            c->add_option("--family", o.family, "uniform|capped");
            c->add_option("--cap", o.cap, "cap of the capped family");
            c->add_option("--resolution", o.resolution, "atoms of the working family member");
            c->add_option("--eps", o.eps, "epsilon a/b")->required();
            c->add_option("--n", o.n);
        };
        auto* c = ha->add_subcommand("constants", "C, k(d) and F_bound");
        family_opts(c);
        c->add_option("--mu-x", o.mu_x, "mu(X) when no family is given");
        c->add_option("--d-max", o.d_max, "largest d listed");
        bind(c, harness_constants);
        c = ha->add_subcommand("inequalities", "evaluate the anchored inequality chain");
        family_opts(c);
        c->add_option("--d", o.d, "color budget (default F_bound-1 or 1)");
        bind(c, harness_inequalities);
        c = ha->add_subcommand("theorem-check", "F_bound against exact chromatic numbers");
        family_opts(c);
        c->add_option("--d", o.d, "color budget (default F_bound-1 or 1)");
        c->add_option("--quotient", o.quotient, "modulus m (default 5)");
        c->add_option("--box", o.box, "box side B (default 3)");
        c->add_option("--node-limit", o.node_limit, "search node limit");
        bind(c, harness_theorem_check);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error[usage]: " << e.what() << '\n';
        return kUsage;
    }
    if (!action) {
        err << "error[usage]: no command given\n";
        return kUsage;
    }

    try {
        return action(o, out);
    } catch (const VerificationFailure& e) {
        err << "error[" << e.kind() << "]: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const ResourceLimit& e) {
        err << "error[" << e.kind() << "]: " << e.what() << '\n';
        return kResource;
    } catch (const Infeasible& e) {
        err << "error[" << e.kind() << "]: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const NotSimplicial& e) {
        err << "error[" << e.kind() << "]: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const Error& e) {
        err << "error[" << e.kind() << "]: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error[parse]: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error[internal]: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace subchi::cli
