#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "subchi/cli.hpp"
#include "subchi/coloring.hpp"
#include "subchi/errors.hpp"
#include "subchi/gamma.hpp"
#include "subchi/harness.hpp"
#include "subchi/homology.hpp"
#include "subchi/partial_complexes.hpp"
#include "subchi/simplicial_map.hpp"
#include "subchi/submeasure_io.hpp"

namespace py = pybind11;
using namespace subchi;

namespace {

// Rationals cross the boundary as "a/b" strings; the Python side converts.
std::string str(const Rational& q) { return to_string(q); }

std::vector<std::vector<int>> lists(const std::vector<AtomSet>& sets) {
    std::vector<std::vector<int>> out;
    for (const auto& s : sets)
        out.push_back(s.atoms());
    return out;
}

py::dict complex_dict(const Complex& k) {
    py::dict d;
    d["vertices"] = k.labels();
    d["facets"] = k.facets();
    d["text"] = complex_to_text(k);
    return d;
}

std::optional<int> chi_of(const Graph& g, std::uint64_t node_limit) {
    auto r = chromatic_number(g, ChromaticMode::Exact, SolverLimits{node_limit});
    if (r.status == ChromaticResult::Status::Uncolorable)
        return std::nullopt;
    return r.value();
}

}  // namespace

PYBIND11_MODULE(_subchi, m) {
    m.doc() = "Exact kernels for submeasures, lattice graphs, partial-function complexes and homology.";

    static py::exception<Error> base(m, "SubchiError");
    static py::exception<InvalidArgument> invalid(m, "InvalidArgument", base.ptr());
    static py::exception<Infeasible> infeasible(m, "Infeasible", base.ptr());
    static py::exception<ResourceLimit> resource(m, "ResourceLimit", base.ptr());
    static py::exception<ParseError> parse(m, "ParseError", base.ptr());
    static py::exception<NotSimplicial> not_simplicial(m, "NotSimplicial", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const InvalidArgument& e) {
            invalid(e.what());
        } catch (const Infeasible& e) {
            infeasible(e.what());
        } catch (const ResourceLimit& e) {
            resource(e.what());
        } catch (const ParseError& e) {
            parse(e.what());
        } catch (const NotSimplicial& e) {
            not_simplicial(e.what());
        } catch (const Error& e) {
            base(e.what());
        }
    });

    m.def("evaluate", [](const std::string& spec, const std::vector<int>& atoms) {
        auto mu = parse_submeasure(spec);
        return str(mu.eval(AtomSet::from_atoms(static_cast<std::size_t>(mu.atom_count()), atoms)));
    }, py::arg("spec"), py::arg("atoms"), "Submeasure of a set of 1-based atoms.");

    m.def("verify_axioms", [](const std::string& spec, std::uint64_t samples, std::uint64_t seed) {
        AxiomCheckOptions opt;
        opt.samples = samples;
        opt.seed = seed;
        auto r = verify_axioms(parse_submeasure(spec), opt);
        py::dict d;
        d["ok"] = r.ok;
        d["exhaustive"] = r.exhaustive;
        d["checks"] = r.checks;
        if (!r.ok) {
            d["axiom"] = r.axiom;
            d["a"] = r.a.atoms();
            d["b"] = r.b.atoms();
        }
        return d;
    }, py::arg("spec"), py::arg("samples") = 200000, py::arg("seed") = 1);

    m.def("covering_number", [](const std::string& spec, const std::string& delta) {
        auto c = covering_number(parse_submeasure(spec), parse_rational(delta));
        return py::make_tuple(c.k, lists(c.sets));
    }, py::arg("spec"), py::arg("delta"), "Minimum cover by sets of submeasure below delta, with a witness.");

    m.def("common_refinement", [](std::size_t universe, const std::vector<std::vector<std::vector<int>>>& parts) {
        std::vector<Partition> ps;
        for (const auto& p : parts)
            ps.push_back(Partition::from_lists(universe, p));
        return common_refinement(ps).to_lists();
    }, py::arg("universe"), py::arg("partitions"));

    m.def("chromatic_numbers",
          [](const std::string& spec, const std::vector<std::vector<int>>& partition, const std::string& eps,
             std::optional<int> box, std::optional<int> quotient, std::uint64_t node_limit) {
              auto mu = parse_submeasure(spec);
              GammaSpec g(mu, Partition::from_lists(static_cast<std::size_t>(mu.atom_count()), partition),
                          parse_rational(eps));
              py::dict d;
              if (box)
                  d["box"] = chi_of(box_subgraph(g, *box).graph, node_limit);
              if (quotient)
                  d["quotient"] = chi_of(quotient_graph(g, *quotient).graph, node_limit);
              return d;
          },
          py::arg("spec"), py::arg("partition"), py::arg("eps"), py::arg("box") = py::none(),
          py::arg("quotient") = py::none(), py::arg("node_limit") = 20'000'000,
          "Exact chromatic numbers of a box and/or a quotient; None marks an uncolorable graph.");

    m.def("build_K", [](int n, int l, int p) { return complex_dict(*build_K(n, l, p).complex); });
    m.def("build_S", [](int l_plus_1, int p) { return complex_dict(*build_S(l_plus_1, p).complex); });
    m.def("barycentric", [](const std::string& text, std::optional<int> p) {
        return complex_dict(barycentric(complex_from_text(text, p)).complex);
    }, py::arg("text"), py::arg("p") = py::none());

    m.def("map_s", [](const std::vector<std::string>& chain, int n, int l, int p) {
        std::vector<PartialFn> fs;
        for (const auto& label : chain)
            fs.push_back(PartialFn::parse(n, label));
        return map_s(fs, n, l, p).label();
    }, py::arg("chain"), py::arg("n"), py::arg("l"), py::arg("p"));

    m.def("verify_map_s", [](int n, int l, int p) {
        auto lm = lemma_map(n, l, p);
        auto s = verify_simplicial(lm.map);
        auto e = verify_equivariant(lm.map, p);
        py::dict d;
        d["simplicial"] = s.ok;
        d["equivariant"] = e.ok;
        if (!s.ok)
            d["counterexample"] = py::make_tuple(describe_simplex(*lm.map.source, *s.counterexample),
                                                 describe_simplex(*lm.map.target, *s.image));
        return d;
    }, py::arg("n"), py::arg("l"), py::arg("p"));

    m.def("reduced_betti", [](const std::string& text, int up_to, std::optional<int> prime) {
        return reduced_betti(complex_from_text(text), up_to, prime);
    }, py::arg("text"), py::arg("up_to"), py::arg("prime") = py::none());

    m.def("constant_C_cubed", [](const std::string& mu_x, const std::string& eps) {
        return str(constant_C_cubed(parse_rational(mu_x), parse_rational(eps)));
    });
    m.def("k_eps", [](const std::string& spec, const std::string& eps, int d) {
        return k_eps(parse_submeasure(spec), parse_rational(eps), d);
    });
    m.def("F_eps", [](const std::string& spec, const std::string& eps, const std::string& target) {
        return F_eps(parse_submeasure(spec), parse_rational(eps), parse_rational(target));
    });
    m.def("choose_prime", &choose_prime, py::arg("k"), py::arg("d"));

    m.def("theorem_check",
          [](const std::string& family, int resolution, const std::string& eps, int n, int modulus, int box,
             const std::string& cap) {
              auto fam = family == "capped" ? SubmeasureFamily::capped(parse_rational(cap)) : SubmeasureFamily::uniform();
              if (family != "capped" && family != "uniform")
                  throw InvalidArgument("family must be uniform or capped");
              return theorem_report_to_json(theorem_check(fam, resolution, parse_rational(eps), n, modulus, box)).dump();
          },
          py::arg("family"), py::arg("resolution"), py::arg("eps"), py::arg("n"), py::arg("modulus") = 5,
          py::arg("box") = 3, py::arg("cap") = "1", "Theorem report as a JSON string.");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command-line front end in-process; returns (exit code, stdout, stderr).");
}
