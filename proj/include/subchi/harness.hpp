#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "subchi/coloring.hpp"
#include "subchi/gamma.hpp"
#include "subchi/submeasure.hpp"

namespace subchi {

// C = cbrt(mu(X)^2 / 16 eps) is kept as its exact cube.
Rational constant_C_cubed(const Rational& mu_x, const Rational& epsilon);
// Exact cube root when the cube is a perfect rational cube.
std::optional<Rational> exact_cube_root(const Rational& cube);

// k(d) = k_mu(eps / 4d). Throws Infeasible when an atom reaches the threshold.
int k_eps(const FiniteSubmeasure& mu, const Rational& epsilon, int d);
Cover k_eps_cover(const FiniteSubmeasure& mu, const Rational& epsilon, int d);

// max{d >= 1 : k(d) <= m}, or 0. An infeasible k(d) counts as infinite.
int F_eps(const FiniteSubmeasure& mu, const Rational& epsilon, const Rational& m);
// max{d >= 1 : k(d)^3 <= C^3 n}, i.e. F evaluated at C * cbrt(n).
int F_bound(const FiniteSubmeasure& mu, const Rational& epsilon, int n);

// Smallest prime p with k(d+1) < p < 2k(d+1).
long long choose_prime(long long k, long long d);

struct PnResult {
    Partition partition;
    int F_bound = 0;
    std::vector<Partition> q_partitions;  // disjointified Q_d, d = 1..F_bound
};
// Common refinement of the Q_d for d <= F_bound, then blocks split in atom
// order until each has submeasure < 1/n. Throws Infeasible when an atom has
// submeasure >= 1/n.
PnResult build_P_n(const FiniteSubmeasure& mu, const Rational& epsilon, int n);

struct Anchor {
    std::string name;
    std::string lhs;
    std::string relation;
    std::string rhs;
    bool pass = false;
};

struct TheoremInstance {
    Rational mu_x;
    Rational epsilon;
    int n = 0;
    int d = 0;
    int k = 0;
    long long p = 0;
    long long l = 0;
    int k_n = 0;
    long long l_n = 0;
    Rational C_cubed;
    int F_bound = 0;
    Rational max_block;  // largest mu of a block of P_n
    std::optional<int> k_next;  // k(F_bound + 1), absent when infeasible
    std::optional<int> k_at_bound;  // k(F_bound), when F_bound >= 1
    bool refines_Q_d = false;

    bool in_regime() const { return d < F_bound; }
};

// Derives k, p, l, k_n and l_n for budget d >= 1 from a prebuilt P_n.
TheoremInstance derive_instance(const FiniteSubmeasure& mu, const Rational& epsilon, int n, int d,
                                const PnResult& pn);

// Every anchored inequality of the chain, evaluated exactly.
std::vector<Anchor> verify_inequality_chain(const TheoremInstance& inst);

struct TheoremReport {
    std::string family;
    int resolution = 0;
    TheoremInstance instance;
    bool chain_available = false;
    std::string chain_note;
    std::vector<Anchor> anchors;
    Partition partition;
    std::optional<int> chi_lower;
    std::optional<int> chi_upper;
    bool uncolorable = false;
    int box = 0;
    int modulus = 0;
    std::string verdict;  // "pass", "vacuous" or "fail"

    bool passed() const { return verdict != "fail"; }
};

struct TheoremOptions {
    GraphLimits graph_limits{};
    SolverLimits solver_limits{};
    std::optional<int> d;  // default: F_bound - 1 when F_bound >= 2, else 1
};

TheoremReport theorem_check(const SubmeasureFamily& family, int resolution, const Rational& epsilon, int n,
                            int modulus, int box, const TheoremOptions& options = {});

nlohmann::json anchors_to_json(const std::vector<Anchor>& anchors);
nlohmann::json instance_to_json(const TheoremInstance& inst);
nlohmann::json theorem_report_to_json(const TheoremReport& report);
std::string theorem_report_to_text(const TheoremReport& report);

}  // namespace subchi
