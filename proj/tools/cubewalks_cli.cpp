#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubewalks/centralizer.hpp"
#include "cubewalks/genfun.hpp"
#include "cubewalks/group.hpp"
#include "cubewalks/partitions.hpp"
#include "cubewalks/selftest.hpp"
#include "cubewalks/spectral.hpp"

using json = nlohmann::ordered_json;
using namespace cubewalks;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;     // a requested cross-check failed
constexpr int kExitUsage = 2;      // bad arguments
constexpr int kExitResource = 3;   // cap or budget refused the request

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "table";
    bool verify = false;
    int max_n = kDefaultMaxN;
    long long budget = kDefaultBudget;
};

GroupElement parse_vertex(const std::string& s, int n) {
    GroupElement a = GroupElement::parse(s);
    if (a.dimension() != n)
        throw UsageError("vertex '" + s + "' needs exactly " + std::to_string(n) + " binary digits");
    return a;
}

json poly_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.str());
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

json factors_json(const std::vector<std::pair<Int, long>>& factors) {
    json arr = json::array();
    for (const auto& [lambda, mult] : factors) arr.push_back({lambda.str(), mult});
    return arr;
}

json rational_json(const RationalFunction& f, const std::vector<std::pair<Int, long>>& factors) {
    return {{"num", poly_json(f.num())}, {"den", poly_json(f.den())},
            {"den_factors", factors_json(factors)}};
}

std::string factors_text(const std::vector<std::pair<Int, long>>& factors) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, mult] : factors) {
        if (!first) os << " ";
        first = false;
        if (lambda == 0)
            os << "(1)";
        else if (lambda > 0)
            os << "(1-" << (lambda == 1 ? "" : lambda.str() + "*") << "t)";
        else
            os << "(1+" << (lambda == -1 ? "" : Int(-lambda).str() + "*") << "t)";
        os << "^" << mult;
    }
    return first ? "1" : os.str();
}

std::string coeff_text(const std::vector<Int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

void emit(const Options& g, const json& record, const std::vector<std::string>& lines) {
    if (g.format == "json") {
        std::cout << record.dump(2) << "\n";
    } else {
        for (const std::string& line : lines) std::cout << line << "\n";
    }
}

// ---- walks ----------------------------------------------------------------

int cmd_walks(const Options& g, int n, const std::string& from, const std::string& to,
              int k, const std::string& method) {
    const GroupElement b = parse_vertex(from, n);
    const GroupElement c = parse_vertex(to, n);
    const StepSet cube = StepSet::cube(n);
    const int h = (b + c).hamming_weight();
    const bool all = g.verify || method == "all";

    std::vector<std::pair<std::string, Int>> routes;
    if (all || method == "brute")
        routes.emplace_back("brute", walk_count_bruteforce(cube, b, c, k, g.max_n));
    if (all || method == "spectral")
        routes.emplace_back("spectral", walk_count_spectral(cube, b, c, k, g.max_n));
    if (all || method == "closed")
        routes.emplace_back("closed", walk_count_cube_closed(n, h, k));

    bool match = true;
    for (const auto& [name, v] : routes) match = match && v == routes.front().second;

    json record = {{"command", "walks"},
                   {"params", {{"n", n}, {"from", from}, {"to", to}, {"k", k}, {"method", method}}},
                   {"result", {{"count", routes.front().second.str()}}}};
    std::vector<std::string> lines;
    {
        std::ostringstream os;
        os << "# walks n=" << n << " from=" << from << " to=" << to << " k=" << k
           << " method=" << method;
        lines.push_back(os.str());
    }
    if (routes.size() == 1) {
        lines.push_back(routes.front().second.str());
    } else {
        json jr;
        for (const auto& [name, v] : routes) {
            jr[name] = v.str();
            lines.push_back(name + std::string(9 - name.size(), ' ') + v.str());
        }
        record["verification"] = {{"routes", jr}, {"match", match}};
        lines.push_back(std::string("routes agree: ") + (match ? "yes" : "no"));
    }
    emit(g, record, lines);
    return all && !match ? kExitVerify : kExitOk;
}

// ---- dim ------------------------------------------------------------------

int cmd_dim(const Options& g, const std::string& algebra, long k, long n) {
    json result, verification;
    std::vector<std::string> lines;
    bool verified_ok = true;
    {
        std::ostringstream os;
        os << "# dim algebra=" << algebra << " k=" << k << " n=" << n;
        lines.push_back(os.str());
    }
    if (algebra == "z2n") {
        const Int sp = dim_Zk_Z2n_spectral(k, n);
        const Int di = dim_Zk_Z2n_diagrammatic(k, n);
        result = {{"spectral", sp.str()}, {"diagrammatic", di.str()}};
        lines.push_back("spectral     " + sp.str());
        lines.push_back("diagrammatic " + di.str());
        if (g.verify) {
            // third route: dim Z_k = m_{2k} at the zero vertex
            const Int wk = walk_count_cube_closed(int(n), 0, int(2 * k));
            verified_ok = sp == di && sp == wk;
            verification = {{"routes", {{"spectral", sp.str()}, {"diagrammatic", di.str()},
                                        {"walks", wk.str()}}},
                            {"match", verified_ok}};
        } else {
            verified_ok = sp == di;
            if (!verified_ok) lines.push_back("routes agree: no");
        }
    } else if (algebra == "sn" || algebra == "g21n") {
        const Int closed = algebra == "sn" ? dim_Zk_Sn(k, n) : dim_Zk_G21n(k, n);
        result = {{"dim", closed.str()}};
        lines.push_back(closed.str());
        if (g.verify) {
            // enumeration route; refuse when the scan would be too large
            const Int scan = dim_Zk_Sn(k, n);
            if (scan > g.budget)
                throw BudgetExceeded("enumerating P(k,n) would yield " + scan.str() +
                                     " partitions, over the budget " + std::to_string(g.budget));
            const Int counted = count_partitions(int(k), int(n), algebra == "g21n");
            verified_ok = counted == closed;
            verification = {{"routes", {{"closed", closed.str()}, {"enumerated", counted.str()}}},
                            {"match", verified_ok}};
        }
    } else {
        throw UsageError("unknown algebra '" + algebra + "'");
    }
    json record = {{"command", "dim"},
                   {"params", {{"algebra", algebra}, {"k", k}, {"n", n}}},
                   {"result", result}};
    if (!verification.is_null()) {
        record["verification"] = verification;
        lines.push_back(std::string("routes agree: ") + (verified_ok ? "yes" : "no"));
    }
    emit(g, record, lines);
    return verified_ok ? kExitOk : kExitVerify;
}

// ---- series ---------------------------------------------------------------

int cmd_series(const Options& g, const std::string& kind, int n, const std::string& a_str,
               int K) {
    const GroupElement a = parse_vertex(a_str, n);
    const int h = a.hamming_weight();
    json result, verification;
    std::vector<std::string> lines;
    bool verified_ok = true;
    {
        std::ostringstream os;
        os << "# series kind=" << kind << " n=" << n << " a=" << a_str << " K=" << K;
        lines.push_back(os.str());
    }
    if (kind == "poincare") {
        const PoincareSeries ps = poincare_series(n, a, g.max_n);
        const std::vector<Int> coeffs = ps.as_computed.series(std::size_t(K));
        const FactoredPoly den = denominator_factored(n);
        const std::vector<Int> lambdas = cube_eigenvalues(n);
        const auto reduced_factors = linear_factor_profile(ps.reduced.den(), lambdas);
        result = {{"poincare", rational_json(ps.as_computed, den.factors)},
                  {"poincare_reduced", rational_json(ps.reduced, reduced_factors)},
                  {"coefficients", json::array()}};
        for (const Int& c : coeffs) result["coefficients"].push_back(c.str());
        lines.push_back("num         " + ps.as_computed.num().to_string());
        lines.push_back("den         " + ps.as_computed.den().to_string());
        lines.push_back("den_factors " + factors_text(den.factors));
        lines.push_back("reduced_num " + ps.reduced.num().to_string());
        lines.push_back("reduced_den " + ps.reduced.den().to_string());
        lines.push_back("coeffs      " + coeff_text(coeffs));
        if (g.verify) {
            const std::vector<Int> via_egf = egf_coefficients(n, h, K);
            bool egf_match = via_egf == coeffs;
            bool closed_match = true;
            for (int k = 0; k <= K; ++k)
                closed_match =
                    closed_match && walk_count_cube_closed(n, h, k) == coeffs[std::size_t(k)];
            const bool den_match = den.expanded == ps.as_computed.den();
            verified_ok = egf_match && closed_match && den_match;
            verification = {{"egf_match", egf_match},
                            {"closed_form_match", closed_match},
                            {"den_factorization_match", den_match},
                            {"match", verified_ok}};
        }
    } else if (kind == "egf") {
        const std::vector<Int> coeffs = egf_coefficients(n, h, K);
        result = {{"coefficients", json::array()}};
        for (const Int& c : coeffs) result["coefficients"].push_back(c.str());
        lines.push_back("coeffs " + coeff_text(coeffs));
        if (g.verify) {
            bool closed_match = true;
            for (int k = 0; k <= K; ++k)
                closed_match =
                    closed_match && walk_count_cube_closed(n, h, k) == coeffs[std::size_t(k)];
            verified_ok = closed_match;
            verification = {{"closed_form_match", closed_match}, {"match", verified_ok}};
        }
    } else {
        throw UsageError("unknown series kind '" + kind + "'");
    }
    json record = {{"command", "series"},
                   {"params", {{"kind", kind}, {"n", n}, {"a", a_str}, {"K", K}}},
                   {"result", result}};
    if (!verification.is_null()) {
        record["verification"] = verification;
        lines.push_back(std::string("routes agree: ") + (verified_ok ? "yes" : "no"));
    }
    emit(g, record, lines);
    return verified_ok ? kExitOk : kExitVerify;
}

// ---- diagrams ---------------------------------------------------------------

int cmd_diagrams(const Options& g, int k, int n, bool even_only, bool expand) {
    const Int scan = dim_Zk_Sn(k, n);
    if (scan > g.budget)
        throw BudgetExceeded("enumerating P(k,n) would yield " + scan.str() +
                             " partitions, over the budget " + std::to_string(g.budget));
    if (expand) {
        const Int summands = scan * falling_factorial(n, std::min(2 * k, n));
        if (summands > g.budget)
            throw BudgetExceeded("expanding every T_d could reach " + summands.str() +
                                 " summands, over the budget " + std::to_string(g.budget));
    }
    json diagrams = json::array();
    std::vector<std::string> lines;
    {
        std::ostringstream os;
        os << "# diagrams k=" << k << " n=" << n << " even-only=" << (even_only ? "yes" : "no");
        if (expand) os << " expand=yes";
        lines.push_back(os.str());
    }
    Int count = 0, total_summands = 0;
    PartitionEnumerator pe(k, n, even_only);
    while (auto d = pe.next()) {
        ++count;
        json entry = {{"partition", d->to_string()},
                      {"blocks", d->num_blocks()},
                      {"even", d->all_blocks_even()}};
        {
            std::ostringstream os;
            os << d->to_string() << " blocks=" << d->num_blocks()
               << " even=" << (d->all_blocks_even() ? "yes" : "no");
            lines.push_back(os.str());
        }
        if (expand) {
            const auto summands = expand_Td(*d, n);
            total_summands += summands.size();
            json names = json::array();
            std::ostringstream os;
            os << "  summands (" << summands.size() << "):";
            for (const BasisElement& e : summands) {
                const std::string name = n <= 9 ? e.compact() : e.to_string();
                names.push_back(name);
                os << " " << name;
            }
            entry["summands"] = names;
            entry["summand_count"] = summands.size();
            lines.push_back(os.str());
        }
        diagrams.push_back(std::move(entry));
    }
    lines.push_back("count " + count.str());
    json result = {{"diagrams", std::move(diagrams)}, {"count", count.str()}};
    if (expand) {
        result["total_summands"] = total_summands.str();
        lines.push_back("total_summands " + total_summands.str());
    }
    json record = {{"command", "diagrams"},
                   {"params",
                    {{"k", k}, {"n", n}, {"even_only", even_only}, {"expand", expand}}},
                   {"result", std::move(result)}};
    emit(g, record, lines);
    return kExitOk;
}

// ---- bratteli ---------------------------------------------------------------

int cmd_bratteli(const Options& g, int n, int k_max) {
    const auto levels = bratteli(n, k_max, g.max_n);
    json jlevels = json::array();
    std::vector<std::string> lines;
    {
        std::ostringstream os;
        os << "# bratteli n=" << n << " k-max=" << k_max;
        lines.push_back(os.str());
    }
    bool verified_ok = true;
    for (const BratteliLevel& level : levels) {
        json mults;
        std::ostringstream os;
        os << "k=" << level.level << " ";
        for (const auto& [a, m] : level.multiplicities) {
            mults[a.to_string()] = m.str();
            os << " (" << a.to_string() << ")=" << m;
        }
        const Int sq = level.sum_of_squares();
        os << "  | sum_sq " << sq;
        lines.push_back(os.str());
        jlevels.push_back({{"k", level.level},
                           {"multiplicities", std::move(mults)},
                           {"sum_of_squares", sq.str()}});
        if (g.verify) {
            // the squared level sums give the algebra dimensions, and each
            // entry matches the multinomial route
            if (sq != dim_Zk_Z2n_spectral(level.level, n)) verified_ok = false;
            for (const auto& [a, m] : level.multiplicities)
                if (m != multiplicity_multinomial(level.level, n, a.hamming_weight()))
                    verified_ok = false;
        }
    }
    json record = {{"command", "bratteli"},
                   {"params", {{"n", n}, {"k_max", k_max}}},
                   {"result", {{"levels", std::move(jlevels)}}}};
    if (g.verify) {
        record["verification"] = {{"match", verified_ok}};
        lines.push_back(std::string("routes agree: ") + (verified_ok ? "yes" : "no"));
    }
    emit(g, record, lines);
    return verified_ok ? kExitOk : kExitVerify;
}

// ---- selftest ---------------------------------------------------------------

int cmd_selftest(const Options& g, bool inject_failure) {
    SelftestOptions opts;
    opts.max_n = g.max_n;
    opts.inject_failure = inject_failure;
    const auto results = run_selftest(opts);
    std::size_t passed = 0;
    json checks = json::array();
    std::vector<std::string> lines;
    lines.push_back("# selftest max-n=" + std::to_string(g.max_n));
    for (const CheckResult& c : results) {
        if (c.passed) {
            ++passed;
            lines.push_back("ok   " + c.name);
        } else {
            lines.push_back("FAIL " + c.name + ": " + c.detail);
        }
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    const bool all_passed = passed == results.size();
    lines.push_back("selftest: " + std::to_string(passed) + "/" + std::to_string(results.size()) +
                    " passed");
    json record = {{"command", "selftest"},
                   {"params", {{"max_n", g.max_n}}},
                   {"result", {{"checks", std::move(checks)}, {"passed", all_passed}}}};
    emit(g, record, lines);
    return all_passed ? kExitOk : kExitVerify;
}

}

int main(int argc, char** argv) {
    CLI::App app{"exact walk counts on the n-cube and the matching centralizer-algebra data",
                 "cubewalks"};
    app.fallthrough();
    app.require_subcommand(1);

    Options g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_flag("--verify", g.verify, "cross-check independent routes and report");
    app.add_option("--max-n", g.max_n, "largest cube dimension for 2^n-sized work")
        ->check(CLI::Range(1, 30))
        ->capture_default_str();
    app.add_option("--budget", g.budget, "largest enumeration scan accepted")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int n = 1, k = 0, K = 8, k_max = 4;
    std::string from, to, vertex, method = "closed", algebra = "z2n", kind = "poincare";
    bool even_only = false, expand = false, inject_failure = false;

    CLI::App* walks = app.add_subcommand("walks", "count k-step walks between two vertices");
    walks->add_option("-n,--dim", n, "cube dimension")->required()->check(CLI::PositiveNumber);
    walks->add_option("--from", from, "start vertex as a bit string")->required();
    walks->add_option("--to", to, "end vertex as a bit string")->required();
    walks->add_option("-k,--steps", k, "walk length")->required()->check(CLI::NonNegativeNumber);
    walks->add_option("--method", method, "route to compute")
        ->check(CLI::IsMember({"brute", "spectral", "closed", "all"}))
        ->capture_default_str();

    CLI::App* dim = app.add_subcommand("dim", "centralizer algebra dimensions");
    dim->add_option("-k", k, "tensor power")->required()->check(CLI::NonNegativeNumber);
    dim->add_option("-n", n, "rank")->required()->check(CLI::PositiveNumber);
    dim->add_option("--algebra", algebra, "which centralizer")
        ->check(CLI::IsMember({"z2n", "sn", "g21n"}))
        ->capture_default_str();

    CLI::App* series = app.add_subcommand("series", "walk generating functions");
    series->add_option("-n,--dim", n, "cube dimension")->required()->check(CLI::PositiveNumber);
    series->add_option("-a,--vertex", vertex, "endpoint as a bit string")->required();
    series->add_option("--kind", kind, "poincare or egf")
        ->check(CLI::IsMember({"poincare", "egf"}))
        ->capture_default_str();
    series->add_option("-K,--order", K, "highest power reported")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    CLI::App* diagrams = app.add_subcommand("diagrams", "set-partition diagrams");
    diagrams->add_option("-k", k, "half the diagram size")->required()->check(CLI::PositiveNumber);
    diagrams->add_option("-n", n, "block cap")->required()->check(CLI::PositiveNumber);
    diagrams->add_flag("--even-only", even_only, "only diagrams with even blocks");
    diagrams->add_flag("--expand", expand, "list each T_d's matrix units");

    CLI::App* bratteli_cmd = app.add_subcommand("bratteli", "walk multiplicity diagram");
    bratteli_cmd->add_option("-n,--dim", n, "cube dimension")->required()->check(CLI::PositiveNumber);
    bratteli_cmd->add_option("--k-max", k_max, "deepest level")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    CLI::App* selftest = app.add_subcommand("selftest", "run the fixed verification suite");
    selftest->add_flag("--inject-failure", inject_failure)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*walks) return cmd_walks(g, n, from, to, k, method);
        if (*dim) return cmd_dim(g, algebra, k, n);
        if (*series) return cmd_series(g, kind, n, vertex, K);
        if (*diagrams) return cmd_diagrams(g, k, n, even_only, expand);
        if (*bratteli_cmd) return cmd_bratteli(g, n, k_max);
        if (*selftest) return cmd_selftest(g, inject_failure);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerify;
    }
    return kExitUsage;
}
