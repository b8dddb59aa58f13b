// blockforge: block invariants of p-blocks with split metacyclic defect
// groups, computed in exact integer arithmetic.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "blockforge/acceptance.hpp"
#include "blockforge/lattice.hpp"
#include "blockforge/report.hpp"

namespace {

using namespace blockforge;

long long resolve_budget(long long flag_value, bool flag_set)
{
    if (flag_set)
        return flag_value;
    if (const char* env = std::getenv("BLOCKFORGE_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("BLOCKFORGE_BUDGET is not an integer: " +
                                        std::string(env));
        }
    }
    return kDefaultBudget;
}

nlohmann::json forms_json(const std::vector<BinaryForm>& forms)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : forms)
        arr.push_back({{"a", f.a}, {"b", f.b}, {"c", f.c}});
    return arr;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"block invariants for split metacyclic defect groups"};
    app.require_subcommand(1);

    long long budget = kDefaultBudget;
    app.add_option("--budget", budget,
                   "enumeration budget (elements); overrides BLOCKFORGE_BUDGET");

    // report
    auto* report = app.add_subcommand("report", "full invariant report for one parameter tuple");
    long long rp = 0, re = 1;
    int rm = 0, rn = 0, rl = 0;
    std::string rformat = "json";
    report->add_option("--p", rp, "odd prime")->required();
    report->add_option("--m", rm, "exponent of x is p^m")->required();
    report->add_option("--n", rn, "exponent of y is p^n")->required();
    report->add_option("--l", rl, "twist exponent: y x y^-1 = x^(1+p^l)")->required();
    report->add_option("--e", re, "inertial index, divides p - 1");
    report->add_option("--format", rformat, "json, csv or text");

    // scan
    auto* scan = app.add_subcommand("scan", "reports for every valid tuple up to a group order");
    long long max_order = 3125;
    std::vector<long long> primes{3, 5, 7};
    std::string sformat = "json";
    scan->add_option("--max-order", max_order, "largest |D| = p^(m+n) to include");
    scan->add_option("--primes", primes, "primes to scan")->delimiter(',');
    scan->add_option("--format", sformat, "json (one record per line), csv or text");

    // verify
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");

    // table
    auto* table = app.add_subcommand("table", "character table of M_(p^(m+1)) as CSV");
    long long tp = 0;
    int tm = 0;
    table->add_option("--p", tp, "odd prime")->required();
    table->add_option("--m", tm, "cyclic subgroup has index p and order p^m")->required();

    // lattice subcommands
    auto* lattice = app.add_subcommand("lattice", "integer quadratic-form utilities");
    lattice->require_subcommand(1);

    auto* qsol = lattice->add_subcommand("qsol", "A_r root vectors with q(a) = v");
    int qr = 0, qv = 1;
    qsol->add_option("--r", qr, "rank of the A_r diagram")->required();
    qsol->add_option("--v", qv, "target value, 1 or 2")->required();

    auto* deficits = lattice->add_subcommand("deficits", "r <= cap with p^2 not a sum of p^2 - r squares");
    long long dp = 0, dcap = 15;
    deficits->add_option("--p", dp, "odd prime")->required();
    deficits->add_option("--cap", dcap, "largest deficit to test");

    auto* heights = lattice->add_subcommand("heights", "solutions of sum r_i (i^2 - 1) = p(p-3)/2");
    long long hp = 0;
    bool unfiltered = false;
    heights->add_option("--p", hp, "odd prime >= 5")->required();
    heights->add_flag("--unfiltered", unfiltered, "skip the rational-character filter");

    auto* forms = lattice->add_subcommand("forms", "reduced positive definite binary forms");
    long long fdet = 0;
    std::vector<long long> fdiv;
    forms->add_option("--det", fdet, "determinant ac - b^2")->required();
    forms->add_option("--divisors", fdiv, "elementary divisor pair d1,d2")
        ->delimiter(',')
        ->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // invalid input exits 1, --help exits 0
    }

    try {
        long long effective_budget = resolve_budget(budget, app.count("--budget") > 0);

        if (*report) {
            ReportDocument doc =
                build_report(BlockParams::make(rp, rm, rn, rl, re), effective_budget);
            write_report(doc, parse_format(rformat), std::cout);
            if (!doc.consistency_violations.empty()) {
                for (const auto& v : doc.consistency_violations)
                    std::cerr << "consistency violation: " << v << "\n";
                return 3;
            }
        } else if (*scan) {
            ScanOptions opts;
            opts.max_order = max_order;
            opts.primes = primes;
            opts.budget = effective_budget;
            run_scan(opts, parse_format(sformat), std::cout);
        } else if (*verify) {
            return run_acceptance(std::cout) ? 0 : 1;
        } else if (*table) {
            GroupParams G = GroupParams::make(tp, tm, 1, tm - 1);
            CharacterTable t = irr_table(G, effective_budget);
            write_table_csv(G, t, std::cout);
        } else if (*qsol) {
            auto sols = q_solutions(qr, qv);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& s : sols)
                arr.push_back({{"vector", s.vec}, {"shape", to_string(s.shape)}});
            std::cout << nlohmann::json{{"r", qr}, {"v", qv}, {"count", sols.size()},
                                        {"solutions", arr}}
                             .dump(2)
                      << "\n";
        } else if (*deficits) {
            auto set = forbidden_deficits(dp, dcap);
            std::cout << nlohmann::json{{"p", dp},
                                        {"cap", dcap},
                                        {"forbidden", std::vector<long long>(set.begin(),
                                                                             set.end())}}
                             .dump(2)
                      << "\n";
        } else if (*heights) {
            auto sols = height_profile_solutions(hp, !unfiltered);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& h : sols) {
                nlohmann::json prof = nlohmann::json::object();
                for (size_t i = 0; i < h.r.size(); ++i)
                    if (h.r[i] != 0)
                        prof["r" + std::to_string(i + 2)] = h.r[i];
                arr.push_back(prof);
            }
            std::cout << nlohmann::json{{"p", hp},
                                        {"target", hp * (hp - 3) / 2},
                                        {"filtered", !unfiltered},
                                        {"solutions", arr}}
                             .dump(2)
                      << "\n";
        } else if (*forms) {
            std::optional<std::pair<long long, long long>> div;
            if (fdiv.size() == 2)
                div = std::make_pair(fdiv[0], fdiv[1]);
            std::cout << nlohmann::json{{"det", fdet},
                                        {"forms", forms_json(reduced_binary_forms(fdet, div))}}
                             .dump(2)
                      << "\n";
        }
        return 0;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
