// pfh_lab: command-line front end for the lattice-path model.

#include "selftest.hpp"

#include "pfh/asymptotics.hpp"
#include "pfh/chain_complex.hpp"
#include "pfh/demo_pipeline.hpp"
#include "pfh/index_engine.hpp"
#include "pfh/parallel.hpp"
#include "pfh/profile_config.hpp"
#include "pfh/spectral.hpp"
#include "pfh/spectrum.hpp"

#include "CLI11.hpp"
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pfh;

namespace {

constexpr const char* kHeader = "# pfh-twist-lab v1";

// Exit-code classes.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct Violations : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string profile = "quadratic";
    int brute_cap = kDefaultBruteCap;
    int homology_cap = 5;
    unsigned threads = 0;
    std::string output;
};

std::vector<std::int64_t> parse_int_list(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(std::stoll(item));
    if (out.empty())
        throw UsageError("empty list '" + text + "'");
    return out;
}

std::pair<double, double> parse_window(const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError("window must be 'a,b'");
    double a = to_double(parse_rational(text.substr(0, comma)));
    double b = to_double(parse_rational(text.substr(comma + 1)));
    if (!(a <= b))
        throw UsageError("window must have a <= b");
    return {a, b};
}

std::string fmt_opt(const std::optional<Scalar>& v)
{
    return v ? v->str() : "";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lattice-path model of periodic Floer homology for monotone twist maps"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--brute-cap", cfg.brute_cap, "largest degree for exhaustive enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--homology-cap", cfg.homology_cap, "largest degree for chain-level commands")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.threads, "worker threads (overrides PFH_THREADS)")->check(CLI::PositiveNumber);
    app.add_option("-o,--output", cfg.output, "write CSV here instead of stdout");

    // profile check
    auto* profile_cmd = app.add_subcommand("profile", "profile utilities");
    profile_cmd->require_subcommand(1);
    auto* profile_check = profile_cmd->add_subcommand("check", "validate a profile and print I, Cal, h(1)");
    std::string profile_arg;
    bool lenient = false;
    profile_check->add_option("profile", profile_arg, "built-in name or JSON file")->required();
    profile_check->add_flag("--lenient", lenient, "accept h' >= 0, h'' >= 0");

    auto* index_cmd = app.add_subcommand("index", "index report of a path");
    std::string path_arg;
    index_cmd->add_option("path", path_arg, "path, e.g. '0; (1,1)x1:H'")->required();

    auto* action_cmd = app.add_subcommand("action", "action of a path");
    action_cmd->add_option("path", path_arg)->required();
    action_cmd->add_option("--profile", cfg.profile);

    std::int64_t d = 1, k = 0;
    std::optional<std::int64_t> kmin, kmax;
    auto add_window = [&](CLI::App* c) {
        c->add_option("--kmin", kmin, "first grading");
        c->add_option("--kmax", kmax, "last grading");
    };

    auto* complex_cmd = app.add_subcommand("complex", "chain complex checks");
    complex_cmd->require_subcommand(1);
    auto* verify_cmd = complex_cmd->add_subcommand("verify", "d^2 = 0 and differential invariants");
    verify_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--profile", cfg.profile);
    add_window(verify_cmd);

    auto* homology_cmd = app.add_subcommand("homology", "mod-2 homology ranks and min-max values");
    homology_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    homology_cmd->add_option("--profile", cfg.profile);
    add_window(homology_cmd);

    auto* minmax_cmd = app.add_subcommand("minmax", "filtration min-max value of H_k");
    minmax_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    minmax_cmd->add_option("--k", k)->required();
    minmax_cmd->add_option("--profile", cfg.profile);

    auto* spectral_cmd = app.add_subcommand("spectral", "spectral invariants c_{d,k}");
    std::optional<std::int64_t> k_opt;
    bool all = false;
    std::string method = "brute";
    spectral_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    auto* kflag = spectral_cmd->add_option("--k", k_opt);
    spectral_cmd->add_flag("--all", all, "every grading of the window")->excludes(kflag);
    spectral_cmd->add_option("--method", method)->check(CLI::IsMember({"brute", "bracket"}));
    spectral_cmd->add_option("--profile", cfg.profile);
    add_window(spectral_cmd);

    auto* converge_cmd = app.add_subcommand("converge", "Calabi estimates c_{d,k}/d - k/(2(d^2+d))");
    std::int64_t dmax = 10;
    std::string dlist, rule = "k=-d";
    converge_cmd->add_option("--profile", cfg.profile);
    converge_cmd->add_option("--dmax", dmax)->check(CLI::PositiveNumber);
    converge_cmd->add_option("--dlist", dlist, "explicit comma-separated degrees");
    converge_cmd->add_option("--rule", rule, "k=-d | step1 | residue:r");

    auto* iso_cmd = app.add_subcommand("isoperimetric", "length identities and the isoperimetric inequality");
    std::size_t samples = 100;
    unsigned seed = 1;
    std::int64_t iso_dmax = 8;
    iso_cmd->add_option("--profile", cfg.profile);
    iso_cmd->add_option("--samples", samples);
    iso_cmd->add_option("--dmax", iso_dmax)->check(CLI::PositiveNumber);
    iso_cmd->add_option("--seed", seed);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "order-d action spectrum in a window");
    std::string window = "-1,2";
    spectrum_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    spectrum_cmd->add_option("--profile", cfg.profile);
    spectrum_cmd->add_option("--window", window, "a,b");

    auto* twist_cmd = app.add_subcommand("infinite-twist", "Calabi growth of truncated disc twists");
    std::string fspec = "power:4", ilist = "2,4,8,16,32";
    std::int64_t twist_dmax = 200;
    twist_cmd->add_option("--f", fspec, "zero | linear:c | power:a");
    twist_cmd->add_option("--i", ilist, "truncation indices (0 = untruncated)");
    twist_cmd->add_option("--dmax", twist_dmax)->check(CLI::PositiveNumber);
    twist_cmd->add_option("--dlist", dlist);

    auto* self_cmd = app.add_subcommand("selftest", "run the invariant suite");
    self_cmd->add_option("--profile", cfg.profile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cfg.threads)
        set_thread_count(cfg.threads);

    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            std::cerr << "error: cannot write " << cfg.output << '\n';
            return 2;
        }
    }
    std::ostream& out = cfg.output.empty() ? std::cout : file;

    auto window_or = [&](std::pair<std::int64_t, std::int64_t> def) {
        return std::make_pair(kmin.value_or(def.first), kmax.value_or(def.second));
    };
    auto chain_degree_ok = [&] {
        if (d > cfg.homology_cap)
            throw UsageError(fmt::format("--d {} exceeds --homology-cap {}", d, cfg.homology_cap));
    };

    try {
        if (profile_check->parsed()) {
            TwistProfile p = load_profile(profile_arg);
            auto bad = p.check(!lenient);
            out << kHeader << "\nfield,value\n";
            out << "name," << p.name() << '\n';
            out << "kind," << (p.is_exact() ? "exact-polynomial" : "numeric") << '\n';
            out << "h1," << p.h1().str() << '\n';
            out << "hprime1," << p.hprime1().str() << '\n';
            out << "I," << p.integral().str() << '\n';
            out << "Cal," << calabi(p).str() << '\n';
            for (const auto& v : bad)
                out << "violation," << v << '\n';
            if (!bad.empty())
                throw Violations(fmt::format("{} profile invariant(s) violated", bad.size()));
        } else if (index_cmd->parsed()) {
            LatticePath p = parse_path(path_arg);
            IndexReport r = count_j(p);
            PickResult pick = pick_check(p);
            out << kHeader << "\nj_plus,j_minus,j,h,d,index,pick\n";
            out << fmt::format("{},{},{},{},{},{},{}\n", r.j_plus, r.j_minus, r.j, r.h_count, p.degree(), r.index,
                               to_string(pick.status));
            if (pick.status == PickStatus::Mismatch)
                throw Violations("Pick identity fails");
        } else if (action_cmd->parsed()) {
            TwistProfile prof = load_profile(cfg.profile);
            LatticePath p = parse_path(path_arg);
            if (auto bad = validate(p, prof); !bad.empty())
                throw UsageError("invalid path: " + bad.front());
            ActionValue a = path_action(p, prof);
            out << kHeader << "\npart,value\n";
            out << "start," << a.start_term.str() << '\n';
            for (std::size_t i = 0; i < a.per_edge.size(); ++i) {
                const Edge& e = p.edges()[i];
                out << fmt::format("({},{})x{},", e.q, e.p, e.m) << a.per_edge[i].str() << '\n';
            }
            out << "total," << a.value.str() << '\n';
        } else if (verify_cmd->parsed()) {
            chain_degree_ok();
            TwistProfile prof = load_profile(cfg.profile);
            ChainComplex cc(d, prof);
            auto [lo, hi] = window_or(cc.default_window());
            out << kHeader << "\nd,k,dim,square_zero\n";
            int bad = 0;
            for (auto kk = lo; kk <= hi; ++kk) {
                bool ok = cc.square_zero(kk);
                bad += !ok;
                out << fmt::format("{},{},{},{}\n", d, kk, cc.generators(kk).generators.size(), ok ? "ok" : "FAIL");
            }
            if (bad)
                throw Violations(fmt::format("d^2 != 0 at {} grading(s)", bad));
        } else if (homology_cmd->parsed() || minmax_cmd->parsed()) {
            chain_degree_ok();
            TwistProfile prof = load_profile(cfg.profile);
            ChainComplex cc(d, prof);
            auto [lo, hi] = minmax_cmd->parsed() ? std::make_pair(k, k) : window_or(cc.default_window());
            out << kHeader << "\nd,k,rank,minmax\n";
            for (auto kk = lo; kk <= hi; ++kk) {
                auto rank = cc.homology_rank(kk);
                std::string mm;
                if (rank == 1)
                    mm = cc.min_max(kk).str();
                else if (minmax_cmd->parsed())
                    throw NoClass(fmt::format("H_{} has rank {} in degree {}", kk, rank, d));
                out << fmt::format("{},{},{},{}\n", d, kk, rank, mm);
            }
        } else if (spectral_cmd->parsed()) {
            TwistProfile prof = load_profile(cfg.profile);
            std::vector<std::int64_t> ks;
            auto [lo, hi] = window_or({-d - 1, d + 1});
            if (k_opt) {
                ks.push_back(*k_opt);
            } else {
                for (auto kk = lo; kk <= hi; ++kk)
                    if ((kk - d) % 2 == 0)
                        ks.push_back(kk);
            }
            out << kHeader << "\nd,k,value,lo,hi,method\n";
            if (method == "brute") {
                SpectralSolver solver(d, prof, cfg.brute_cap);
                for (auto kk : ks)
                    out << fmt::format("{},{},{},,,brute\n", d, kk, solver.value(kk).value.str());
            } else {
                for (auto kk : ks) {
                    Bracket b = c_dk_bracket(d, kk, prof, d <= cfg.brute_cap && prof.integer_hprime1() <= 4,
                                             cfg.brute_cap);
                    out << fmt::format("{},{},{},{},{},bracket\n", d, kk, fmt_opt(b.exact), b.lo.str(), b.hi.str());
                }
            }
        } else if (converge_cmd->parsed()) {
            TwistProfile prof = load_profile(cfg.profile);
            std::vector<std::int64_t> ds;
            if (!dlist.empty())
                ds = parse_int_list(dlist);
            else
                for (std::int64_t dd = 1; dd <= dmax; dd = dd < 10 ? dd + 1 : dd * 2)
                    ds.push_back(dd);
            if (ds.back() != dmax && dlist.empty())
                ds.push_back(dmax);
            auto rows = convergence_table(prof, ds, KRule::parse(rule), cfg.brute_cap);
            out << kHeader << "\n# Cal = " << calabi(prof).str() << "\nd,k,estimate,err,lo,hi,method\n";
            for (const auto& r : rows)
                out << fmt::format("{},{},{},{},{},{},{}\n", r.d, r.k, r.estimate.str(), format_double(r.error),
                                   r.lo.str(), r.hi.str(), r.method);
        } else if (iso_cmd->parsed()) {
            TwistProfile prof = load_profile(cfg.profile);
            auto rep = isoperimetric_report(prof, samples, iso_dmax, seed);
            bool ok_b = rep.boundary_rel_error <= 1e-6;
            bool ok_l = rep.worst_length_rel_error <= 1e-6;
            out << kHeader << "\ncheck,value,status\n";
            out << "boundary_length," << format_double(rep.boundary_length) << ",\n";
            out << "boundary_expected," << format_double(rep.boundary_expected) << ",\n";
            out << "boundary_rel_error," << format_double(rep.boundary_rel_error) << ',' << (ok_b ? "ok" : "FAIL")
                << '\n';
            out << "paths," << rep.paths << ",\n";
            out << "length_identity_worst_rel_error," << format_double(rep.worst_length_rel_error) << ','
                << (ok_l ? "ok" : "FAIL") << '\n';
            out << "isoperimetric_violations," << rep.isoperimetric_violations << ','
                << (rep.isoperimetric_violations ? "FAIL" : "ok") << '\n';
            out << "step2_violations," << rep.step2_violations << ',' << (rep.step2_violations ? "FAIL" : "ok")
                << '\n';
            if (!ok_b || !ok_l || rep.isoperimetric_violations || rep.step2_violations)
                throw Violations("isoperimetric checks failed");
        } else if (spectrum_cmd->parsed()) {
            TwistProfile prof = load_profile(cfg.profile);
            auto [a, b] = parse_window(window);
            SpectrumWindow w = spec_d(prof, d, a, b);
            out << kHeader << "\n# min_gap = " << format_double(w.min_gap) << "\nd,value\n";
            for (const auto& v : w.values)
                out << d << ',' << v.str() << '\n';
        } else if (twist_cmd->parsed()) {
            DiscTwist f = DiscTwist::parse(fspec);
            std::vector<int> is;
            for (auto i : parse_int_list(ilist))
                is.push_back(static_cast<int>(i));
            std::vector<std::int64_t> ds = dlist.empty() ? std::vector<std::int64_t>{} : parse_int_list(dlist);
            if (ds.empty())
                for (std::int64_t dd : {twist_dmax / 4, twist_dmax / 2, twist_dmax})
                    if (dd >= 1 && (ds.empty() || ds.back() != dd))
                        ds.push_back(dd);
            // i = 0 stands for f itself
            std::vector<int> truncs;
            bool plain = false;
            for (int i : is) {
                if (i == 0)
                    plain = true;
                else
                    truncs.push_back(i);
            }
            out << kHeader << '\n';
            GrowthStudy study = growth_report(f, truncs, ds, cfg.brute_cap);
            out << "# f = " << f.name << ", Calabi of f: "
                << (study.divergent ? std::string("divergent") : format_double(*study.base_calabi)) << '\n';
            for (const auto& note : study.twist_notes)
                out << "# note: " << note << '\n';
            if (plain) {
                if (study.divergent)
                    throw DivergentCalabi("untruncated twist '" + f.name + "' has infinite Calabi invariant");
                auto extra = growth_report(f, {}, ds, cfg.brute_cap);
                study.reports.insert(study.reports.begin(), extra.reports.begin(), extra.reports.end());
            }
            out << "i,Cal_i,d,slope,lo,hi\n";
            for (const auto& rep : study.reports)
                for (const auto& row : rep.rows)
                    out << fmt::format("{},{},{},{},{},{}\n", rep.i, format_double(rep.calabi), row.d,
                                       format_double(row.slope), format_double(row.lo), format_double(row.hi));
        } else if (self_cmd->parsed()) {
            TwistProfile prof = load_profile(cfg.profile);
            out << kHeader << "\ncheck,status,detail\n";
            int failures = run_selftest(prof, std::min(cfg.homology_cap, 4), cfg.brute_cap, out);
            if (failures)
                throw Violations(fmt::format("{} selftest check(s) failed", failures));
        }
    } catch (const Violations& e) {
        out.flush();
        std::cerr << "violation: " << e.what() << '\n';
        return 1;
    } catch (const InvariantViolation& e) {
        out.flush();
        std::cout << "violation,invariant," << e.what() << '\n';
        std::cerr << "violation: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        // bad input, unsatisfiable requests (empty grading, no class, ...)
        out.flush();
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
