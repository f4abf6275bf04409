// Command-line front end: spectra, time series, limiting distributions, and
// the closed-form-vs-spectral verification suite, emitted as text/CSV/JSON.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <ctwalk/ctwalk.hpp>

namespace {

using nlohmann::ordered_json;

// bad flags, labels, files: exit status 2
struct cli_usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_eigenvalue(double v) {
    if (std::abs(v) < 1e-9) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw cli_usage("cannot open output file: " + path);
    out << text;
    if (!out.good()) throw cli_usage("failed writing output file: " + path);
}

struct run_config {
    std::string family = "star";
    std::size_t n = 0;
    std::string edge_list;
    long long source = 0;
    long long target = 0;
    double t_start = 0.0;
    double t_stop = 0.0;
    long long steps = 0;
    std::string kind = "quantum";
    std::string format;
    std::string n_range;
    double degeneracy_tol = 1e-8;
    double inject_error = 0.0;
    std::string output;
    bool vectors = false;
};

ctwalk::graph build_graph(const run_config& cfg, bool n_given) {
    if (cfg.family == "file") {
        if (cfg.edge_list.empty())
            throw cli_usage("--family file requires --edge-list");
        if (n_given) throw cli_usage("--n does not apply to --family file");
        return ctwalk::load_edge_list_file(cfg.edge_list);
    }
    if (!cfg.edge_list.empty())
        throw cli_usage("--edge-list requires --family file");
    if (!n_given) throw cli_usage("--n is required for generated families");
    if (cfg.n < 1) throw cli_usage("--n must be at least 1");
    return cfg.family == "star" ? ctwalk::make_star(cfg.n)
                                : ctwalk::make_complete(cfg.n);
}

// 1-based node labels on the wire, 0-based internally
std::size_t to_index(long long label, std::size_t n, const char* what) {
    if (label < 1 || static_cast<std::size_t>(label) > n)
        throw cli_usage(std::string(what) + " label must be in [1, " +
                        std::to_string(n) + "]");
    return static_cast<std::size_t>(label) - 1;
}

std::pair<std::size_t, std::size_t> parse_n_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
        throw cli_usage("--n-range must look like A:B");
    std::size_t lo = 0, hi = 0;
    try {
        std::size_t used = 0;
        lo = std::stoull(s.substr(0, colon), &used);
        if (used != colon) throw cli_usage("--n-range must look like A:B");
        used = 0;
        std::string rest = s.substr(colon + 1);
        hi = std::stoull(rest, &used);
        if (used != rest.size()) throw cli_usage("--n-range must look like A:B");
    } catch (const cli_usage&) {
        throw;
    } catch (const std::exception&) {
        throw cli_usage("--n-range must look like A:B");
    }
    if (lo < 2 || hi < lo)
        throw cli_usage("--n-range needs 2 <= A <= B");
    return {lo, hi};
}

ordered_json config_json(const run_config& cfg, const char* command,
                         bool n_given) {
    ordered_json j;
    j["command"] = command;
    j["family"] = cfg.family;
    if (cfg.family == "file")
        j["edge_list"] = cfg.edge_list;
    else if (n_given)
        j["n"] = cfg.n;
    return j;
}

int run_spectrum(const run_config& cfg, bool n_given) {
    if (cfg.degeneracy_tol <= 0.0)
        throw cli_usage("--degeneracy-tol must be positive");
    if (cfg.vectors && cfg.format == "csv")
        throw cli_usage("--vectors is not available with csv output");

    const ctwalk::graph g = build_graph(cfg, n_given);
    const auto d = ctwalk::eigendecompose(ctwalk::laplacian(g));
    const auto part = ctwalk::group_eigenspaces(d, cfg.degeneracy_tol);

    std::ostringstream out;
    if (cfg.format == "text") {
        for (std::size_t i = 0; i < part.groups.size(); ++i) {
            if (i) out << ", ";
            out << fmt_eigenvalue(part.representatives[i]) << " (×"
                << part.groups[i].size() << ")";
        }
        out << "\n";
        if (cfg.vectors) {
            for (std::size_t k = 0; k < d.n; ++k) {
                out << "q" << k + 1 << " (E=" << fmt_eigenvalue(d.eigenvalues[k])
                    << "):";
                for (double c : d.vector(k)) out << " " << fmt_eigenvalue(c);
                out << "\n";
            }
        }
    } else if (cfg.format == "csv") {
        out << "eigenvalue,multiplicity\n";
        for (std::size_t i = 0; i < part.groups.size(); ++i)
            out << fmt17(part.representatives[i]) << ","
                << part.groups[i].size() << "\n";
    } else {
        ordered_json j;
        auto conf = config_json(cfg, "spectrum", n_given);
        conf["degeneracy_tol"] = cfg.degeneracy_tol;
        j["config"] = conf;
        ordered_json data = ordered_json::array();
        for (std::size_t i = 0; i < part.groups.size(); ++i) {
            ordered_json rec;
            rec["eigenvalue"] = part.representatives[i];
            rec["multiplicity"] = part.groups[i].size();
            if (cfg.vectors) {
                ordered_json vs = ordered_json::array();
                for (std::size_t k : part.groups[i]) {
                    auto q = d.vector(k);
                    vs.push_back(std::vector<double>(q.begin(), q.end()));
                }
                rec["vectors"] = vs;
            }
            data.push_back(rec);
        }
        j["data"] = data;
        j["provenance"] = "numerical";
        out << j.dump(2) << "\n";
    }
    write_output(out.str(), cfg.output);
    return 0;
}

int run_evolve(const run_config& cfg, bool n_given) {
    const ctwalk::graph g = build_graph(cfg, n_given);
    const std::size_t j = to_index(cfg.source, g.n, "--source");
    const std::size_t k = to_index(cfg.target, g.n, "--target");
    if (cfg.steps < 1) throw cli_usage("--steps must be at least 1");
    if (cfg.t_stop < cfg.t_start)
        throw cli_usage("--t-stop must not be below --t-start");
    if (cfg.steps > 1 && !(cfg.t_stop > cfg.t_start))
        throw cli_usage("--steps > 1 needs --t-stop above --t-start");
    const bool classical = (cfg.kind == "classical");
    if (classical && cfg.t_start < 0.0)
        throw cli_usage("classical evolution needs --t-start >= 0");

    const auto times = ctwalk::linspace(cfg.t_start, cfg.t_stop,
                                        static_cast<std::size_t>(cfg.steps));
    const auto d = ctwalk::eigendecompose(ctwalk::laplacian(g));
    const auto series = ctwalk::evolve_series(
        d, j, k, times,
        classical ? ctwalk::walk_kind::classical : ctwalk::walk_kind::quantum);

    std::ostringstream out;
    if (cfg.format == "csv") {
        out << "t,value\n";
        for (std::size_t i = 0; i < series.times.size(); ++i)
            out << fmt17(series.times[i]) << "," << fmt17(series.values[i])
                << "\n";
    } else {
        ordered_json jj;
        auto conf = config_json(cfg, "evolve", n_given);
        conf["source"] = cfg.source;
        conf["target"] = cfg.target;
        conf["t_start"] = cfg.t_start;
        conf["t_stop"] = cfg.t_stop;
        conf["steps"] = cfg.steps;
        conf["kind"] = cfg.kind;
        jj["config"] = conf;
        ordered_json data = ordered_json::array();
        for (std::size_t i = 0; i < series.times.size(); ++i) {
            ordered_json rec;
            rec["t"] = series.times[i];
            rec["value"] = series.values[i];
            data.push_back(rec);
        }
        jj["data"] = data;
        jj["provenance"] = "numerical";
        out << jj.dump(2) << "\n";
    }
    write_output(out.str(), cfg.output);
    return 0;
}

int run_limit(const run_config& cfg, bool n_given, bool source_given,
              bool target_given) {
    if (cfg.degeneracy_tol <= 0.0)
        throw cli_usage("--degeneracy-tol must be positive");

    std::ostringstream out;
    if (!cfg.n_range.empty()) {
        // closed-form sweep of the four star transition classes
        if (cfg.family != "star")
            throw cli_usage("--n-range sweeps are star-family only");
        if (n_given || source_given || target_given)
            throw cli_usage("--n-range excludes --n, --source and --target");
        auto [lo, hi] = parse_n_range(cfg.n_range);
        using ctwalk::star_limiting_probability;
        using ctwalk::star_pair_kind;
        if (cfg.format == "csv") {
            out << "n,chi_11,chi_22,chi_21,chi_32\n";
            for (std::size_t n = lo; n <= hi; ++n) {
                out << n << ","
                    << fmt17(star_limiting_probability(
                           star_pair_kind::central_return, n))
                    << ","
                    << fmt17(star_limiting_probability(star_pair_kind::leaf_return,
                                                       n))
                    << ","
                    << fmt17(star_limiting_probability(
                           star_pair_kind::central_to_leaf, n))
                    << ",";
                // no third leaf exists at n=2, so that cell stays empty
                if (n >= 3)
                    out << fmt17(star_limiting_probability(
                        star_pair_kind::leaf_to_other_leaf, n));
                out << "\n";
            }
        } else {
            ordered_json jj;
            auto conf = config_json(cfg, "limit", false);
            conf["n_range"] = cfg.n_range;
            conf["degeneracy_tol"] = cfg.degeneracy_tol;
            jj["config"] = conf;
            ordered_json data = ordered_json::array();
            for (std::size_t n = lo; n <= hi; ++n) {
                ordered_json rec;
                rec["n"] = n;
                rec["chi_11"] = star_limiting_probability(
                    star_pair_kind::central_return, n);
                rec["chi_22"] =
                    star_limiting_probability(star_pair_kind::leaf_return, n);
                rec["chi_21"] = star_limiting_probability(
                    star_pair_kind::central_to_leaf, n);
                if (n >= 3)
                    rec["chi_32"] = star_limiting_probability(
                        star_pair_kind::leaf_to_other_leaf, n);
                else
                    rec["chi_32"] = nullptr;
                data.push_back(rec);
            }
            jj["data"] = data;
            jj["provenance"] = "eq12";
            out << jj.dump(2) << "\n";
        }
        write_output(out.str(), cfg.output);
        return 0;
    }

    if (source_given != target_given)
        throw cli_usage("--source and --target go together");

    const ctwalk::graph g = build_graph(cfg, n_given);
    std::string provenance = "numerical";

    if (source_given) {
        const std::size_t j = to_index(cfg.source, g.n, "--source");
        const std::size_t k = to_index(cfg.target, g.n, "--target");
        double value = 0.0;
        if (cfg.family == "star" && g.n >= 2) {
            auto kind = ctwalk::classify_star_pair(g.n, j, k);
            value = ctwalk::star_limiting_probability(kind, g.n);
            provenance = ctwalk::limiting_formula_id(kind);
        } else {
            const auto d = ctwalk::eigendecompose(ctwalk::laplacian(g));
            const auto part = ctwalk::group_eigenspaces(d, cfg.degeneracy_tol);
            value = ctwalk::limiting_probability(d, part, j, k);
        }
        if (cfg.format == "csv") {
            out << "source,target,value\n";
            out << cfg.source << "," << cfg.target << "," << fmt17(value) << "\n";
        } else {
            ordered_json jj;
            auto conf = config_json(cfg, "limit", n_given);
            conf["source"] = cfg.source;
            conf["target"] = cfg.target;
            conf["degeneracy_tol"] = cfg.degeneracy_tol;
            jj["config"] = conf;
            ordered_json rec;
            rec["source"] = cfg.source;
            rec["target"] = cfg.target;
            rec["value"] = value;
            jj["data"] = ordered_json::array({rec});
            jj["provenance"] = provenance;
            out << jj.dump(2) << "\n";
        }
    } else {
        // no pair requested: emit the full matrix
        const auto d = ctwalk::eigendecompose(ctwalk::laplacian(g));
        const auto part = ctwalk::group_eigenspaces(d, cfg.degeneracy_tol);
        const auto chi = ctwalk::limiting_matrix(d, part);
        if (cfg.format == "csv") {
            out << "source,target,value\n";
            for (std::size_t jj = 0; jj < g.n; ++jj)
                for (std::size_t kk = 0; kk < g.n; ++kk)
                    out << jj + 1 << "," << kk + 1 << ","
                        << fmt17(chi[kk * g.n + jj]) << "\n";
        } else {
            ordered_json jj;
            auto conf = config_json(cfg, "limit", n_given);
            conf["degeneracy_tol"] = cfg.degeneracy_tol;
            jj["config"] = conf;
            ordered_json data = ordered_json::array();
            for (std::size_t jx = 0; jx < g.n; ++jx)
                for (std::size_t kx = 0; kx < g.n; ++kx) {
                    ordered_json rec;
                    rec["source"] = jx + 1;
                    rec["target"] = kx + 1;
                    rec["value"] = chi[kx * g.n + jx];
                    data.push_back(rec);
                }
            jj["data"] = data;
            jj["provenance"] = provenance;
            out << jj.dump(2) << "\n";
        }
    }
    write_output(out.str(), cfg.output);
    return 0;
}

int run_verify(const run_config& cfg) {
    if (cfg.family == "file")
        throw cli_usage("verify covers the star and complete families only");
    if (cfg.degeneracy_tol <= 0.0)
        throw cli_usage("--degeneracy-tol must be positive");
    auto [lo, hi] = parse_n_range(cfg.n_range.empty() ? "2:64" : cfg.n_range);
    if (hi > 512) throw cli_usage("--n-range is capped at 512");

    ctwalk::verify_options opts;
    opts.n_lo = lo;
    opts.n_hi = hi;
    opts.degeneracy_tol = cfg.degeneracy_tol;
    opts.inject_error = cfg.inject_error;
    const auto report = ctwalk::run_verification(
        cfg.family == "star" ? ctwalk::graph_family::star
                             : ctwalk::graph_family::complete,
        opts);

    std::ostringstream out;
    if (cfg.format == "text") {
        out << "verification: family=" << report.family << " n=" << report.n_lo
            << ".." << report.n_hi << "\n";
        for (const auto& c : report.checks) {
            char line[160];
            std::snprintf(line, sizeof line,
                          "  %-28s max deviation %-12.5g tolerance %-8g %s\n",
                          c.name.c_str(), c.max_deviation, c.tolerance,
                          c.pass ? "PASS" : "FAIL");
            out << line;
        }
        out << "overall: " << (report.pass ? "PASS" : "FAIL") << "\n";
    } else if (cfg.format == "csv") {
        out << "check,max_deviation,tolerance,pass\n";
        for (const auto& c : report.checks)
            out << c.name << "," << fmt17(c.max_deviation) << ","
                << fmt17(c.tolerance) << "," << (c.pass ? 1 : 0) << "\n";
    } else {
        ordered_json jj;
        ordered_json conf;
        conf["command"] = "verify";
        conf["family"] = report.family;
        conf["n_range"] = std::to_string(report.n_lo) + ":" +
                          std::to_string(report.n_hi);
        conf["degeneracy_tol"] = cfg.degeneracy_tol;
        jj["config"] = conf;
        ordered_json data;
        ordered_json checks = ordered_json::array();
        for (const auto& c : report.checks) {
            ordered_json rec;
            rec["name"] = c.name;
            rec["max_deviation"] = c.max_deviation;
            rec["tolerance"] = c.tolerance;
            rec["pass"] = c.pass;
            checks.push_back(rec);
        }
        data["checks"] = checks;
        data["pass"] = report.pass;
        jj["data"] = data;
        jj["provenance"] = "numerical";
        out << jj.dump(2) << "\n";
    }
    write_output(out.str(), cfg.output);
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuous-time quantum and classical walks on graphs"};
    app.require_subcommand(1);

    run_config sc, ec, lc, vc;
    sc.format = "text";
    ec.format = "csv";
    lc.format = "csv";
    vc.format = "text";

    auto add_family = [](CLI::App* cmd, run_config& cfg,
                         const std::vector<std::string>& allowed) {
        cmd->add_option("--family", cfg.family, "graph family")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };
    auto add_format = [](CLI::App* cmd, run_config& cfg,
                         const std::vector<std::string>& allowed) {
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "eigenvalues with multiplicities, optionally eigenvectors");
    add_family(spectrum, sc, {"star", "complete", "file"});
    auto* sc_n = spectrum->add_option("--n", sc.n, "node count");
    spectrum->add_option("--edge-list", sc.edge_list, "edge list file");
    spectrum->add_option("--degeneracy-tol", sc.degeneracy_tol,
                         "eigenvalue grouping tolerance")
        ->capture_default_str();
    add_format(spectrum, sc, {"text", "csv", "json"});
    spectrum->add_flag("--vectors", sc.vectors, "include eigenvectors");
    spectrum->add_option("--output", sc.output, "write here instead of stdout");

    CLI::App* evolve = app.add_subcommand(
        "evolve", "transition probability over a time grid");
    add_family(evolve, ec, {"star", "complete", "file"});
    auto* ec_n = evolve->add_option("--n", ec.n, "node count");
    evolve->add_option("--edge-list", ec.edge_list, "edge list file");
    evolve->add_option("--source", ec.source, "starting node (1-based)")
        ->required();
    evolve->add_option("--target", ec.target, "ending node (1-based)")
        ->required();
    evolve->add_option("--t-start", ec.t_start, "first sample time")
        ->capture_default_str();
    evolve->add_option("--t-stop", ec.t_stop, "last sample time")->required();
    evolve->add_option("--steps", ec.steps, "number of samples")->required();
    evolve->add_option("--kind", ec.kind, "walk kind")
        ->check(CLI::IsMember({"classical", "quantum"}))
        ->capture_default_str();
    add_format(evolve, ec, {"csv", "json"});
    evolve->add_option("--output", ec.output, "write here instead of stdout");

    CLI::App* limit = app.add_subcommand(
        "limit", "long-time average transition probabilities");
    add_family(limit, lc, {"star", "complete", "file"});
    auto* lc_n = limit->add_option("--n", lc.n, "node count");
    limit->add_option("--edge-list", lc.edge_list, "edge list file");
    limit->add_option("--n-range", lc.n_range,
                      "sweep sizes A:B instead of one graph");
    auto* lc_src = limit->add_option("--source", lc.source,
                                     "starting node (1-based)");
    auto* lc_tgt = limit->add_option("--target", lc.target,
                                     "ending node (1-based)");
    limit->add_option("--degeneracy-tol", lc.degeneracy_tol,
                      "eigenvalue grouping tolerance")
        ->capture_default_str();
    add_format(limit, lc, {"csv", "json"});
    limit->add_option("--output", lc.output, "write here instead of stdout");

    CLI::App* verify = app.add_subcommand(
        "verify", "closed-form vs spectral cross-validation suite");
    add_family(verify, vc, {"star", "complete"});
    verify->add_option("--n-range", vc.n_range, "size range A:B")
        ->default_val("2:64");
    verify->add_option("--degeneracy-tol", vc.degeneracy_tol,
                       "eigenvalue grouping tolerance")
        ->capture_default_str();
    add_format(verify, vc, {"text", "csv", "json"});
    verify->add_option("--output", vc.output, "write here instead of stdout");
    verify->add_option("--inject-error", vc.inject_error, "")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(sc, sc_n->count() > 0);
        if (evolve->parsed()) return run_evolve(ec, ec_n->count() > 0);
        if (limit->parsed())
            return run_limit(lc, lc_n->count() > 0, lc_src->count() > 0,
                             lc_tgt->count() > 0);
        if (verify->parsed()) return run_verify(vc);
    } catch (const cli_usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ctwalk::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
