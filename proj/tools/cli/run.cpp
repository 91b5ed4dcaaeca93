#include "run.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hdconc/density.hpp"
#include "hdconc/error.hpp"
#include "hdconc/metrics.hpp"
#include "hdconc/pca.hpp"
#include "hdconc/simulate.hpp"
#include "hdconc/theory.hpp"

namespace hdconc::cli {

namespace {

Cell opt(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

Cell opt(const std::optional<std::size_t>& v) {
    return v ? Cell{static_cast<std::int64_t>(*v)} : Cell{};
}

Cell integer(std::size_t v) { return static_cast<std::int64_t>(v); }

ExperimentGrid grid_of(const RunConfig& c) {
    ExperimentGrid g;
    g.dims = c.dims;
    g.trials = c.trials;
    g.base_seed = c.seed;
    g.n = c.n;
    g.ks = c.ks;
    g.s = c.s;
    g.t = c.t;
    g.threads = c.threads;
    return g;
}

bool is_simulation(Command c) {
    return c == Command::simulate_minkowski || c == Command::simulate_chebyshev || c == Command::simulate_cosine ||
           c == Command::simulate_pca;
}

Metric metric_of(const RunConfig& c) {
    if (c.metric == "minkowski") {
        return Metric::minkowski(c.k);
    }
    if (c.metric == "chebyshev") {
        return Metric::chebyshev();
    }
    if (c.metric == "cosine") {
        return Metric::cosine();
    }
    throw ParameterError("unknown metric '" + c.metric + "'");
}

QueryPoint query_of(const std::string& spec, const Dataset& data) {
    if (spec == "origin") {
        return QueryPoint::origin(data.n_features());
    }
    if (spec == "centroid") {
        return QueryPoint(data.centroid());
    }
    if (spec.rfind("row:", 0) == 0) {
        std::size_t idx = 0;
        try {
            idx = std::stoul(spec.substr(4));
        } catch (const std::exception&) {
            throw ParameterError("bad row query '" + spec + "'");
        }
        if (idx >= data.n_samples()) {
            throw DimensionError("query row " + std::to_string(idx) + " is out of range");
        }
        const auto row = data.sample(idx);
        return QueryPoint(std::vector<double>(row.begin(), row.end()));
    }
    std::vector<double> coords;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            coords.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw ParameterError("query must be origin, centroid, row:<i> or a coordinate list; got '" + spec + "'");
        }
    }
    return QueryPoint(std::move(coords));
}

Table minkowski_table(const std::vector<ExperimentRow>& rows) {
    Table t{{"dim", "trial", "k", "d_min", "d_max", "rdr", "limit", "lower_bound", "upper_bound"}, {}};
    for (const auto& r : rows) {
        t.add_row({integer(r.dim), integer(r.trial), opt(r.k), r.d_min, r.d_max, opt(r.rdr), opt(r.limit),
                   opt(r.lower_bound), opt(r.upper_bound)});
    }
    return t;
}

Table chebyshev_table(const std::vector<ExperimentRow>& rows) {
    Table t{{"dim", "trial", "n", "d_min", "d_max", "rdr", "mean", "variance", "expected_max", "limit"}, {}};
    for (const auto& r : rows) {
        t.add_row({integer(r.dim), integer(r.trial), integer(r.n), r.d_min, r.d_max, opt(r.rdr), r.mean, r.variance,
                   opt(r.expected_max), opt(r.limit)});
    }
    return t;
}

Table cosine_table(const std::vector<ExperimentRow>& rows) {
    Table t{{"dim", "trial", "n", "d_min", "d_max", "mean", "variance", "limit"}, {}};
    for (const auto& r : rows) {
        t.add_row({integer(r.dim), integer(r.trial), integer(r.n), r.d_min, r.d_max, r.mean, r.variance,
                   opt(r.limit)});
    }
    return t;
}

Table pca_table(const std::vector<ExperimentRow>& rows) {
    Table t{{"dim", "trial", "n", "mean_eigenvalue", "limit", "lambda_max", "zero_count", "pcs_90", "ccr_top_n",
             "ccr_bottom"},
            {}};
    for (const auto& r : rows) {
        t.add_row({integer(r.dim), integer(r.trial), integer(r.n), r.mean, opt(r.limit), r.d_max, opt(r.zero_count),
                   opt(r.pcs_90), opt(r.ccr_top_n), opt(r.ccr_bottom)});
    }
    return t;
}

Table summary_table(const std::vector<ExperimentRow>& rows) {
    Table t{{"dim", "k", "trials", "mean_d_min", "mean_d_max", "mean_rdr", "min_rdr", "max_rdr", "mean_mean",
             "mean_variance"},
            {}};
    for (const auto& s : summarize_trials(rows)) {
        t.add_row({integer(s.dim), opt(s.k), integer(s.trials), s.mean_d_min, s.mean_d_max, opt(s.mean_rdr),
                   opt(s.min_rdr), opt(s.max_rdr), s.mean_mean, s.mean_variance});
    }
    return t;
}

Table simulation_table(const RunConfig& c) {
    const ExperimentGrid grid = grid_of(c);
    std::vector<ExperimentRow> rows;
    Table (*layout)(const std::vector<ExperimentRow>&) = nullptr;
    switch (c.command) {
        case Command::simulate_minkowski:
            rows = run_minkowski_experiment(grid);
            layout = minkowski_table;
            break;
        case Command::simulate_chebyshev:
            rows = run_chebyshev_experiment(grid);
            layout = chebyshev_table;
            break;
        case Command::simulate_cosine:
            rows = run_cosine_experiment(grid);
            layout = cosine_table;
            break;
        default:
            rows = run_pca_experiment(grid);
            layout = pca_table;
            break;
    }
    return c.summary ? summary_table(rows) : layout(rows);
}

Table analyze_table(const RunConfig& c) {
    const Dataset data = load_dataset(*c.input, c.tabular);
    const Metric m = metric_of(c);
    ConcentrationStats st;
    std::string query_label = c.query;
    if (c.pairwise) {
        st = pairwise_cosine_stats(data);
        query_label = "pairwise";
    } else {
        st = concentration_stats(data, query_of(c.query, data), m);
    }
    Table t{{"metric", "k", "query", "dim", "n", "d_min", "d_max", "rdr", "mean", "variance"}, {}};
    t.add_row({m.name(), m.kind() == MetricKind::minkowski ? Cell{m.k()} : Cell{}, query_label, integer(st.dim),
               integer(st.n), st.d_min, st.d_max, opt(st.rdr), st.mean, st.variance});
    return t;
}

Table spectrum_table(const RunConfig& c) {
    const Dataset data = load_dataset(*c.input, c.tabular);
    const EigenSpectrum sp = spectrum_hdlss(data);
    if (c.summary) {
        Table t{{"dim", "n", "total_variance", "lambda_max", "zero_count", "threshold", "pcs_to_threshold",
                 "ccr_first"},
                {}};
        const bool degenerate = sp.ccr.empty();
        t.add_row({integer(data.n_features()), integer(data.n_samples()), sp.total(), sp.largest(),
                   integer(sp.zero_count), c.threshold,
                   degenerate ? Cell{} : integer(pcs_to_reach(sp, c.threshold)),
                   degenerate ? Cell{} : Cell{sp.ccr.front()}});
        return t;
    }
    const auto ccr = ccr_curve(sp, c.ascending);
    Table t{{"component", "eigenvalue", "ccr"}, {}};
    const std::size_t d = sp.eigenvalues.size();
    for (std::size_t i = 0; i < d; ++i) {
        const double value = c.ascending ? sp.eigenvalues[d - 1 - i] : sp.eigenvalues[i];
        t.add_row({integer(i + 1), value, ccr[i]});
    }
    return t;
}

Table density_table(const RunConfig& c) {
    Table t{{"d", "density", "log_density"}, {}};
    for (std::uint64_t d = 1; d <= c.max_dim; ++d) {
        const auto v = sample_density(c.n, c.intervals, d);
        t.add_row({static_cast<std::int64_t>(d), v.value, v.log_value});
    }
    return t;
}

Table theory_table(const RunConfig& c) {
    Table t{{"dim", "k", "n", "s", "t", "minkowski_limit", "rdr_lower", "rdr_upper", "chebyshev_expected_max",
             "chebyshev_variance", "cosine_limit", "eigen_mean_limit"},
            {}};
    const bool chebyshev_ok = c.s >= 0.0;
    const double var_x = theory::uniform_variance(c.s, c.t);
    for (std::size_t dim : c.dims) {
        for (double k : c.ks) {
            const auto b = theory::rdr_bounds(k, c.n, dim);
            t.add_row({integer(dim), k, integer(c.n), c.s, c.t, theory::minkowski_normalized_limit(k), b.lower,
                       b.upper, chebyshev_ok ? Cell{theory::chebyshev_expected_max(c.s, c.t, dim)} : Cell{},
                       chebyshev_ok ? Cell{theory::chebyshev_variance(c.s, c.t, dim)} : Cell{},
                       theory::cosine_limit(c.s, c.t), theory::eigen_mean_limit(c.n, var_x)});
        }
    }
    return t;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const NumericalError*>(&e)) {
        return kNumericalFailure;
    }
    if (dynamic_cast<const ParameterError*>(&e)) {
        return kUsage;
    }
    return kDataError;
}

}  // namespace

void validate(const RunConfig& c) {
    auto fail = [](const std::string& msg) { throw ParameterError(msg); };
    if (is_simulation(c.command)) {
        grid_of(c).validate();
        if (c.n < 2) {
            fail("--n must be >= 2");
        }
        if (c.command == Command::simulate_minkowski && c.ks.empty()) {
            fail("--k needs at least one value");
        }
        if (c.command == Command::simulate_chebyshev && c.s < 0.0) {
            fail("simulate-chebyshev requires --s >= 0");
        }
    }
    switch (c.command) {
        case Command::analyze:
        case Command::pca_spectrum:
            if (!c.input) {
                fail("--input is required");
            }
            if (c.tabular.delimiter != "whitespace" && c.tabular.delimiter.size() != 1) {
                fail("--delimiter must be one character, 'tab' or 'whitespace'");
            }
            break;
        case Command::density:
            if (c.n == 0 || c.intervals == 0 || c.max_dim == 0) {
                fail("density arguments must be positive");
            }
            break;
        case Command::theory:
            if (c.dims.empty() || c.ks.empty()) {
                fail("theory needs --dims and --k");
            }
            for (double k : c.ks) {
                if (!(k >= 1.0)) {
                    fail("--k values must be >= 1");
                }
            }
            for (std::size_t d : c.dims) {
                if (d == 0) {
                    fail("--dims values must be positive");
                }
            }
            if (c.n < 2) {
                fail("--n must be >= 2");
            }
            if (!(c.s < c.t)) {
                fail("--s must be below --t");
            }
            break;
        default:
            break;
    }
    if (c.command == Command::analyze) {
        metric_of(c);
        if (c.pairwise && c.metric != "cosine") {
            fail("--pairwise is only defined for --metric cosine");
        }
    }
    if (c.command == Command::pca_spectrum && !(c.threshold > 0.0 && c.threshold <= 1.0)) {
        fail("--threshold must lie in (0, 1]");
    }
}

Table build_table(const RunConfig& c) {
    validate(c);
    switch (c.command) {
        case Command::analyze:
            return analyze_table(c);
        case Command::pca_spectrum:
            return spectrum_table(c);
        case Command::density:
            return density_table(c);
        case Command::theory:
            return theory_table(c);
        default:
            return simulation_table(c);
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        emit_table(build_table(config), config.format, config.output, out);
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Distance concentration and PCA spectrum diagnostics"};
    app.name(args.empty() ? "hdconc" : args.front());
    app.require_subcommand(1);

    std::string format = "csv";
    std::string output;
    std::string input;
    std::string header = "auto";
    std::string label;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", output, "Output file (default: standard output)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_grid = [&](CLI::App* sub, bool with_range) {
        sub->add_option("--n", c.n, "Samples per cell")->capture_default_str();
        sub->add_option("--dims", c.dims, "Comma-separated ascending dimensions")->delimiter(',');
        sub->add_option("--trials", c.trials, "Trials per dimension")->capture_default_str();
        sub->add_option("--seed", c.seed, "Base seed")->capture_default_str();
        sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
        sub->add_flag("--summary", c.summary, "Emit per-dimension trial aggregates");
        if (with_range) {
            sub->add_option("--s", c.s, "Lower coordinate bound")->capture_default_str();
            sub->add_option("--t", c.t, "Upper coordinate bound")->capture_default_str();
        }
        add_output(sub);
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("-i,--input", input, "Delimited text file, one sample per row")->required();
        sub->add_option("--label-col", label, "Label column name or 0-based index");
        sub->add_option("--delimiter", c.tabular.delimiter, "Single character, 'tab' or 'whitespace'");
        sub->add_option("--header", header, "auto, yes or no")->check(CLI::IsMember({"auto", "yes", "no"}));
    };

    auto* mink = app.add_subcommand("simulate-minkowski", "RDR of L_k distances to the origin, U(0,1) data");
    add_grid(mink, false);
    mink->add_option("--k", c.ks, "Comma-separated norm orders")->delimiter(',');

    auto* cheb = app.add_subcommand("simulate-chebyshev", "Chebyshev distances to the origin, U(s,t) data");
    add_grid(cheb, true);

    auto* cosv = app.add_subcommand("simulate-cosine", "Pairwise cosine similarities, U(s,t) data");
    add_grid(cosv, true);

    auto* pcas = app.add_subcommand("simulate-pca", "Covariance spectra of U(s,t) data");
    add_grid(pcas, true);

    auto* analyze = app.add_subcommand("analyze", "Concentration statistics of a dataset file");
    add_input(analyze);
    analyze->add_option("--metric", c.metric, "minkowski, chebyshev or cosine")
        ->check(CLI::IsMember({"minkowski", "chebyshev", "cosine"}));
    analyze->add_option("--k", c.k, "Minkowski order")->capture_default_str();
    analyze->add_option("--query", c.query, "origin, centroid, row:<i> or x1,x2,...")->capture_default_str();
    analyze->add_flag("--pairwise", c.pairwise, "All sample pairs instead of a query (cosine only)");
    add_output(analyze);

    auto* spectrum = app.add_subcommand("pca-spectrum", "Covariance eigenvalues and CCR of a dataset file");
    add_input(spectrum);
    spectrum->add_flag("--ascending", c.ascending, "List eigenvalues smallest first");
    spectrum->add_flag("--summary", c.summary, "One row: zero count and PCs needed for --threshold");
    spectrum->add_option("--threshold", c.threshold, "CCR target for --summary")->capture_default_str();
    add_output(spectrum);

    auto* density = app.add_subcommand("density", "Samples per cell when every feature is cut into intervals");
    std::uint64_t density_n = 10;
    density->add_option("--n", density_n, "Number of samples")->capture_default_str();
    density->add_option("--intervals", c.intervals, "Intervals per feature")->capture_default_str();
    density->add_option("--max-dim", c.max_dim, "Largest dimension")->capture_default_str();
    add_output(density);

    auto* theory_cmd = app.add_subcommand("theory", "Closed-form reference values");
    theory_cmd->add_option("--dims", c.dims, "Comma-separated dimensions")->delimiter(',');
    theory_cmd->add_option("--k", c.ks, "Comma-separated norm orders")->delimiter(',');
    theory_cmd->add_option("--n", c.n, "Sample count")->capture_default_str();
    theory_cmd->add_option("--s", c.s, "Lower coordinate bound")->capture_default_str();
    theory_cmd->add_option("--t", c.t, "Upper coordinate bound")->capture_default_str();
    add_output(theory_cmd);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream o;
        std::ostringstream er;
        const int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? kOk : kUsage;
    }

    if (mink->parsed()) {
        c.command = Command::simulate_minkowski;
    } else if (cheb->parsed()) {
        c.command = Command::simulate_chebyshev;
    } else if (cosv->parsed()) {
        c.command = Command::simulate_cosine;
    } else if (pcas->parsed()) {
        c.command = Command::simulate_pca;
    } else if (analyze->parsed()) {
        c.command = Command::analyze;
    } else if (spectrum->parsed()) {
        c.command = Command::pca_spectrum;
    } else if (density->parsed()) {
        c.command = Command::density;
        c.n = density_n;
    } else {
        c.command = Command::theory;
    }

    if (!input.empty()) {
        c.input = input;
    }
    if (!output.empty()) {
        c.output = output;
    }
    if (!label.empty()) {
        c.tabular.label_column = label;
    }
    if (c.tabular.delimiter == "tab") {
        c.tabular.delimiter = "\t";
    }
    c.tabular.header = header == "yes" ? HeaderMode::present : header == "no" ? HeaderMode::absent : HeaderMode::automatic;
    c.format = format == "json" ? OutputFormat::json : OutputFormat::csv;

    try {
        validate(c);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }
    return run(c, out, err);
}

}  // namespace hdconc::cli
