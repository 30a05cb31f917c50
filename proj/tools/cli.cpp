#include "cli.hpp"

#include "riesz/analysis.hpp"
#include "riesz/errors.hpp"
#include "riesz/genfunc.hpp"
#include "riesz/measure.hpp"
#include "riesz/schur.hpp"
#include "riesz/walk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace riesz::cli {
namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<std::int64_t, double, std::string, bool>;

constexpr double kNormTolerance = 1e-12;
constexpr double kRowSumTolerance = 1e-9;
constexpr double kReturnTolerance = 1e-9;
constexpr double kZeroPatternTolerance = 1e-18;
constexpr double kOriginMassTolerance = 1e-9;
constexpr double kLeakageTolerance = 1e-9;
constexpr double kEpsilonBound = 0.03;
constexpr double kSelfSimilarityTolerance = 1e-9;

struct Check {
    std::string name;
    double measured = 0;
    double threshold = 0;
    bool pass = false;
};

struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<Check> checks;
    bool checks_are_primary = false; ///< CSV prints the checks table
};

struct RunConfig {
    std::string command;
    int m = 4;
    std::optional<std::int64_t> T;
    std::vector<int> n;
    std::int64_t max = 20;
    std::vector<std::int64_t> at;
    std::optional<std::int64_t> upto;
    double alpha_re = 1, alpha_im = 0, beta_re = 0, beta_im = 0;
    std::string precision;
    std::size_t depth = 0;
    std::string output = "csv";
    std::string out_path;

    Amplitude alpha() const { return {alpha_re, alpha_im}; }
    Amplitude beta() const { return {beta_re, beta_im}; }
    InitialState initial() const { return {alpha(), beta()}; }

    std::int64_t horizon(std::int64_t fallback) const { return T.value_or(fallback); }

    void validate() const
    {
        if (m < 2)
            throw ArgumentError("--m must be at least 2, got " + std::to_string(m));
        if (T && *T < 0)
            throw ArgumentError("--T must be non-negative, got " + std::to_string(*T));
        if (max < 0)
            throw ArgumentError("--max must be non-negative, got " + std::to_string(max));
        if (upto && *upto < 0)
            throw ArgumentError("--upto must be non-negative, got " + std::to_string(*upto));
        for (auto t : at)
            if (t < 0)
                throw ArgumentError("--at times must be non-negative, got " + std::to_string(t));
        for (int k : n)
            if (k < 1 || k > 12)
                throw ArgumentError("--n must lie in [1, 12], got " + std::to_string(k));
        const double norm = std::norm(alpha()) + std::norm(beta());
        if (std::abs(norm - 1.0) > kNormTolerance) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%.17g", norm);
            throw ArgumentError("initial state must satisfy |alpha|^2 + |beta|^2 = 1 within 1e-12, got " +
                                std::string(buf));
        }
    }

    Json to_json() const
    {
        Json j;
        j["command"] = command;
        j["m"] = m;
        if (T)
            j["T"] = *T;
        if (!n.empty())
            j["n"] = n;
        j["max"] = max;
        if (!at.empty())
            j["at"] = at;
        if (upto)
            j["upto"] = *upto;
        j["alpha"] = {alpha_re, alpha_im};
        j["beta"] = {beta_re, beta_im};
        j["precision"] = precision.empty() ? "default" : precision;
        j["depth"] = depth;
        j["output"] = output;
        return j;
    }
};

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_cell(const Cell& c)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>)
                return v;
            else if constexpr (std::is_same_v<T, bool>)
                return v ? "true" : "false";
            else if constexpr (std::is_same_v<T, double>)
                return format_double(v);
            else
                return std::to_string(v);
        },
        c);
}

Json json_cell(const Cell& c)
{
    return std::visit([](const auto& v) { return Json(v); }, c);
}

void write_csv(std::ostream& os, const Report& r)
{
    auto line = [&os](const auto& cells, auto&& fmt) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "," : "") << fmt(cells[i]);
        os << '\n';
    };
    if (r.checks_are_primary) {
        os << "name,measured,threshold,pass\n";
        for (const auto& c : r.checks)
            os << c.name << ',' << format_double(c.measured) << ',' << format_double(c.threshold) << ','
               << (c.pass ? "true" : "false") << '\n';
        return;
    }
    line(r.columns, [](const std::string& s) { return s; });
    for (const auto& row : r.rows)
        line(row, csv_cell);
}

void write_json(std::ostream& os, const RunConfig& cfg, const Report& r)
{
    Json env;
    env["config"] = cfg.to_json();
    Json records = Json::array();
    for (const auto& row : r.rows) {
        Json rec = Json::object();
        for (std::size_t i = 0; i < r.columns.size(); ++i)
            rec[r.columns[i]] = json_cell(row[i]);
        records.push_back(std::move(rec));
    }
    env["records"] = std::move(records);
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"measured", c.measured}, {"threshold", c.threshold}, {"pass", c.pass}});
    env["checks"] = std::move(checks);
    os << env.dump(2) << '\n';
}

Precision resolve_precision(const RunConfig& cfg, Precision fallback)
{
    if (cfg.precision == "exact")
        return Precision::exact;
    if (cfg.precision == "double")
        return Precision::real;
    return fallback;
}

void require_riesz(const RunConfig& cfg)
{
    if (cfg.m != 4)
        throw ArgumentError("this check is stated for the Riesz walk: --m must be 4, got " + std::to_string(cfg.m));
}

/// Runs job(i) for i in [0, count) on worker threads and returns results in index order.
template <class Job>
auto fan_out(std::size_t count, Job job) -> std::vector<decltype(job(std::size_t{}))>
{
    std::vector<decltype(job(std::size_t{}))> results(count);
    std::vector<std::exception_ptr> failures(count);
    const long long last = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < last; ++i) {
        try {
            results[static_cast<std::size_t>(i)] = job(static_cast<std::size_t>(i));
        } catch (...) {
            failures[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& f : failures)
        if (f)
            std::rethrow_exception(f);
    return results;
}

/// mu_t(0) predicted without simulation: the return law for m >= 3,
/// the moment formula for m = 2.
double origin_prediction(std::int64_t t, const RunConfig& cfg)
{
    if (cfg.m >= 3)
        return return_prob_closed_form(t, cfg.alpha(), cfg.beta(), cfg.m);
    return origin_amplitude_moments(t, cfg.alpha(), cfg.beta(), MeasureSpec(cfg.m)).norm_squared();
}

Report run_moments(const RunConfig& cfg)
{
    const MeasureSpec spec(cfg.m);
    Report r;
    r.columns = {"j", "mu"};
    for (std::int64_t j = 0; j <= cfg.max; ++j)
        r.rows.push_back({j, moment(j, spec).get_str()});
    return r;
}

Report run_verblunsky(const RunConfig& cfg)
{
    const MeasureSpec spec(cfg.m);
    const auto count = static_cast<std::size_t>(cfg.max) + 1;
    const auto seq = verblunsky_parameters(spec, count, resolve_precision(cfg, Precision::exact));
    Report r;
    r.columns = {"k", "alpha_k"};
    for (std::size_t k = 0; k < seq.size(); ++k) {
        Cell value = seq.field() == Field::exact ? Cell(seq.exact_alpha(k).get_str()) : Cell(seq.alpha(k));
        r.rows.push_back({static_cast<std::int64_t>(k), std::move(value)});
    }
    if (auto end = seq.terminated_at())
        r.checks.push_back({"terminated_at", static_cast<double>(*end), static_cast<double>(count), true});
    return r;
}

Report run_evolve(const RunConfig& cfg)
{
    const auto T = static_cast<std::size_t>(cfg.horizon(20));
    const WalkOperator op(MeasureSpec(cfg.m), T, resolve_precision(cfg, Precision::real));
    std::optional<WalkState> last;
    evolve(cfg.initial(), op, T, [&](const WalkState& s) {
        if (s.time() == T)
            last = s;
    });
    Report r;
    r.columns = {"t", "x", "L_re", "L_im", "R_re", "R_im"};
    const auto t = static_cast<std::int64_t>(T);
    for (std::size_t x = 0; x <= last->support_end(); ++x) {
        const auto& s = (*last)[x];
        r.rows.push_back({t, static_cast<std::int64_t>(x), s.left.real(), s.left.imag(), s.right.real(),
                          s.right.imag()});
    }
    const double drift = std::abs(last->norm_squared() - 1.0);
    r.checks.push_back({"norm_drift", drift, kNormTolerance, drift <= kNormTolerance});
    return r;
}

Report run_distribution(const RunConfig& cfg)
{
    std::vector<std::int64_t> times;
    if (!cfg.at.empty()) {
        times = cfg.at;
        std::sort(times.begin(), times.end());
        times.erase(std::unique(times.begin(), times.end()), times.end());
    } else if (cfg.upto) {
        for (std::int64_t t = 0; t <= *cfg.upto; ++t)
            times.push_back(t);
    } else {
        times.push_back(cfg.horizon(20));
    }
    const auto horizon = static_cast<std::size_t>(times.back());
    const WalkOperator op(MeasureSpec(cfg.m), horizon, resolve_precision(cfg, Precision::real));

    Report r;
    r.columns = {"t", "x", "prob_L", "prob_R", "prob"};
    double worst = 0;
    std::size_t next = 0;
    evolve(cfg.initial(), op, horizon, [&](const WalkState& s) {
        if (next >= times.size() || static_cast<std::int64_t>(s.time()) != times[next])
            return;
        ++next;
        double sum = 0;
        for (std::size_t x = 0; x <= s.support_end(); ++x) {
            const double pl = std::norm(s[x].left);
            const double pr = std::norm(s[x].right);
            sum += pl + pr;
            r.rows.push_back({static_cast<std::int64_t>(s.time()), static_cast<std::int64_t>(x), pl, pr, pl + pr});
        }
        worst = std::max(worst, std::abs(sum - 1.0));
    });
    r.checks.push_back({"max_row_sum_deviation", worst, kRowSumTolerance, worst <= kRowSumTolerance});
    return r;
}

Report run_return_prob(const RunConfig& cfg)
{
    const auto T = static_cast<std::size_t>(cfg.horizon(20));
    const WalkOperator op(MeasureSpec(cfg.m), T, resolve_precision(cfg, Precision::real));
    Report r;
    r.columns = {"t", "prob", "closed_form", "abs_diff"};
    double worst = 0;
    evolve(cfg.initial(), op, T, [&](const WalkState& s) {
        const auto t = static_cast<std::int64_t>(s.time());
        const double sim = probability(s, 0);
        const double expected = origin_prediction(t, cfg);
        const double diff = std::abs(sim - expected);
        worst = std::max(worst, diff);
        r.rows.push_back({t, sim, expected, diff});
    });
    r.checks.push_back({"max_abs_diff", worst, kReturnTolerance, worst <= kReturnTolerance});
    return r;
}

Report run_genfunc_origin(const RunConfig& cfg)
{
    const MeasureSpec spec(cfg.m);
    const auto order = static_cast<std::size_t>(cfg.horizon(20));
    const auto psi = psi_hat_origin(spec, order, cfg.depth);
    Report r;
    r.columns = {"n", "coefficient", "moment", "match"};
    std::size_t mismatches = 0;
    for (std::size_t n = 0; n <= order; ++n) {
        const Rational mu = moment(static_cast<std::int64_t>(n), spec);
        const bool match = psi[n] == mu;
        mismatches += match ? 0 : 1;
        r.rows.push_back({static_cast<std::int64_t>(n), psi[n].get_str(), mu.get_str(), match});
    }
    r.checks.push_back({"mismatches", static_cast<double>(mismatches), 0.0, mismatches == 0});
    return r;
}

Report run_sets(const RunConfig& cfg)
{
    const int n = cfg.n.empty() ? 3 : cfg.n.front();
    Report r;
    r.columns = {"set", "n", "value"};
    const std::int64_t nn = n;
    for (auto x : support_set_K(n))
        r.rows.push_back({std::string("K"), nn, std::to_string(x)});
    for (const auto& v : support_set_Ktilde(n))
        r.rows.push_back({std::string("Ktilde"), nn, v.get_str()});
    for (const auto& v : cantor_R(n))
        r.rows.push_back({std::string("R"), nn, v.get_str()});
    for (const auto& v : quarter_M(n))
        r.rows.push_back({std::string("M"), nn, v.get_str()});
    return r;
}

struct TheoremRun {
    std::vector<std::vector<Cell>> rows;
    double max_diff = 0;
    double max_zero = 0;
};

Report run_check_theorem(const RunConfig& cfg)
{
    if (cfg.m < 3)
        throw ArgumentError("the return law needs --m >= 3, got " + std::to_string(cfg.m));
    const auto T = static_cast<std::size_t>(cfg.horizon(1365));
    const MeasureSpec spec(cfg.m);
    const WalkOperator op(spec, T, resolve_precision(cfg, Precision::real));

    struct Case {
        std::string label;
        InitialState initial;
    };
    std::vector<Case> cases{{"basis", InitialState{}}};
    if (cfg.alpha() != Amplitude(1.0, 0.0) || cfg.beta() != Amplitude(0.0, 0.0))
        cases.push_back({"config", cfg.initial()});

    auto runs = fan_out(cases.size(), [&](std::size_t i) {
        TheoremRun run;
        const auto& c = cases[i];
        evolve(c.initial, op, T, [&](const WalkState& s) {
            const auto t = static_cast<std::int64_t>(s.time());
            const double sim = probability(s, 0);
            const double expected = return_prob_closed_form(t, c.initial.alpha, c.initial.beta, cfg.m);
            const double diff = std::abs(sim - expected);
            run.max_diff = std::max(run.max_diff, diff);
            if (expected == 0.0)
                run.max_zero = std::max(run.max_zero, sim);
            run.rows.push_back({c.label, t, sim, expected, diff});
        });
        return run;
    });

    Report r;
    r.checks_are_primary = true;
    r.columns = {"initial", "t", "prob", "closed_form", "abs_diff"};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        auto& run = runs[i];
        r.rows.insert(r.rows.end(), run.rows.begin(), run.rows.end());
        r.checks.push_back({"max_abs_diff_" + cases[i].label, run.max_diff, kReturnTolerance,
                            run.max_diff <= kReturnTolerance});
        r.checks.push_back({"zero_pattern_" + cases[i].label, run.max_zero, kZeroPatternTolerance,
                            run.max_zero < kZeroPatternTolerance});
    }
    return r;
}

std::vector<double> riesz_row(std::int64_t t, Precision precision)
{
    const WalkOperator op(MeasureSpec::riesz(), static_cast<std::size_t>(t), precision);
    const std::size_t times[] = {static_cast<std::size_t>(t)};
    return distributions_at(op, times).front();
}

std::int64_t pow4(int n)
{
    return std::int64_t{1} << (2 * n);
}

Report run_check_distribution(const RunConfig& cfg)
{
    require_riesz(cfg);
    const std::vector<int> ns = cfg.n.empty() ? std::vector<int>{3} : cfg.n;
    const auto precision = resolve_precision(cfg, Precision::real);
    auto reports = fan_out(ns.size(), [&](std::size_t i) {
        return check_conjecture_distribution(ns[i], riesz_row(pow4(ns[i]), precision));
    });

    Report r;
    r.checks_are_primary = true;
    r.columns = {"n", "x", "nu", "epsilon"};
    for (const auto& rep : reports) {
        const std::int64_t n = rep.n;
        for (const auto& site : rep.sites)
            r.rows.push_back({n, site.x, site.nu, site.epsilon});
        const std::string tag = "_n" + std::to_string(rep.n);
        const double mass_dev = std::abs(rep.origin_mass - 0.25);
        r.checks.push_back({"origin_mass_deviation" + tag, mass_dev, kOriginMassTolerance,
                            mass_dev <= kOriginMassTolerance});
        r.checks.push_back(
            {"max_leakage" + tag, rep.max_leakage, kLeakageTolerance, rep.max_leakage <= kLeakageTolerance});
        r.checks.push_back({"max_abs_epsilon" + tag, rep.max_abs_epsilon, kEpsilonBound,
                            rep.max_abs_epsilon < kEpsilonBound && !rep.any_exact_epsilon});
    }
    return r;
}

Report run_check_selfsim(const RunConfig& cfg)
{
    require_riesz(cfg);
    const std::int64_t tmax = cfg.horizon(128);
    if (tmax < 1)
        throw ArgumentError("--T must be at least 1 for conjecture-selfsim");
    std::vector<std::int64_t> ts;
    for (std::int64_t t = 1; t <= tmax; t *= 2)
        ts.push_back(t);

    std::vector<std::size_t> times;
    for (auto t : ts) {
        times.push_back(static_cast<std::size_t>(2 * t));
        times.push_back(static_cast<std::size_t>(8 * t));
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    const WalkOperator op(MeasureSpec::riesz(), times.back(), resolve_precision(cfg, Precision::real));
    const auto rows = distributions_at(op, times);
    auto row_at = [&](std::int64_t t) -> const std::vector<double>& {
        const auto it = std::lower_bound(times.begin(), times.end(), static_cast<std::size_t>(t));
        return rows[static_cast<std::size_t>(it - times.begin())];
    };

    Report r;
    r.checks_are_primary = true;
    r.columns = {"t", "deviation"};
    for (auto t : ts) {
        const double dev = check_selfsimilarity(t, row_at(2 * t), row_at(8 * t));
        r.rows.push_back({t, dev});
        r.checks.push_back(
            {"selfsim_t" + std::to_string(t), dev, kSelfSimilarityTolerance, dev <= kSelfSimilarityTolerance});
    }
    return r;
}

Report run_check_limit(const RunConfig& cfg)
{
    require_riesz(cfg);
    const std::vector<int> ns = cfg.n.empty() ? std::vector<int>{2, 3, 4} : cfg.n;
    const auto precision = resolve_precision(cfg, Precision::real);
    auto hists = fan_out(ns.size(), [&](std::size_t i) {
        return limit_histogram(ns[i], riesz_row(pow4(ns[i]), precision));
    });

    Report r;
    r.checks_are_primary = true;
    r.columns = {"n", "position", "mass"};
    for (const auto& h : hists) {
        const std::int64_t n = h.n;
        r.rows.push_back({n, std::string("0"), h.origin_mass});
        for (const auto& p : h.points)
            r.rows.push_back({n, p.position.get_str(), p.mass});
        const std::string tag = "_n" + std::to_string(h.n);
        const double window = std::ldexp(1.0, 2 - 2 * h.n);
        const double mass_dev = std::abs(h.origin_mass - 0.25);
        r.checks.push_back({"origin_mass_deviation" + tag, mass_dev, kOriginMassTolerance,
                            mass_dev <= kOriginMassTolerance});
        r.checks.push_back({"min_support_point" + tag, h.min_support_point, 2.0 / 3.0 - window, h.contained});
        r.checks.push_back({"max_distance_to_ktilde" + tag, h.max_distance_to_ktilde, window, h.converges});
    }
    return r;
}

void add_m(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--m", cfg.m, "fold of the measure (4 = Riesz)")->capture_default_str();
}

void add_T(CLI::App* sub, RunConfig& cfg, const std::string& help)
{
    sub->add_option("--T", cfg.T, help);
}

void add_state(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--alpha-re", cfg.alpha_re, "Re alpha of the initial spinor")->capture_default_str();
    sub->add_option("--alpha-im", cfg.alpha_im, "Im alpha")->capture_default_str();
    sub->add_option("--beta-re", cfg.beta_re, "Re beta")->capture_default_str();
    sub->add_option("--beta-im", cfg.beta_im, "Im beta")->capture_default_str();
}

void add_precision(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--precision", cfg.precision, "Schur arithmetic")
        ->check(CLI::IsMember({"exact", "double"}));
}

void add_n_list(CLI::App* sub, RunConfig& cfg, const std::string& help)
{
    sub->add_option("--n", cfg.n, help)->delimiter(',');
}

void add_output(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--output", cfg.output, "record format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "write records here instead of stdout");
}

using Runner = Report (*)(const RunConfig&);

} // namespace

int execute(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    Runner runner = nullptr;

    CLI::App app{"Quantum walks driven by Riesz-type measures", "walk"};
    app.require_subcommand(1);

    auto bind = [&](CLI::App* sub, Runner fn, std::string name) {
        sub->callback([&runner, &cfg, fn, name = std::move(name)] {
            runner = fn;
            cfg.command = name;
        });
    };

    auto* moments = app.add_subcommand("moments", "moments mu_j, j = 0..max");
    add_m(moments, cfg);
    moments->add_option("--max", cfg.max, "largest index")->capture_default_str();
    add_output(moments, cfg);
    bind(moments, run_moments, "moments");

    auto* verb = app.add_subcommand("verblunsky", "Verblunsky parameters alpha_0..alpha_max");
    add_m(verb, cfg);
    verb->add_option("--max", cfg.max, "largest index")->capture_default_str();
    add_precision(verb, cfg);
    add_output(verb, cfg);
    bind(verb, run_verblunsky, "verblunsky");

    auto* evo = app.add_subcommand("evolve", "amplitudes at time T");
    add_m(evo, cfg);
    add_T(evo, cfg, "time horizon (default 20)");
    add_state(evo, cfg);
    add_precision(evo, cfg);
    add_output(evo, cfg);
    bind(evo, run_evolve, "evolve");

    auto* dist = app.add_subcommand("distribution", "probability rows mu_t(x)");
    add_m(dist, cfg);
    add_T(dist, cfg, "single time (default 20)");
    dist->add_option("--at", cfg.at, "comma-separated times")->delimiter(',');
    dist->add_option("--upto", cfg.upto, "every time 0..upto");
    add_state(dist, cfg);
    add_precision(dist, cfg);
    add_output(dist, cfg);
    bind(dist, run_distribution, "distribution");

    auto* ret = app.add_subcommand("return-prob", "mu_t(0) simulated against the closed form");
    add_m(ret, cfg);
    add_T(ret, cfg, "time horizon (default 20)");
    add_state(ret, cfg);
    add_precision(ret, cfg);
    add_output(ret, cfg);
    bind(ret, run_return_prob, "return-prob");

    auto* gen = app.add_subcommand("genfunc-origin", "origin amplitude series from the continued fraction");
    add_m(gen, cfg);
    add_T(gen, cfg, "series order (default 20)");
    gen->add_option("--depth", cfg.depth, "continued-fraction depth (0 = automatic)");
    add_output(gen, cfg);
    bind(gen, run_genfunc_origin, "genfunc-origin");

    auto* sets = app.add_subcommand("sets", "point sets K_n, Ktilde_n, R_n, M_n");
    sets->add_option("--n", cfg.n, "level (default 3)")->expected(1);
    add_output(sets, cfg);
    bind(sets, run_sets, "sets");

    auto* check = app.add_subcommand("check", "verification reports");
    check->require_subcommand(1);

    auto* thm = check->add_subcommand("theorem", "return law over [0, T]");
    add_m(thm, cfg);
    add_T(thm, cfg, "time horizon (default 1365)");
    add_state(thm, cfg);
    add_precision(thm, cfg);
    add_output(thm, cfg);
    bind(thm, run_check_theorem, "check theorem");

    auto* cd = check->add_subcommand("conjecture-dist", "distribution at time 4^n");
    add_m(cd, cfg);
    add_n_list(cd, cfg, "levels (default 3)");
    add_precision(cd, cfg);
    add_output(cd, cfg);
    bind(cd, run_check_distribution, "check conjecture-dist");

    auto* cs = check->add_subcommand("conjecture-selfsim", "cells at 2t against 8t for t = 1, 2, 4, .., T");
    add_m(cs, cfg);
    add_T(cs, cfg, "largest t (default 128)");
    add_precision(cs, cfg);
    add_output(cs, cfg);
    bind(cs, run_check_selfsim, "check conjecture-selfsim");

    auto* cl = check->add_subcommand("conjecture-limit", "histogram of X_{4^n} / 4^n");
    add_m(cl, cfg);
    add_n_list(cl, cfg, "levels (default 2,3,4)");
    add_precision(cl, cfg);
    add_output(cl, cfg);
    bind(cl, run_check_limit, "check conjecture-limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        cfg.validate();
        const Report report = runner(cfg);

        std::ostringstream buffer;
        if (cfg.output == "json")
            write_json(buffer, cfg, report);
        else
            write_csv(buffer, report);

        if (cfg.out_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(cfg.out_path, std::ios::binary);
            if (!file)
                throw ArgumentError("cannot open --out file '" + cfg.out_path + "'");
            file << buffer.str();
        }
        return kSuccess;
    } catch (const ArgumentError& e) {
        err << "walk: " << e.what() << '\n';
        return kUsageError;
    } catch (const PreconditionError& e) {
        err << "walk: " << e.what() << '\n';
        return kUsageError;
    } catch (const NumericalBreakdown& e) {
        err << "walk: numerical breakdown: " << e.what() << '\n';
        return kNumericalBreakdown;
    } catch (const std::exception& e) {
        err << "walk: " << e.what() << '\n';
        return kNumericalBreakdown;
    }
}

} // namespace riesz::cli
