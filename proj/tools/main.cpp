#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parallel_util.hpp"
#include "qcorr/avgcorr.hpp"
#include "qcorr/channels.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/families.hpp"
#include "qcorr/qstate.hpp"
#include "qcorr/sampling.hpp"
#include "qcorr/state_io.hpp"
#include "qcorr/steering.hpp"
#include "verify_suite.hpp"

namespace {

using namespace qcorr;

// ---------------------------------------------------------------------------
// Formatting and diagnostics
// ---------------------------------------------------------------------------

std::string num17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// JSON slot: finite values as bare numbers, infinities/nan as quoted strings
// (JSON itself has no tokens for them).
std::string jnum(double x) {
    if (std::isfinite(x)) return num17(x);
    if (std::isnan(x)) return "\"nan\"";
    return x > 0 ? "\"inf\"" : "\"-inf\"";
}

const char* jbool(bool v) { return v ? "true" : "false"; }

bool stderr_color() {
    if (std::getenv("NO_COLOR") != nullptr) return false;
    return isatty(fileno(stderr)) != 0;
}

void warn(const std::string& msg) {
    std::fputs(stderr_color() ? "\x1b[33mwarning:\x1b[0m " : "warning: ", stderr);
    std::fputs(msg.c_str(), stderr);
    std::fputc('\n', stderr);
}

void report_error(const std::string& msg) {
    std::fputs(stderr_color() ? "\x1b[31merror:\x1b[0m " : "error: ", stderr);
    std::fputs(msg.c_str(), stderr);
    std::fputc('\n', stderr);
}

// Output target: a path, or stdout for "-".
class Sink {
  public:
    explicit Sink(const std::string& path) : to_stdout_(path.empty() || path == "-") {
        if (!to_stdout_) {
            file_.open(path);
            if (!file_) throw BadSetting("cannot open output file '" + path + "'");
        }
    }
    std::ostream& os() { return to_stdout_ ? std::cout : file_; }
    bool is_stdout() const { return to_stdout_; }

  private:
    std::ofstream file_;
    bool to_stdout_;
};

// ---------------------------------------------------------------------------
// Shared parsing helpers
// ---------------------------------------------------------------------------

DensityMatrix resolve_state(const std::string& arg) {
    if (std::filesystem::exists(std::filesystem::path(arg)))
        return load_state_file(arg, /*require_physical=*/false);
    try {
        return build(parse_family_spec(arg));
    } catch (const BadSetting& e) {
        throw BadSetting("'" + arg + "' is neither an existing state file nor a family spec (" +
                         e.what() + ")");
    }
}

Vec3 parse_c3(const std::string& text) {
    Vec3 c{};
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        const std::size_t comma = text.find(',', pos);
        const bool last = (k == 2);
        if (last != (comma == std::string::npos))
            throw BadSetting("--c expects exactly three comma-separated numbers");
        const std::string tok = text.substr(pos, last ? std::string::npos : comma - pos);
        std::size_t used = 0;
        try {
            c[k] = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw BadSetting("--c component '" + tok + "' is not a number");
        }
        if (used != tok.size())
            throw BadSetting("--c component '" + tok + "' is not a number");
        if (std::abs(c[k]) > 1.0 + 1e-12)
            throw BadSetting("--c components must lie in [-1, 1]");
        pos = comma + 1;
    }
    return c;
}

ChannelKind parse_channel(const std::string& name) {
    if (name == "bitflip") return ChannelKind::BitFlip;
    if (name == "bitphaseflip") return ChannelKind::BitPhaseFlip;
    if (name == "phaseflip") return ChannelKind::PhaseFlip;
    if (name == "gad") return ChannelKind::AmplitudeDamping;
    throw BadSetting("unknown channel '" + name + "'");
}

SamplerSpec parse_sampler(const std::string& name, std::uint64_t seed) {
    if (name == "ginibre4") return {SamplerKind::GinibreMixed, 4, seed};
    if (name == "ginibre2") return {SamplerKind::GinibreMixed, 2, seed};
    if (name == "ginibre1") return {SamplerKind::GinibreMixed, 1, seed};
    if (name == "pure") return {SamplerKind::HaarPure, 4, seed};
    if (name == "belldiag") return {SamplerKind::BellDiagonalUniform, 4, seed};
    throw BadSetting("unknown sampler '" + name + "'");
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeOpts {
    std::string state;
    std::string method = "auto";
    std::int64_t mc_samples = 1000000;
    std::uint64_t seed = 0;
    std::string out = "-";
};

void write_vec3(std::ostream& os, const Vec3& v) {
    os << "[" << jnum(v[0]) << ", " << jnum(v[1]) << ", " << jnum(v[2]) << "]";
}

int run_analyze(const AnalyzeOpts& o) {
    const DensityMatrix rho = resolve_state(o.state);
    if (!rho.physical())
        warn("state is not positive semidefinite (min eigenvalue " +
             num17(rho.min_eigenvalue()) + "); quantities use the formal coefficients");

    const BlochForm b = bloch_decompose(rho);
    const CanonicalCorrelation cc = canonical_correlation(b);

    SigmaResult sig{};
    if (o.method == "auto")
        sig = average_correlation(cc);
    else if (o.method == "single")
        sig = average_correlation_method(cc, SigmaMethod::SingleIntegral);
    else if (o.method == "double")
        sig = average_correlation_method(cc, SigmaMethod::DoubleIntegral);
    else if (o.method == "mc")
        sig = monte_carlo_sigma(b, o.mc_samples, o.seed);
    else
        throw BadSetting("unknown method '" + o.method + "'");

    const SteeringReport rep = steering_report(cc, sig.sigma);

    Sink sink(o.out);
    std::ostream& os = sink.os();
    os << "{\n";
    os << "  \"physical\": " << jbool(rho.physical()) << ",\n";
    os << "  \"r\": ";
    write_vec3(os, b.r);
    os << ",\n  \"s\": ";
    write_vec3(os, b.s);
    os << ",\n  \"T\": [";
    for (int i = 0; i < 3; ++i) {
        os << (i == 0 ? "[" : " [");
        for (int j = 0; j < 3; ++j)
            os << jnum(b.T[i][j]) << (j < 2 ? ", " : "]");
        os << (i < 2 ? ",\n        " : "],\n");
    }
    os << "  \"canonical\": {\"alpha\": " << jnum(cc.alpha) << ", \"beta\": " << jnum(cc.beta)
       << ", \"gamma\": " << jnum(cc.gamma) << "},\n";
    os << "  \"sigma\": {\"value\": " << jnum(sig.sigma) << ", \"method\": \""
       << to_string(sig.method) << "\", \"error\": " << jnum(sig.error_estimate) << "},\n";
    os << "  \"s2\": " << jnum(rep.s2) << ",\n";
    os << "  \"s3\": " << jnum(rep.s3) << ",\n";
    os << "  \"S2\": " << jnum(rep.violation2) << ",\n";
    os << "  \"S3\": " << jnum(rep.violation3) << ",\n";
    os << "  \"chsh_max\": " << jnum(rep.chsh_max) << ",\n";
    os << "  \"sigma_lower\": " << jnum(rep.bounds3.lower) << ",\n";
    os << "  \"sigma_upper\": " << jnum(rep.bounds3.upper) << ",\n";
    os << "  \"classification\": {\"bell_nonlocal\": " << jbool(rep.classification.bell_nonlocal)
       << ", \"steerable3\": " << jbool(rep.classification.steerable3)
       << ", \"nonclassical\": \"" << to_string(rep.classification.nonclassical) << "\"}\n";
    os << "}\n";
    return 0;
}

// ---------------------------------------------------------------------------
// scan: sweep a one-parameter family and tabulate every scalar
// ---------------------------------------------------------------------------

struct ScanOpts {
    std::string family;
    double from = 0.0;
    double to = 1.0;
    int steps = 101;
    std::string variant = "psi+";
    std::string sign = "-";
    std::string out = "-";
};

FamilySpec scan_member(const ScanOpts& o, double t) {
    if (o.family == "werner") return Werner{t, o.sign == "+"};
    if (o.family == "mems") return Mems{t};
    if (o.family == "pure") {
        BellVariant v = BellVariant::PsiPlus;
        if (o.variant == "psi-") v = BellVariant::PsiMinus;
        else if (o.variant == "phi+") v = BellVariant::PhiPlus;
        else if (o.variant == "phi-") v = BellVariant::PhiMinus;
        else if (o.variant != "psi+")
            throw BadSetting("unknown pure-state variant '" + o.variant + "'");
        return PureSchmidt{t, v};
    }
    throw BadSetting("scan supports the one-parameter families werner, pure, mems");
}

int run_scan(const ScanOpts& o) {
    if (o.steps < 2) throw BadSetting("--steps must be at least 2");
    Sink sink(o.out);
    std::ostream& os = sink.os();
    os << "param,alpha,beta,gamma,sigma,s2,s3,S2,S3,lower,upper\n";
    for (int k = 0; k < o.steps; ++k) {
        const double t = o.from + (o.to - o.from) * k / (o.steps - 1);
        const FamilySpec member = scan_member(o, t);
        const CanonicalCorrelation cc = family_expected(member).canonical;
        const SigmaResult sig = average_correlation(cc);
        const SteeringReport rep = steering_report(cc, sig.sigma);
        os << num17(t) << ',' << num17(cc.alpha) << ',' << num17(cc.beta) << ','
           << num17(cc.gamma) << ',' << num17(sig.sigma) << ',' << num17(rep.s2) << ','
           << num17(rep.s3) << ',' << num17(rep.violation2) << ',' << num17(rep.violation3)
           << ',' << num17(rep.bounds3.lower) << ',' << num17(rep.bounds3.upper) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bounds: random-state scatter between the exact boundary curves
// ---------------------------------------------------------------------------

struct BoundsOpts {
    std::string sampler = "ginibre4";
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    std::string out = "-";
    std::string curves;
    int curve_points = 400;
};

struct BoundsRow {
    double s3;
    double sigma;
    double lower;
    double upper;
    bool physical;
    double violation;  // worst over both setting counts
};

void write_curve_files(const std::string& prefix, int points) {
    const double top = std::sqrt(3.0);
    std::ofstream lower_file(prefix + "_lower.csv");
    std::ofstream upper_file(prefix + "_upper.csv");
    if (!lower_file || !upper_file)
        throw BadSetting("cannot open boundary curve files with prefix '" + prefix + "'");
    lower_file << "s3,sigma_lower\n";
    upper_file << "s3,sigma_upper\n";
    for (int k = 0; k < points; ++k) {
        const double s3 = top * k / (points - 1);
        const SigmaBounds bb = sigma_bounds(s3, 3);
        lower_file << num17(s3) << ',' << num17(bb.lower) << '\n';
        upper_file << num17(s3) << ',' << num17(bb.upper) << '\n';
    }
}

std::string curve_prefix_from_out(const std::string& out) {
    const std::string suffix = ".csv";
    if (out.size() > suffix.size() &&
        out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0)
        return out.substr(0, out.size() - suffix.size());
    return out;
}

int run_bounds(const BoundsOpts& o) {
    if (o.samples < 1) throw BadSetting("--samples must be at least 1");
    if (o.curve_points < 2) throw BadSetting("--curve-points must be at least 2");
    const SamplerSpec sp = parse_sampler(o.sampler, o.seed);

    std::vector<BoundsRow> rows(o.samples);
    std::vector<char> errored(o.samples, 0);
    qcorr_tools::parallel_indices(o.samples, [&](std::uint64_t i) {
        try {
            const DensityMatrix rho = sample(sp, i);
            const BlochForm b = bloch_decompose(rho);
            const CanonicalCorrelation cc = canonical_correlation(b);
            const double sigma = average_correlation(cc).sigma;
            const double s3 = degree_of_steerability(cc, 3);
            const double s2 = degree_of_steerability(cc, 2);
            const SigmaBounds b3 = sigma_bounds(std::min(s3, std::sqrt(3.0)), 3);
            const SigmaBounds b2 = sigma_bounds(std::min(s2, std::sqrt(2.0)), 2);
            double v = 0.0;
            v = std::max(v, b3.lower - sigma);
            v = std::max(v, sigma - b3.upper);
            v = std::max(v, b2.lower - sigma);
            v = std::max(v, sigma - b2.upper);
            rows[i] = {s3, sigma, b3.lower, b3.upper, rho.physical(), v};
        } catch (...) {
            errored[i] = 1;
        }
    });
    for (std::uint64_t i = 0; i < o.samples; ++i)
        if (errored[i])
            throw NonConvergent("failed to evaluate sample " + std::to_string(i));

    Sink sink(o.out);
    std::ostream& os = sink.os();
    os << "s3,sigma,lower,upper,physical\n";
    std::uint64_t violations = 0;
    double max_violation = 0.0;
    for (const BoundsRow& row : rows) {
        os << num17(row.s3) << ',' << num17(row.sigma) << ',' << num17(row.lower) << ','
           << num17(row.upper) << ',' << (row.physical ? 1 : 0) << '\n';
        max_violation = std::max(max_violation, row.violation);
        if (row.violation > 1e-7) ++violations;
    }

    std::string prefix = o.curves;
    if (prefix.empty() && !sink.is_stdout()) prefix = curve_prefix_from_out(o.out);
    if (!prefix.empty()) write_curve_files(prefix, o.curve_points);

    // The summary shares stdout only when the CSV went to a file.
    std::ostream& sum = sink.is_stdout() ? std::cerr : std::cout;
    sum << "{\n";
    sum << "  \"sampler\": \"" << o.sampler << "\",\n";
    sum << "  \"samples\": " << o.samples << ",\n";
    sum << "  \"seed\": " << o.seed << ",\n";
    sum << "  \"violations\": " << violations << ",\n";
    sum << "  \"max_violation\": " << jnum(max_violation) << ",\n";
    sum << "  \"tolerance\": 1e-07,\n";
    sum << "  \"includes_two_setting_bounds\": true\n";
    sum << "}\n";

    return max_violation > 1e-6 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// evolve
// ---------------------------------------------------------------------------

struct EvolveOpts {
    std::string c_text;
    std::string channel;
    double gamma = 1.0;
    double kappa_over_gamma = 200.0;
    double tmax = 5.0;
    int steps = 500;
    std::string out = "-";
};

ChannelSpec make_channel(const std::string& name, double gamma, double kappa_over_gamma) {
    const ChannelKind kind = parse_channel(name);
    if (kind == ChannelKind::AmplitudeDamping)
        return ChannelSpec::amplitude_damping(gamma, kappa_over_gamma * gamma);
    return ChannelSpec::unital(kind, gamma);
}

int run_evolve(const EvolveOpts& o) {
    const Vec3 c0 = parse_c3(o.c_text);
    const ChannelSpec spec = make_channel(o.channel, o.gamma, o.kappa_over_gamma);
    const auto rows = trajectory(c0, spec, o.tmax, o.steps);
    if (!rows.front().physical)
        warn("initial coefficients (" + num17(c0[0]) + ", " + num17(c0[1]) + ", " +
             num17(c0[2]) + ") are not a physical Bell-diagonal state; "
             "rows carry physical=0 until the dynamics reaches the physical region");
    Sink sink(o.out);
    std::ostream& os = sink.os();
    os << trajectory_csv_header() << '\n';
    for (const TrajectoryRow& row : rows) os << trajectory_csv_row(row) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// deathtimes
// ---------------------------------------------------------------------------

struct DeathOpts {
    double c = 0.0;
    double gamma = 1.0;
    std::string channel = "phaseflip";
    std::string out = "-";
};

int run_deathtimes(const DeathOpts& o) {
    const ChannelKind kind = parse_channel(o.channel);
    if (kind == ChannelKind::AmplitudeDamping)
        throw BadSetting("deathtimes applies to the unital channels only");
    const ChannelSpec spec = ChannelSpec::unital(kind, o.gamma);
    const DeathTimes dt = death_times_analytic(o.c, spec);

    const Vec3 c0{o.c, o.c, o.c};
    const auto numeric_crossing = [&](CrossQuantity q, double t_analytic) {
        if (!std::isfinite(t_analytic)) return std::numeric_limits<double>::infinity();
        if (t_analytic <= 0.0) return 0.0;
        return threshold_crossing(c0, spec, q, CrossDirection::Decay, 0.0, 2.0 * t_analytic);
    };
    const double n_s2 = numeric_crossing(CrossQuantity::S2, dt.t_s2);
    const double n_s3 = numeric_crossing(CrossQuantity::S3, dt.t_s3);
    const double n_sigma = numeric_crossing(CrossQuantity::Sigma, dt.t_sigma);

    const auto rel = [](double numeric, double analytic) {
        if (!std::isfinite(analytic) || analytic <= 0.0) return 0.0;
        return std::abs(numeric - analytic) / analytic;
    };

    Sink sink(o.out);
    std::ostream& os = sink.os();
    os << "{\n";
    os << "  \"c\": " << jnum(o.c) << ",\n";
    os << "  \"gamma\": " << jnum(o.gamma) << ",\n";
    os << "  \"channel\": \"" << o.channel << "\",\n";
    os << "  \"analytic\": {\"t_s2\": " << jnum(dt.t_s2) << ", \"t_s3\": " << jnum(dt.t_s3)
       << ", \"t_sigma\": " << jnum(dt.t_sigma) << ", \"A\": " << jnum(dt.A) << "},\n";
    os << "  \"numeric\": {\"t_s2\": " << jnum(n_s2) << ", \"t_s3\": " << jnum(n_s3)
       << ", \"t_sigma\": " << jnum(n_sigma) << "},\n";
    os << "  \"rel_diff\": {\"t_s2\": " << jnum(rel(n_s2, dt.t_s2)) << ", \"t_s3\": "
       << jnum(rel(n_s3, dt.t_s3)) << ", \"t_sigma\": " << jnum(rel(n_sigma, dt.t_sigma))
       << "}\n";
    os << "}\n";
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"Average correlation and linear steering analysis for two-qubit states"};
    app.require_subcommand(1);

    std::function<int()> action;

    AnalyzeOpts analyze_opts;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Full scalar report (JSON) for one state");
    analyze->add_option("state", analyze_opts.state,
                        "State file (JSON) or family spec like werner:0.6, "
                        "pure:0.9:psi+, mems:0.5, belldiag:0.8,1,1")
        ->required();
    analyze->add_option("--method", analyze_opts.method,
                        "Evaluation route for the average correlation")
        ->check(CLI::IsMember({"auto", "single", "double", "mc"}))
        ->capture_default_str();
    analyze->add_option("--mc-samples", analyze_opts.mc_samples,
                        "Direction pairs for --method mc")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    analyze->add_option("--seed", analyze_opts.seed, "Random seed for --method mc")
        ->capture_default_str();
    analyze->add_option("--out", analyze_opts.out, "Output path ('-' = stdout)")
        ->capture_default_str();
    analyze->callback([&] { action = [&] { return run_analyze(analyze_opts); }; });

    ScanOpts scan_opts;
    CLI::App* scan = app.add_subcommand(
        "scan", "Sweep a one-parameter family and tabulate all scalars (CSV)");
    scan->add_option("--family", scan_opts.family, "Family to sweep")
        ->check(CLI::IsMember({"werner", "pure", "mems"}))
        ->required();
    scan->add_option("--from", scan_opts.from, "First parameter value")
        ->capture_default_str();
    scan->add_option("--to", scan_opts.to, "Last parameter value")->capture_default_str();
    scan->add_option("--steps", scan_opts.steps, "Grid points including both ends")
        ->capture_default_str();
    scan->add_option("--variant", scan_opts.variant,
                     "Pure-state variant (psi+, psi-, phi+, phi-)")
        ->capture_default_str();
    scan->add_option("--sign", scan_opts.sign, "Werner Bell component (- singlet, + triplet)")
        ->check(CLI::IsMember({"+", "-"}))
        ->capture_default_str();
    scan->add_option("--out", scan_opts.out, "Output path ('-' = stdout)")
        ->capture_default_str();
    scan->callback([&] { action = [&] { return run_scan(scan_opts); }; });

    BoundsOpts bounds_opts;
    CLI::App* bounds = app.add_subcommand(
        "bounds", "Random-state scatter against the exact correlation bounds");
    bounds->add_option("--sampler", bounds_opts.sampler, "Random-state ensemble")
        ->check(CLI::IsMember({"ginibre4", "ginibre2", "ginibre1", "pure", "belldiag"}))
        ->capture_default_str();
    bounds->add_option("--samples", bounds_opts.samples, "Number of states")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bounds->add_option("--seed", bounds_opts.seed, "Random seed")->capture_default_str();
    bounds->add_option("--out", bounds_opts.out, "Scatter CSV path ('-' = stdout)")
        ->capture_default_str();
    bounds->add_option("--curves", bounds_opts.curves,
                       "Prefix for <prefix>_lower.csv / <prefix>_upper.csv boundary "
                       "tables (default: derived from --out when it is a file)");
    bounds->add_option("--curve-points", bounds_opts.curve_points,
                       "Rows in each boundary table")
        ->capture_default_str();
    bounds->callback([&] { action = [&] { return run_bounds(bounds_opts); }; });

    EvolveOpts evolve_opts;
    CLI::App* evolve = app.add_subcommand(
        "evolve", "Coefficient dynamics under local noise on both qubits (CSV)");
    evolve->add_option("--c", evolve_opts.c_text, "Initial coefficients c1,c2,c3")
        ->required();
    evolve->add_option("--channel", evolve_opts.channel,
                       "bitflip | bitphaseflip | phaseflip | gad")
        ->check(CLI::IsMember({"bitflip", "bitphaseflip", "phaseflip", "gad"}))
        ->required();
    evolve->add_option("--gamma", evolve_opts.gamma, "Decay rate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    evolve->add_option("--kappa-over-gamma", evolve_opts.kappa_over_gamma,
                       "Bath coupling ratio for the gad channel")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    evolve->add_option("--tmax", evolve_opts.tmax, "End of the time grid")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    evolve->add_option("--steps", evolve_opts.steps, "Rows including both endpoints")
        ->capture_default_str();
    evolve->add_option("--out", evolve_opts.out, "Output path ('-' = stdout)")
        ->capture_default_str();
    evolve->callback([&] { action = [&] { return run_evolve(evolve_opts); }; });

    DeathOpts death_opts;
    CLI::App* death = app.add_subcommand(
        "deathtimes", "Analytic and bisected threshold crossings from (|c|,|c|,|c|)");
    death->add_option("--c", death_opts.c, "Common coefficient magnitude in (0, 1]")
        ->required();
    death->add_option("--gamma", death_opts.gamma, "Decay rate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    death->add_option("--channel", death_opts.channel, "Unital channel")
        ->check(CLI::IsMember({"bitflip", "bitphaseflip", "phaseflip"}))
        ->capture_default_str();
    death->add_option("--out", death_opts.out, "Output path ('-' = stdout)")
        ->capture_default_str();
    death->callback([&] { action = [&] { return run_deathtimes(death_opts); }; });

    std::uint64_t verify_samples = 1000;
    std::uint64_t verify_seed = 0;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run the scientific property suite; exit 0 only if all pass");
    verify->add_option("--samples", verify_samples, "Scale of the randomized checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "Random seed")->capture_default_str();
    verify->callback(
        [&] { action = [&] { return run_verify_suite(verify_samples, verify_seed); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        report_error(e.what());
        return 2;
    }
}
