#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "certitrack/diagnostics.hpp"
#include "certitrack/errors.hpp"
#include "certitrack/io.hpp"
#include "certitrack/stepsize.hpp"
#include "certitrack/tracker.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitSingular = 4;
constexpr int kExitMaxSteps = 5;
constexpr int kExitQuadrature = 6;
constexpr int kExitBitLimit = 7;

using namespace certitrack;

// Safety fuse: CERTITRACK_MAX_BITS caps coordinate bit growth (0 = unlimited).
unsigned max_bits_from_env() {
    const char* raw = std::getenv("CERTITRACK_MAX_BITS");
    if (!raw || !*raw) return 0;
    char* end = nullptr;
    unsigned long v = std::strtoul(raw, &end, 10);
    if (!end || *end != '\0' || v > 1u << 30)
        throw ParseError(std::string("CERTITRACK_MAX_BITS must be a small nonnegative integer, got \"") +
                         raw + "\"");
    return static_cast<unsigned>(v);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

int run_track(const std::string& target_path, const std::string& start_path,
              const std::string& zero_path, const std::string& out_path, unsigned long max_steps,
              bool no_den_matching, const std::string& trace) {
    TrackerConfig cfg;
    cfg.max_steps = max_steps;
    cfg.denominator_matching = !no_den_matching;
    cfg.max_coord_bits = max_bits_from_env();
    if (trace == "full")
        cfg.trace_level = TraceLevel::Full;
    else if (trace == "none")
        cfg.trace_level = TraceLevel::None;
    else
        cfg.trace_level = TraceLevel::Summary;

    PolySystem f = load_system_file(target_path);
    PolySystem g = load_system_file(start_path);
    QVector z0 = load_vector_file(zero_path);

    TrackResult res = track_segment(f, g, z0, cfg);
    emit(result_to_json(res).dump(2) + "\n", out_path);

    switch (res.status) {
        case TrackStatus::Certified:
            std::cerr << "certified after " << res.steps << " steps\n";
            return kExitOk;
        case TrackStatus::HypothesisViolated:
            std::cerr << res.message << "\n";
            return kExitHypothesis;
        case TrackStatus::SingularEncountered:
            std::cerr << res.message << "\n";
            return kExitSingular;
        case TrackStatus::MaxStepsExceeded:
            std::cerr << res.message << "\n";
            return kExitMaxSteps;
    }
    return kExitOk;
}

int run_bounds(const std::string& family, const std::string& m_text, bool sweep,
               const std::string& format, const std::string& out_path) {
    if (family != "toy") throw ParseError("unknown family \"" + family + "\" (only \"toy\")");
    std::vector<BoundsRow> rows;
    if (sweep) {
        for (long m : benchmark_m_values()) rows.push_back(bounds_row_toy(mpq_class(m)));
    } else {
        mpq_class m = parse_rational(m_text);
        if (m <= 0) throw ParseError("--m must be positive");
        rows.push_back(bounds_row_toy(m));
    }

    std::string text;
    if (format == "table")
        text = bounds_table(rows);
    else if (format == "csv")
        text = bounds_csv(rows);
    else if (format == "json")
        text = bounds_to_json(rows).dump(2) + "\n";
    else
        throw ParseError("unknown format \"" + format + "\" (table|json|csv)");
    emit(text, out_path);
    return kExitOk;
}

int run_verify(const std::string& system_path, const std::string& zero_path, unsigned iters) {
    PolySystem f = load_system_file(system_path);
    QVector z = load_vector_file(zero_path);

    ContractionReport rep = newton_contraction_check(f, z, iters);
    for (std::size_t l = 0; l < rep.displacements.size(); ++l) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", rep.displacements[l]);
        std::cout << "displacement " << l << ": " << buf << "\n";
    }
    std::cout << (rep.pass ? "PASS" : "FAIL") << ": " << rep.message << "\n";
    if (rep.singular) return kExitSingular;
    return rep.pass ? kExitOk : kExitVerifyFail;
}

int run_bw(const std::string& a_path, const std::string& b_path) {
    PolySystem a = load_system_file(a_path);
    PolySystem b = load_system_file(b_path);
    CachedInvariants inv = cache_invariants(a, b);
    std::cout << "n1 = ||a||^2      = " << format_rational(inv.n1) << "\n";
    std::cout << "n2 = ||b||^2      = " << format_rational(inv.n2) << "\n";
    std::cout << "n3 = Re<a,b>      = " << format_rational(inv.n3) << "\n";
    std::cout << "ndot = ||a-b||^2  = " << format_rational(inv.n_dot) << "\n";
    if (real_collinear(a, b)) {
        std::cout << "warning: systems are real-collinear (Re<a,b>^2 = ||a||^2*||b||^2); "
                     "tracking between them is rejected\n";
    } else if (check_hypothesis(a, b)) {
        std::cout << "hypothesis OK: Re<b,a-b> >= -L0*||b||*||a-b|| with L0 = 999/1000\n";
    } else {
        std::cout << "hypothesis FAILED: Re<b,a-b> < -L0*||b||*||a-b|| with L0 = 999/1000\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certitrack: exact certified homotopy tracking for homogeneous systems"};
    app.require_subcommand(1);

    // track
    std::string target_path, start_path, zero_path, out_path;
    unsigned long max_steps = 1000000;
    bool no_den_matching = false;
    std::string trace = "summary";
    auto* track = app.add_subcommand("track", "follow the segment from a start system to a target");
    track->add_option("--target", target_path, "target system JSON")->required();
    track->add_option("--start", start_path, "start system JSON")->required();
    track->add_option("--zero", zero_path, "start zero JSON")->required();
    track->add_option("--out", out_path, "result JSON path (default: stdout)");
    track->add_option("--max-steps", max_steps, "step budget");
    track->add_flag("--no-denominator-matching", no_den_matching,
                    "take the raw bisection step instead of refining to the running denominator");
    track->add_option("--trace", trace, "full|summary|none")
        ->check(CLI::IsMember({"full", "summary", "none"}));

    // bounds
    std::string family = "toy", m_text, format = "table", bounds_out;
    bool sweep = false;
    auto* bounds = app.add_subcommand("bounds", "condition-length step bounds vs observed steps");
    bounds->add_option("--family", family, "benchmark family (toy)");
    auto* m_opt = bounds->add_option("--m", m_text, "family parameter m > 0");
    bounds->add_flag("--sweep", sweep, "run the 18 reference m-values");
    bounds->add_option("--format", format, "table|json|csv");
    bounds->add_option("--out", bounds_out, "output path (default: stdout)");

    // verify
    std::string verify_system, verify_zero;
    unsigned iters = 3;
    auto* verify = app.add_subcommand("verify", "Newton contraction screen for a claimed zero");
    verify->add_option("--system", verify_system, "system JSON")->required();
    verify->add_option("--zero", verify_zero, "point JSON")->required();
    verify->add_option("--iters", iters, "Newton iterations (>= 2)");

    // bw
    std::string bw_a, bw_b;
    auto* bw = app.add_subcommand("bw", "exact inner products of two systems and the input verdict");
    bw->add_option("--a", bw_a, "first system JSON")->required();
    bw->add_option("--b", bw_b, "second system JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*track)
            return run_track(target_path, start_path, zero_path, out_path, max_steps,
                             no_den_matching, trace);
        if (*bounds) {
            if (!sweep && m_opt->count() == 0) throw ParseError("bounds needs --m or --sweep");
            return run_bounds(family, m_text, sweep, format, bounds_out);
        }
        if (*verify) return run_verify(verify_system, verify_zero, iters);
        if (*bw) return run_bw(bw_a, bw_b);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DimensionMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BitLimitExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBitLimit;
    } catch (const QuadratureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitQuadrature;
    } catch (const SingularMatrixError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSingular;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}
