#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "gic/channel.hpp"
#include "gic/channel_io.hpp"
#include "gic/errors.hpp"
#include "gic/export.hpp"
#include "gic/region2.hpp"
#include "gic/region3.hpp"
#include "gic/sumrate.hpp"
#include "gic/verify.hpp"

namespace {

// command-line misuse distinct from domain failures: exits with code 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ChannelFlags {
    std::string file;
    std::optional<double> a12, a21, a13, a23, a31, a32, p1, p2, p3;

    bool any_inline() const {
        return a12 || a21 || a13 || a23 || a31 || a32 || p1 || p2 || p3;
    }
    bool any_three() const { return a13 || a23 || a31 || a32 || p3; }
};

void add_channel_flags(CLI::App* cmd, ChannelFlags& cf, bool three_user_flags) {
    cmd->add_option("--channel", cf.file, "Channel description file (JSON)");
    cmd->add_option("--a12", cf.a12, "Cross-gain ratio a12");
    cmd->add_option("--a21", cf.a21, "Cross-gain ratio a21");
    cmd->add_option("--pbar1", cf.p1, "Normalized power cap of user 1");
    cmd->add_option("--pbar2", cf.p2, "Normalized power cap of user 2");
    if (three_user_flags) {
        cmd->add_option("--a13", cf.a13, "Cross-gain ratio a13");
        cmd->add_option("--a23", cf.a23, "Cross-gain ratio a23");
        cmd->add_option("--a31", cf.a31, "Cross-gain ratio a31");
        cmd->add_option("--a32", cf.a32, "Cross-gain ratio a32");
        cmd->add_option("--pbar3", cf.p3, "Normalized power cap of user 3");
    }
}

// want_n = 0 accepts any user count
gic::NormalizedChannel resolve_channel(const ChannelFlags& cf, int want_n) {
    const bool has_file = !cf.file.empty();
    if (has_file && cf.any_inline())
        throw UsageError("give the channel either as --channel FILE or as inline flags, "
                         "not both");
    if (has_file) {
        gic::NormalizedChannel ch = gic::load_channel_file(cf.file);
        if (want_n != 0 && ch.n() != want_n)
            throw gic::DomainError("channel file has n=" + std::to_string(ch.n()) +
                                   ", this command needs n=" + std::to_string(want_n));
        return ch;
    }
    if (!cf.any_inline())
        throw UsageError("no channel given; use --channel FILE or the inline flags");
    const bool three = cf.any_three();
    if (three && want_n == 2) throw UsageError("this command takes a two-user channel");
    if (!three && want_n == 3)
        throw UsageError("this command takes a three-user channel; set all nine "
                         "three-user flags");
    if (three) {
        if (!(cf.a12 && cf.a13 && cf.a21 && cf.a23 && cf.a31 && cf.a32 && cf.p1 && cf.p2 &&
              cf.p3))
            throw UsageError("three-user inline channel needs --a12 --a13 --a21 --a23 "
                             "--a31 --a32 --pbar1 --pbar2 --pbar3");
        return gic::make_three_user(*cf.a12, *cf.a13, *cf.a21, *cf.a23, *cf.a31, *cf.a32,
                                    *cf.p1, *cf.p2, *cf.p3);
    }
    if (!(cf.a12 && cf.a21 && cf.p1 && cf.p2))
        throw UsageError("two-user inline channel needs --a12 --a21 --pbar1 --pbar2");
    return gic::make_two_user(*cf.a12, *cf.a21, *cf.p1, *cf.p2);
}

gic::TableFormat parse_format(const std::string& s) {
    if (s == "csv") return gic::TableFormat::Csv;
    if (s == "json") return gic::TableFormat::Json;
    throw UsageError("unknown format '" + s + "' (csv or json)");
}

gic::SpacingMode parse_spacing(const std::string& s) {
    if (s == "uniform-t") return gic::SpacingMode::UniformT;
    if (s == "uniform-rate") return gic::SpacingMode::UniformRate;
    throw UsageError("unknown spacing '" + s + "' (uniform-t or uniform-rate)");
}

/// Resolves the output sink: empty path means stdout; relative paths are
/// joined onto $GIC_OUTPUT_DIR when that is set.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) {
            os_ = &std::cout;
            return;
        }
        std::string full = path;
        if (path.front() != '/') {
            if (const char* dir = std::getenv("GIC_OUTPUT_DIR"); dir && *dir)
                full = std::string(dir) + "/" + path;
        }
        file_.open(full);
        if (!file_) throw gic::DomainError("cannot open output file: " + full);
        os_ = &file_;
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

std::string relation_to_one(double x) {
    if (x < 1.0) return "<1";
    if (x > 1.0) return ">1";
    return "=1";
}

int run_info(const ChannelFlags& cf) {
    const gic::NormalizedChannel ch = resolve_channel(cf, 0);
    std::cout << "n: " << ch.n() << "\n";
    for (int i = 0; i < ch.n(); ++i)
        std::cout << "pbar" << (i + 1) << ": " << gic::format_sig12(ch.pbar(i)) << "\n";
    for (int i = 0; i < ch.n(); ++i)
        for (int j = 0; j < ch.n(); ++j) {
            if (i == j) continue;
            std::cout << "a" << (i + 1) << (j + 1) << ": " << gic::format_sig12(ch.a(i, j))
                      << " (" << relation_to_one(ch.a(i, j)) << ")\n";
        }
    for (int i = 0; i < ch.n(); ++i)
        for (int j = i + 1; j < ch.n(); ++j) {
            const double prod = ch.a(i, j) * ch.a(j, i);
            std::cout << "pair (" << (i + 1) << "," << (j + 1) << "): a" << (i + 1) << (j + 1)
                      << "*a" << (j + 1) << (i + 1) << " = " << gic::format_sig12(prod)
                      << " (" << relation_to_one(prod) << ")\n";
        }
    return 0;
}

int run_verify(const gic::VerifyOptions& opts) {
    const std::vector<gic::CheckResult> results = gic::run_acceptance(opts);
    int passed = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.name
                  << " (checks=" << r.checks << ", worst=" << gic::format_sig12(r.worst)
                  << ")";
        if (!r.note.empty()) std::cout << " -- " << r.note;
        std::cout << "\n";
        passed += r.pass;
    }
    std::cout << "verify: " << passed << "/" << results.size() << " checks passed (seed "
              << opts.seed << ")\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SINR and capacity regions of the Gaussian interference channel, "
                 "treating interference as noise"};
    app.require_subcommand(1);

    ChannelFlags boundary_ch, surface_ch, sumrate_ch, info_ch;
    int samples = 101;
    int resolution = 41;
    std::string boundary_spacing = "uniform-t";
    std::string boundary_format = "csv", surface_format = "csv", sumrate_format = "csv";
    std::string boundary_output, surface_output, sumrate_output;

    CLI::App* boundary = app.add_subcommand(
        "boundary2", "Sample the two-user capacity-region boundary");
    add_channel_flags(boundary, boundary_ch, false);
    boundary->add_option("--samples", samples, "Boundary sample count (>= 2)");
    boundary->add_option("--spacing", boundary_spacing,
                         "Sample spacing: uniform-t or uniform-rate");
    boundary->add_option("--format", boundary_format, "Output format: csv or json");
    boundary->add_option("--output", boundary_output, "Output file (default stdout)");

    CLI::App* surface = app.add_subcommand(
        "surface3", "Sample the three-user SINR-region boundary surfaces");
    add_channel_flags(surface, surface_ch, true);
    surface->add_option("--resolution", resolution, "Grid resolution per face (>= 2)");
    surface->add_option("--format", surface_format, "Output format: csv or json");
    surface->add_option("--output", surface_output, "Output file (default stdout)");

    CLI::App* sumrate = app.add_subcommand(
        "sumrate", "Maximize the two-user sum rate over the power box");
    add_channel_flags(sumrate, sumrate_ch, false);
    sumrate->add_option("--format", sumrate_format, "Output format: csv or json");
    sumrate->add_option("--output", sumrate_output, "Output file (default stdout)");

    CLI::App* info = app.add_subcommand(
        "info", "Print the normalized channel and regime diagnostics");
    add_channel_flags(info, info_ch, true);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the property-check suite and report per-property results");
    gic::VerifyOptions vopts;
    std::string verify_channel_file;
    int nusers = 0;
    verify->add_option("--trials", vopts.trials, "Corner-optimality channel draws");
    verify->add_option("--seed", vopts.seed, "Random seed");
    verify->add_option("--nusers", nusers,
                       "Run the n-user oracle check at this user count only");
    verify->add_option("--channel", verify_channel_file,
                       "Channel file for the n-user oracle check (any n)");
    verify->add_option("--tol-roundtrip", vopts.tol_roundtrip, "Round-trip tolerance");
    verify->add_option("--tol-corner", vopts.tol_corner, "Corner-optimality tolerance");
    verify->add_option("--tol-block", vopts.tol_block, "Block-equivalence tolerance");
    verify->add_option("--tol-degeneration", vopts.tol_degeneration,
                       "Degeneration tolerance");
    verify->add_option("--tol-value", vopts.tol_value, "Reference-value tolerance");
    verify->add_option("--tol-image", vopts.tol_image, "Image-membership tolerance");
    verify->add_option("--tol-backmap", vopts.tol_backmap, "Back-mapping tolerance");

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

    try {
        if (boundary->parsed()) {
            if (samples < 2) throw UsageError("--samples must be at least 2");
            const gic::TableFormat fmt = parse_format(boundary_format);
            const gic::SpacingMode spacing = parse_spacing(boundary_spacing);
            const gic::NormalizedChannel ch = resolve_channel(boundary_ch, 2);
            const auto curve = gic::capacity_boundary(ch, samples, spacing);
            Output out(boundary_output);
            gic::write_curve(out.stream(), curve, ch, spacing, fmt);
            return 0;
        }
        if (surface->parsed()) {
            if (resolution < 2) throw UsageError("--resolution must be at least 2");
            const gic::TableFormat fmt = parse_format(surface_format);
            const gic::NormalizedChannel ch = resolve_channel(surface_ch, 3);
            const auto sample = gic::sample_surface(ch, resolution);
            Output out(surface_output);
            gic::write_surface(out.stream(), sample, ch, fmt);
            return 0;
        }
        if (sumrate->parsed()) {
            const gic::TableFormat fmt = parse_format(sumrate_format);
            const gic::NormalizedChannel ch = resolve_channel(sumrate_ch, 2);
            const gic::SumRateSolution sol = gic::maximize_sum_rate(ch);
            Output out(sumrate_output);
            gic::write_sumrate(out.stream(), sol, ch, fmt);
            return 0;
        }
        if (info->parsed()) return run_info(info_ch);
        if (verify->parsed()) {
            if (nusers != 0 && nusers < 2) throw UsageError("--nusers must be at least 2");
            if (!verify_channel_file.empty()) {
                vopts.nuser_channel = gic::load_channel_file(verify_channel_file);
                if (nusers != 0 && vopts.nuser_channel->n() != nusers)
                    throw gic::DomainError("--nusers does not match the channel file");
            } else if (nusers != 0) {
                vopts.nuser_counts = {nusers};
            }
            return run_verify(vopts);
        }
        throw UsageError("no subcommand selected");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const gic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
