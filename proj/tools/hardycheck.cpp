#include "hardy/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

const char* describe(const std::string& id) {
    using hardy::catalog::Shape;
    switch (hardy::catalog::parse_case(id).shape) {
    case Shape::disc: return "the unit disc, identity map";
    case Shape::strip: return "the infinite vertical strip |Re z| < pi/4";
    case Shape::triangle: return "equilateral triangle with vertices 1, e^(2pi i/3), e^(4pi i/3)";
    case Shape::square: return "square with vertices (+-1 +- i)/sqrt(2)";
    case Shape::parabola: return "parabolic region y^2 < 2x - 1";
    case Shape::hyperbola_focal: return "region inside one hyperbola branch, base at a focus";
    case Shape::hyperbola_branches: return "region between the two hyperbola branches";
    case Shape::ellipse: return "ellipse with foci +-1, modulus parameter t";
    case Shape::ellipse_doubling: return "ellipse of doubled parameter, base -1 (angle doubling)";
    case Shape::annulus: return "annulus e^(-pi/4) < |z| < e^(pi/4), B-proper map exp(arctan z)";
    }
    return "";
}

void print_summary(const std::vector<hardy::report::CaseReport>& reports) {
    for (const auto& r : reports) {
        std::cout << std::left << std::setw(34) << r.id << " " << std::setw(8) << r.verdict;
        if (r.verdict != "skipped") {
            std::cout << " lhs=" << std::setprecision(12) << static_cast<double>(r.lhs_partial)
                      << " rhs=" << static_cast<double>(r.rhs)
                      << " rel_err=" << std::setprecision(3) << static_cast<double>(r.rel_err);
            if (r.tail.available)
                std::cout << " s=" << std::setprecision(4)
                          << static_cast<double>(r.tail.fitted_exponent);
        }
        if (r.oracle) {
            std::cout << " mc=" << std::setprecision(6) << r.oracle->moments.two_mean_time
                      << "+-" << std::setprecision(2) << r.oracle->moments.se_time
                      << (r.oracle->g_ok && r.oracle->dynkin_ok ? " ok" : " MISMATCH");
        }
        std::cout << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hardycheck: verifies Hardy-norm identities of conformal maps "
                 "against closed forms and a Brownian-exit Monte Carlo oracle"};

    hardy::report::RunConfig cfg;
    bool all = false;
    bool list = false;
    std::vector<std::string> cases;

    app.add_option("--case", cases, "case id (repeatable); see --list-cases");
    app.add_flag("--all", all, "run every registry case");
    app.add_flag("--list-cases", list, "print the case registry and exit");
    app.add_option("--order", cfg.order, "series truncation order")->capture_default_str();
    app.add_option("--precision", cfg.precision, "working precision in bits")
        ->capture_default_str();
    app.add_option("--samples", cfg.samples, "Monte Carlo trajectories")
        ->capture_default_str();
    app.add_option("--eps", cfg.eps, "walk-on-spheres stopping shell width")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Monte Carlo seed")->capture_default_str();
    app.add_option("--mode", cfg.mode, "series-only | oracle-only | full")
        ->capture_default_str();
    app.add_option("--tolerance", cfg.tolerance, "relative verdict tolerance")
        ->capture_default_str();
    app.add_option("--square-m", cfg.square_m, "double-sum truncation for the square target")
        ->capture_default_str();
    app.add_option("--json", cfg.json_path, "write the JSON report to PATH");
    app.add_option("--csv", cfg.csv_path, "write the per-term CSV trace to PATH");

    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto& id : hardy::catalog::registry_ids())
            std::cout << std::left << std::setw(34) << id << " " << describe(id) << "\n";
        return 0;
    }

    cfg.cases = cases;
    if (all) cfg.cases = hardy::catalog::registry_ids();
    if (cfg.cases.empty()) {
        std::cerr << "no cases selected; use --case ID or --all (see --list-cases)\n";
        return 2;
    }

    try {
        auto reports = hardy::report::run(cfg);
        print_summary(reports);
        if (!cfg.json_path.empty()) {
            std::ofstream os(cfg.json_path);
            if (!os) throw std::runtime_error("cannot write " + cfg.json_path);
            hardy::report::write_json(cfg, reports, os);
        }
        if (!cfg.csv_path.empty()) {
            std::ofstream os(cfg.csv_path);
            if (!os) throw std::runtime_error("cannot write " + cfg.csv_path);
            hardy::report::write_csv(reports, os);
        }
        return hardy::report::exit_status(reports);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        std::cerr << "available cases:\n";
        for (const auto& id : hardy::catalog::registry_ids()) std::cerr << "  " << id << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
