#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "artin/bound_engine.hpp"
#include "artin/modular_core.hpp"
#include "artin/report_io.hpp"
#include "artin/sweep.hpp"

namespace {

struct CliOptions {
    artin::SweepConfig cfg;
    std::string format = "csv";
    std::string u_grid;
};

// Grid syntax: "10,20,30" or "lo:hi:step" (step optional, default 1).
std::vector<std::uint64_t> parse_u_grid(const std::string& text) {
    std::vector<std::uint64_t> grid;
    if (text.empty()) return grid;
    auto parse_one = [](const std::string& s) {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad u grid entry: " + s);
        return static_cast<std::uint64_t>(v);
    };
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == ':') {
                parts.push_back(text.substr(start, i - start));
                start = i + 1;
            }
        }
        if (parts.size() < 2 || parts.size() > 3)
            throw std::invalid_argument("u grid range must be lo:hi or lo:hi:step");
        const std::uint64_t lo = parse_one(parts[0]);
        const std::uint64_t hi = parse_one(parts[1]);
        const std::uint64_t step = parts.size() == 3 ? parse_one(parts[2]) : 1;
        if (step == 0) throw std::invalid_argument("u grid step must be positive");
        for (std::uint64_t v = lo; v <= hi; v += step) grid.push_back(v);
        return grid;
    }
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            grid.push_back(parse_one(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    return grid;
}

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--a", opt.cfg.a, "integer base a");
    cmd->add_option("--x", opt.cfg.x, "prime range limit");
    cmd->add_option("--u", opt.cfg.u, "exponent range for D(u)");
    cmd->add_option("--u-grid", opt.u_grid, "u values: comma list or lo:hi:step");
    cmd->add_option("--delta", opt.cfg.delta, "exponent offset in the reference curve");
    cmd->add_option("--alpha", opt.cfg.alpha, "threshold exponent offset, in (0, 2/3)");
    cmd->add_option("--threads", opt.cfg.threads, "worker threads (0 = runtime default)");
    cmd->add_option("--format", opt.format, "output format: csv or json");
    cmd->add_option("--out", opt.cfg.out, "output path (default: stdout)");
    cmd->add_option("--tolerance-scale", opt.cfg.tolerance_scale,
                    "per-prime tolerance is this times p");
    cmd->add_option("--oracle-cap-u", opt.cfg.oracle_cap_u, "largest u the big-integer oracle runs");
    cmd->add_option("--oracle-cap-x", opt.cfg.oracle_cap_x, "largest x the big-integer oracle runs");
}

void finish_options(CliOptions& opt, bool uses_u) {
    if (opt.format == "csv")
        opt.cfg.format = artin::OutputFormat::Csv;
    else if (opt.format == "json")
        opt.cfg.format = artin::OutputFormat::Json;
    else
        throw std::invalid_argument("format must be csv or json");
    opt.cfg.u_grid = parse_u_grid(opt.u_grid);
    if (!uses_u) {
        opt.cfg.u = std::min(opt.cfg.u, opt.cfg.x);
        opt.cfg.u_grid.clear();
    }
    for (const std::string& w : artin::validate_config(opt.cfg))
        std::cerr << "warning: " << w << '\n';
}

int cmd_orders(CliOptions& opt) {
    finish_options(opt, false);
    std::vector<artin::OutputRecord> records;
    for (const auto& rec : artin::order_sweep(opt.cfg.a, opt.cfg.x).records) {
        artin::OutputRecord row;
        row.kind = "rows";
        row.add("p", rec.p);
        row.add("f", rec.order);
        row.add("e", rec.coset_count);
        row.add("g", rec.generator);
        records.push_back(std::move(row));
    }
    artin::write_report(records, opt.cfg.format, opt.cfg.out);
    return 0;
}

int cmd_bounds(CliOptions& opt) {
    finish_options(opt, true);
    opt.cfg.u_grid.clear();  // single u; the sweep command handles grids
    artin::BoundReport rep = artin::run_sweep(opt.cfg);
    artin::write_report(artin::report_records(rep, opt.cfg.u), opt.cfg.format, opt.cfg.out);
    return 0;
}

int cmd_sweep(CliOptions& opt) {
    finish_options(opt, true);
    artin::BoundReport rep = artin::run_sweep(opt.cfg);
    artin::write_report(artin::report_records(rep, opt.cfg.u), opt.cfg.format, opt.cfg.out);
    return 0;
}

int cmd_density(CliOptions& opt) {
    finish_options(opt, false);
    if (opt.cfg.x < 3) throw std::invalid_argument("density needs x >= 3");
    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t c = 100; c < opt.cfg.x; c *= 10) checkpoints.push_back(c);
    checkpoints.push_back(opt.cfg.x);
    std::vector<artin::OutputRecord> records;
    for (std::uint64_t c : checkpoints) {
        artin::DensityStats st = artin::density_report(opt.cfg.a, c);
        artin::OutputRecord row;
        row.kind = "density";
        row.add("a", st.a);
        row.add("x", st.x);
        row.add("pi_x", st.pi_x);
        row.add("counted", st.counted);
        row.add("primitive_count", st.primitive_count);
        row.add("primitive_fraction", st.primitive_fraction);
        row.add("artin_reference", artin::artin_reference);
        row.add("fraction_order_gt_sqrt", st.fraction_order_gt_sqrt);
        row.add("fraction_order_gt_34", st.fraction_order_gt_34);
        row.add("recip_sum_order_gt_34", st.recip_sum_order_gt_34);
        row.add("x_quarter_over_log", st.x_quarter_over_log);
        row.add("small_sample", st.small_sample);
        records.push_back(std::move(row));
    }
    artin::write_report(records, opt.cfg.format, opt.cfg.out);
    return 0;
}

int cmd_verify(CliOptions& opt) {
    finish_options(opt, true);
    if (opt.cfg.a < 2) throw std::invalid_argument("verify needs a >= 2");
    artin::VerifyReport rep = artin::run_verify(opt.cfg);
    artin::write_report(rep.records, opt.cfg.format, opt.cfg.out);
    if (!rep.all_pass) {
        std::cerr << "verification failed; see residual rows\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclotomic period sweeps: orders, bounds, identities, densities"};
    app.require_subcommand(1);
    CliOptions opt;

    CLI::App* orders = app.add_subcommand("orders", "multiplicative order table");
    CLI::App* bounds = app.add_subcommand("bounds", "hit counts, bounds, and aggregates for one u");
    CLI::App* verify = app.add_subcommand("verify", "identity and oracle verification suite");
    CLI::App* density = app.add_subcommand("density", "primitive root density checkpoints");
    CLI::App* sweep = app.add_subcommand("sweep", "bounds over a grid of u values");
    for (CLI::App* cmd : {orders, bounds, verify, density, sweep}) add_common_flags(cmd, opt);

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(orders)) return cmd_orders(opt);
        if (app.got_subcommand(bounds)) return cmd_bounds(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(density)) return cmd_density(opt);
        return cmd_sweep(opt);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const artin::io_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
