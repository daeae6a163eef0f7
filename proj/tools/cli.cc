#include "cli.hh"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "bamin/ba_format.hh"
#include "bamin/inclusion.hh"
#include "bamin/minimize.hh"
#include "bamin/randgen.hh"
#include "bamin/saturation.hh"

namespace bamin::cli {

namespace {

struct MinimizeArgs {
    std::string input;
    std::string output;
    std::string stats;
    std::string method = "heavy";
    unsigned k = 12;
};

struct IncludeArgs {
    std::string a, b;
    unsigned k = 12;
    std::size_t max_u = 0, max_v = 0;
    long timeout_ms = 10000;
    bool no_jumping = false;
};

struct GenerateArgs {
    std::size_t states = 100, symbols = 2;
    double td = 1.8, ad = 0.5;
    std::uint64_t seed = 0;
    std::string output;
};

struct SaturationArgs {
    std::size_t states = 100, symbols = 2;
    double td = 2.0;
};

struct SweepArgs {
    std::size_t states = 50, symbols = 2;
    std::string td = "1.0:3.0:0.1";
    double ad = 0.5;
    std::size_t samples = 30;
    std::uint64_t seed = 0;
    std::string method = "heavy";
    unsigned k = 12;
    bool timing = false;
    std::string output;
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("error writing " + path);
}

int cmd_minimize(const MinimizeArgs& args, std::ostream& out) {
    Automaton a = read_ba_file(args.input);
    MinimizeConfig cfg;
    cfg.k = args.k;
    cfg.method = args.method == "light" ? Method::light : Method::heavy;
    MinimizeStats stats;
    Automaton m = minimize(a, cfg, &stats);
    write_text(args.output, serialize_ba(m), out);
    if (!args.stats.empty()) write_text(args.stats, stats.to_json() + "\n", out);
    return ok;
}

int cmd_include(const IncludeArgs& args, std::ostream& out) {
    Automaton a = read_ba_file(args.a);
    Automaton b = read_ba_file(args.b);
    InclusionConfig cfg;
    cfg.k = args.k;
    cfg.max_u = args.max_u;
    cfg.max_v = args.max_v;
    cfg.counterexample_budget = std::chrono::milliseconds(args.timeout_ms);
    cfg.jumping = !args.no_jumping;
    InclusionVerdict v = check_inclusion(a, b, cfg);
    out << v.to_json(a) << "\n";
    switch (v.outcome) {
        case Outcome::included: return included;
        case Outcome::not_included: return not_included;
        case Outcome::unknown: return unknown;
    }
    return failure;
}

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
    RandomSpec spec{args.states, args.symbols, args.td, args.ad, args.seed};
    write_text(args.output, serialize_ba(tabakov_vardi(spec)), out);
    return ok;
}

int cmd_saturation(const SaturationArgs& args, std::ostream& out) {
    ExactFraction u = saturation_probability(args.states, args.symbols, args.td);
    out << u.str() << "\n" << fmt::format("{:.6g}", u.value) << "\n";
    return ok;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
    std::vector<double> tds = parse_range(args.td);
    if (args.samples == 0) throw std::invalid_argument("need at least one sample");
    MinimizeConfig cfg;
    cfg.k = args.k;
    cfg.method = args.method == "light" ? Method::light : Method::heavy;

    std::string csv = args.timing ? "td,k,method,samples,mean_states,mean_time_ms\n"
                                  : "td,k,method,samples,mean_states\n";
    for (std::size_t i = 0; i < tds.size(); ++i) {
        double states = 0, time_ms = 0;
        for (std::size_t s = 0; s < args.samples; ++s) {
            RandomSpec spec{args.states, args.symbols, tds[i], args.ad, sample_seed(args.seed, i, s)};
            Automaton a = tabakov_vardi(spec);
            auto t0 = std::chrono::steady_clock::now();
            Automaton m = args.method == "rd" ? remove_dead(a) : minimize(a, cfg);
            time_ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            states += double(m.num_states());
        }
        double n = double(args.samples);
        csv += fmt::format("{:.4f},{},{},{},{:.4f}", tds[i], args.k, args.method, args.samples, states / n);
        if (args.timing) csv += fmt::format(",{:.3f}", time_ms / n);
        csv += "\n";
    }
    write_text(args.output, csv, out);
    return ok;
}

}  // namespace

std::vector<double> parse_range(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw std::invalid_argument("bad number '" + item + "' in range");
        parts.push_back(v);
    }
    if (parts.size() == 1) return parts;
    if (parts.size() != 3) throw std::invalid_argument("range must be VALUE or FROM:TO:STEP");
    double from = parts[0], to = parts[1], step = parts[2];
    if (!(step > 0) || to < from) throw std::invalid_argument("range needs FROM <= TO and a positive STEP");
    auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(std::round((from + double(i) * step) * 1e9) / 1e9);
    return out;
}

std::uint64_t sample_seed(std::uint64_t base, std::size_t td_index, std::size_t sample) {
    return base * 0x100000001b3ULL + (std::uint64_t(td_index) << 32) + sample;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Büchi automata minimization and language inclusion"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "bamin 0.1.0");

    MinimizeArgs mz;
    auto* minimize_cmd = app.add_subcommand("minimize", "Minimize a .ba automaton");
    minimize_cmd->add_option("input", mz.input, "Input .ba file")->required();
    minimize_cmd->add_option("-o,--output", mz.output, "Output .ba file (default: stdout)");
    minimize_cmd->add_option("--stats", mz.stats, "Write statistics JSON here");
    minimize_cmd->add_option("--method", mz.method)->check(CLI::IsMember({"heavy", "light"}))->capture_default_str();
    minimize_cmd->add_option("-k,--lookahead", mz.k)->check(CLI::Range(1, 15))->capture_default_str();

    IncludeArgs in;
    auto* include_cmd = app.add_subcommand("include", "Check L(A) ⊆ L(B); exit 0 included, 1 not, 3 unknown");
    include_cmd->add_option("a", in.a, "Automaton A")->required();
    include_cmd->add_option("b", in.b, "Automaton B")->required();
    include_cmd->add_option("-k,--lookahead", in.k)->check(CLI::Range(1, 15))->capture_default_str();
    include_cmd->add_option("--max-u", in.max_u, "Longest stem in the counterexample search (0: automatic)")
        ->check(CLI::Range(0, 16));
    include_cmd->add_option("--max-v", in.max_v, "Longest cycle in the counterexample search (0: automatic)")
        ->check(CLI::Range(0, 16));
    include_cmd->add_option("--timeout-ms", in.timeout_ms, "Time budget of the counterexample search")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    include_cmd->add_flag("--no-jumping", in.no_jumping, "Skip the jumping simulation check");

    GenerateArgs gen;
    auto* generate_cmd = app.add_subcommand("generate", "Generate a Tabakov-Vardi random automaton");
    generate_cmd->add_option("--states", gen.states)->check(CLI::PositiveNumber)->capture_default_str();
    generate_cmd->add_option("--alphabet", gen.symbols)->check(CLI::PositiveNumber)->capture_default_str();
    generate_cmd->add_option("--td", gen.td, "Transition density")->capture_default_str();
    generate_cmd->add_option("--ad", gen.ad, "Acceptance density")->capture_default_str();
    generate_cmd->add_option("--seed", gen.seed)->capture_default_str();
    generate_cmd->add_option("-o,--output", gen.output, "Output .ba file (default: stdout)");

    SaturationArgs sat;
    auto* saturation_cmd =
        app.add_subcommand("saturation", "Exact probability that every state has a successor on every symbol");
    saturation_cmd->add_option("--states", sat.states)->check(CLI::PositiveNumber)->capture_default_str();
    saturation_cmd->add_option("--alphabet", sat.symbols)->check(CLI::PositiveNumber)->capture_default_str();
    saturation_cmd->add_option("--td", sat.td, "Transition density")->capture_default_str();

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Mean minimized size over random automata, as CSV");
    sweep_cmd->add_option("--states", sw.states)->check(CLI::PositiveNumber)->capture_default_str();
    sweep_cmd->add_option("--alphabet", sw.symbols)->check(CLI::PositiveNumber)->capture_default_str();
    sweep_cmd->add_option("--td", sw.td, "Density or FROM:TO:STEP")->capture_default_str();
    sweep_cmd->add_option("--ad", sw.ad)->capture_default_str();
    sweep_cmd->add_option("--samples", sw.samples)->check(CLI::PositiveNumber)->capture_default_str();
    sweep_cmd->add_option("--seed", sw.seed)->capture_default_str();
    sweep_cmd->add_option("--method", sw.method, "heavy, light or rd (remove dead states only)")
        ->check(CLI::IsMember({"heavy", "light", "rd"}))
        ->capture_default_str();
    sweep_cmd->add_option("-k,--lookahead", sw.k)->check(CLI::Range(1, 15))->capture_default_str();
    sweep_cmd->add_flag("--timing", sw.timing, "Add a mean wall-time column (not reproducible)");
    sweep_cmd->add_option("-o,--output", sw.output, "Output CSV file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : failure;
    }

    try {
        if (*minimize_cmd) return cmd_minimize(mz, out);
        if (*include_cmd) return cmd_include(in, out);
        if (*generate_cmd) return cmd_generate(gen, out);
        if (*saturation_cmd) return cmd_saturation(sat, out);
        if (*sweep_cmd) return cmd_sweep(sw, out);
    } catch (const ParseError& e) {
        err << "bamin: parse error at " << e.what() << "\n";
        return failure;
    } catch (const std::exception& e) {
        err << "bamin: " << e.what() << "\n";
        return failure;
    }
    return failure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"bamin"};
    for (const std::string& s : args) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bamin::cli
