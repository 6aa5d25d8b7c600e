#include "headmouse/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "headmouse/config.hpp"
#include "headmouse/errors.hpp"
#include "headmouse/noise.hpp"
#include "headmouse/replay.hpp"
#include "headmouse/trace.hpp"

namespace headmouse {

namespace {

std::string fmt6(double v) {
    if (v == 0.0) v = 0.0;  // avoid printing -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

const char* pedal_name(Pedal p) { return p == Pedal::L ? "L" : "R"; }
const char* kind_name(EventKind k) { return k == EventKind::Press ? "press" : "release"; }

SimSetup resolve_setup(const std::string& config_path, const std::string& mode_flag) {
    SimSetup setup;
    if (!config_path.empty()) {
        setup = load_config(config_path);
    }
    if (mode_flag == "faithful") {
        setup.controller.mode = Mode::Faithful;
    } else if (mode_flag == "improved") {
        setup.controller.mode = Mode::Improved;
    }
    return setup;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file: " + path);
    }
    out << content;
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

void cmd_simulate(const std::string& trace_path, const std::string& config_path,
                  const std::string& mode_flag, const std::string& reports_path,
                  const std::string& path_path, std::ostream& out) {
    const SimSetup setup = resolve_setup(config_path, mode_flag);
    const Trace trace = load_trace(trace_path);
    const ReplayOutput result = run_replay(trace, setup.controller, setup.screen);

    if (!reports_path.empty()) {
        std::ostringstream ss;
        write_report_stream(result.reports, ss);
        write_text_file(reports_path, ss.str());
    }
    if (!path_path.empty()) {
        std::ostringstream ss;
        write_cursor_path(result.path, ss);
        write_text_file(path_path, ss.str());
    }

    out << "rows " << trace.size() << '\n';
    out << "reports " << result.reports.size() << '\n';
    out << "events " << result.events.size() << '\n';
    for (const ButtonEvent& e : result.events) {
        out << "event " << kind_name(e.kind) << ' ' << pedal_name(e.pedal) << ' ' << e.t_ms
            << '\n';
    }
    const CursorPoint& last = result.path.positions.back();
    out << "final " << last.x << ' ' << last.y << '\n';
}

void cmd_features(const std::string& mode_flag, std::ostream& out) {
    SimSetup setup = resolve_setup("", mode_flag);
    for (const FeatureRow& row : feature_matrix(setup.controller)) {
        out << row.name << ": " << row.answer << '\n';
    }
}

void cmd_jitter(const std::string& trace_path, const std::string& config_path,
                const std::string& mode_flag, std::int64_t from_ms, std::int64_t to_ms,
                std::ostream& out) {
    const SimSetup setup = resolve_setup(config_path, mode_flag);
    const Trace trace = load_trace(trace_path);
    const ReplayOutput result = run_replay(trace, setup.controller, setup.screen);
    const JitterStats stats = static_jitter(result.path, from_ms, to_ms);
    out << "rms_px " << fmt6(stats.rms_px) << '\n';
    out << "peak_px " << fmt6(stats.peak_px) << '\n';
}

void cmd_decode(const std::vector<std::string>& hex_args, std::ostream& out) {
    std::string hex;
    for (const std::string& arg : hex_args) {
        for (char c : arg) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (!std::isxdigit(static_cast<unsigned char>(c))) {
                throw ParseError(std::string("not a hex digit: '") + c + "'");
            }
            hex.push_back(c);
        }
    }
    if (hex.size() != 2 * kBurstLength) {
        throw ParseError("expected " + std::to_string(2 * kBurstLength) + " hex digits, got " +
                         std::to_string(hex.size()));
    }
    std::vector<std::uint8_t> bytes(kBurstLength);
    for (std::size_t i = 0; i < kBurstLength; ++i) {
        bytes[i] = static_cast<std::uint8_t>(std::stoi(hex.substr(2 * i, 2), nullptr, 16));
    }
    const RawImuSample raw = decode_burst(bytes);
    const PhysicalSample phys = raw_to_physical(raw, ScaleConfig{});
    out << "raw ax=" << raw.ax << " ay=" << raw.ay << " az=" << raw.az << " temp=" << raw.temp
        << " gx=" << raw.gx << " gy=" << raw.gy << " gz=" << raw.gz << '\n';
    out << "phys ax=" << fmt6(phys.accel[0]) << " ay=" << fmt6(phys.accel[1])
        << " az=" << fmt6(phys.accel[2]) << " gx=" << fmt6(phys.gyro[0])
        << " gy=" << fmt6(phys.gyro[1]) << " gz=" << fmt6(phys.gyro[2]) << '\n';
}

void cmd_noise(const std::string& trace_path, std::uint64_t seed, double sigma,
               const std::string& out_path, std::ostream& out) {
    if (sigma < 0) {
        throw ConfigError("sigma must be >= 0");
    }
    const Trace trace = load_trace(trace_path);
    const Trace noisy = inject_noise(trace, seed, sigma);
    save_trace(noisy, out_path);
    out << "wrote " << out_path << " rows " << noisy.size() << '\n';
}

void cmd_calibrate(const std::string& trace_path, const std::string& config_path,
                   std::ostream& out) {
    const SimSetup setup = resolve_setup(config_path, "");
    const Trace trace = load_trace(trace_path);
    if (trace.empty()) {
        throw ParseError("trace is empty");
    }
    const TraceRow& row = trace.front();
    const RawImuSample raw{row.ax, row.ay, row.az, 0, row.gx, row.gy, row.gz};
    const TiltAngles tilt = tilt_from_accel(raw_to_physical(raw, setup.controller.scale));
    const NeutralPose neutral = set_neutral(tilt);
    out << "pitch0 " << fmt6(neutral.pitch0) << '\n';
    out << "roll0 " << fmt6(neutral.roll0) << '\n';
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Head-mouse simulator: trace replay, diagnostics, and HID report streams"};
    app.name("headmouse");
    app.require_subcommand(1);

    const auto mode_check = CLI::IsMember({"faithful", "improved"});

    std::string sim_trace, sim_config, sim_mode, sim_reports, sim_path;
    auto* sim = app.add_subcommand("simulate", "Replay a trace through the controller");
    sim->add_option("trace", sim_trace, "Input trace CSV")->required();
    sim->add_option("--config", sim_config, "Config file");
    sim->add_option("--mode", sim_mode, "faithful or improved")->check(mode_check);
    sim->add_option("--reports", sim_reports, "Write the HID report stream here");
    sim->add_option("--path", sim_path, "Write the cursor path here");

    std::string feat_mode;
    auto* feat = app.add_subcommand("features", "Print the feature matrix");
    feat->add_option("--mode", feat_mode, "faithful or improved")->check(mode_check);

    std::string jit_trace, jit_config, jit_mode;
    std::int64_t jit_from = 0, jit_to = 0;
    auto* jit = app.add_subcommand("jitter", "Cursor jitter statistics over a time window");
    jit->add_option("trace", jit_trace, "Input trace CSV")->required();
    jit->add_option("--from", jit_from, "Window start (ms)")->required();
    jit->add_option("--to", jit_to, "Window end (ms)")->required();
    jit->add_option("--config", jit_config, "Config file");
    jit->add_option("--mode", jit_mode, "faithful or improved")->check(mode_check);

    std::vector<std::string> dec_hex;
    auto* dec = app.add_subcommand("decode", "Decode a 14-byte register burst given in hex");
    dec->add_option("bytes", dec_hex, "28 hex digits, whitespace allowed")->required();

    std::string noise_trace, noise_out;
    std::uint64_t noise_seed = 0;
    double noise_sigma = 0.0;
    auto* noi = app.add_subcommand("noise", "Add reproducible sensor noise to a trace");
    noi->add_option("trace", noise_trace, "Input trace CSV")->required();
    noi->add_option("--seed", noise_seed, "PRNG seed")->required();
    noi->add_option("--sigma", noise_sigma, "Noise std in counts")->required();
    noi->add_option("--out", noise_out, "Output trace CSV")->required();

    std::string cal_trace, cal_config;
    auto* cal = app.add_subcommand("calibrate", "Print the neutral pose from a trace's first row");
    cal->add_option("trace", cal_trace, "Input trace CSV")->required();
    cal->add_option("--config", cal_config, "Config file");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (sim->parsed()) {
            cmd_simulate(sim_trace, sim_config, sim_mode, sim_reports, sim_path, out);
        } else if (feat->parsed()) {
            cmd_features(feat_mode, out);
        } else if (jit->parsed()) {
            cmd_jitter(jit_trace, jit_config, jit_mode, jit_from, jit_to, out);
        } else if (dec->parsed()) {
            cmd_decode(dec_hex, out);
        } else if (noi->parsed()) {
            cmd_noise(noise_trace, noise_seed, noise_sigma, noise_out, out);
        } else if (cal->parsed()) {
            cmd_calibrate(cal_trace, cal_config, out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace headmouse
