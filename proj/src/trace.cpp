#include "headmouse/trace.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "headmouse/errors.hpp"

namespace headmouse {

namespace {

std::string strip(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            fields.push_back(strip(line.substr(pos)));
            break;
        }
        fields.push_back(strip(line.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return fields;
}

std::int64_t parse_int(const std::string& field, const std::string& where) {
    std::int64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty()) {
        throw ParseError(where + ": not an integer: '" + field + "'");
    }
    return value;
}

std::int16_t parse_count(const std::string& field, const std::string& where) {
    const std::int64_t v = parse_int(field, where);
    if (v < std::numeric_limits<std::int16_t>::min() ||
        v > std::numeric_limits<std::int16_t>::max()) {
        throw RangeError(where + ": " + std::to_string(v) + " outside signed 16-bit range");
    }
    return static_cast<std::int16_t>(v);
}

bool parse_flag(const std::string& field, const std::string& where) {
    const std::int64_t v = parse_int(field, where);
    if (v != 0 && v != 1) {
        throw ParseError(where + ": expected 0 or 1, got " + std::to_string(v));
    }
    return v == 1;
}

}  // namespace

Trace parse_trace(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(name + ": empty input");
    }
    if (strip(line) != kTraceHeader) {
        throw ParseError(name + ": bad header line");
    }

    Trace trace;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        const std::string where = name + ":" + std::to_string(line_no);
        const auto fields = split_fields(line);
        if (fields.size() != 11) {
            throw ParseError(where + ": expected 11 columns, got " +
                             std::to_string(fields.size()));
        }
        TraceRow row;
        row.t_ms = parse_int(fields[0], where);
        row.ax = parse_count(fields[1], where);
        row.ay = parse_count(fields[2], where);
        row.az = parse_count(fields[3], where);
        row.gx = parse_count(fields[4], where);
        row.gy = parse_count(fields[5], where);
        row.gz = parse_count(fields[6], where);
        row.pedal_l = parse_flag(fields[7], where) ? Level::High : Level::Low;
        row.pedal_r = parse_flag(fields[8], where) ? Level::High : Level::Low;
        row.a_attached = parse_flag(fields[9], where);
        row.b_attached = parse_flag(fields[10], where);
        if (!trace.empty() && row.t_ms <= trace.back().t_ms) {
            throw NonMonotonicTime(where + ": t_ms " + std::to_string(row.t_ms) +
                                   " not after " + std::to_string(trace.back().t_ms));
        }
        trace.push_back(row);
    }
    return trace;
}

Trace load_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open trace file: " + path.string());
    }
    return parse_trace(in, path.string());
}

void write_trace(const Trace& tr, std::ostream& out) {
    out << kTraceHeader << '\n';
    for (const TraceRow& r : tr) {
        out << r.t_ms << ',' << r.ax << ',' << r.ay << ',' << r.az << ',' << r.gx << ',' << r.gy
            << ',' << r.gz << ',' << (r.pedal_l == Level::High ? 1 : 0) << ','
            << (r.pedal_r == Level::High ? 1 : 0) << ',' << (r.a_attached ? 1 : 0) << ','
            << (r.b_attached ? 1 : 0) << '\n';
    }
}

void save_trace(const Trace& tr, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file: " + path.string());
    }
    write_trace(tr, out);
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

}  // namespace headmouse
