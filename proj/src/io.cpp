#include "rieszwave/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include <json.hpp>

namespace rieszwave::io {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    std::error_code ec;
    if (target.has_parent_path()) fs::create_directories(target.parent_path(), ec);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("rename failed for " + target.string() + ": " + ec.message());
    }
}

std::string to_csv(const compare::ComparisonReport& report) {
    std::string out = "x,t,x0,u_a,u_b,abs_dev,rel_dev,gaussian_remnant,error\n";
    for (const auto& r : report.records) {
        out += format_double(r.x) + "," + format_double(r.t) + "," + format_double(r.x0) + "," +
               format_double(r.u_a) + "," + format_double(r.u_b) + "," +
               format_double(r.abs_dev) + "," + format_double(r.rel_dev) + "," +
               format_double(r.gaussian_remnant) + "," + r.error + "\n";
    }
    return out;
}

std::string to_csv(const std::vector<compare::ValidityPoint>& map) {
    std::string out = "x,t,x0,xi,ratio_x_x0,u_series,u_oracle,abs_dev,allowance,pass,error\n";
    for (const auto& p : map) {
        out += format_double(p.x) + "," + format_double(p.t) + "," + format_double(p.x0) + "," +
               format_double(p.xi) + "," + format_double(p.ratio_x_x0) + "," +
               format_double(p.u_series) + "," + format_double(p.u_oracle) + "," +
               format_double(p.abs_dev) + "," + format_double(p.allowance) + "," +
               (p.pass ? "1" : "0") + "," + p.error + "\n";
    }
    return out;
}

std::string to_json(const nodes::NodeReport& report) {
    nlohmann::ordered_json j;
    j["t"] = report.t;
    j["params"] = {{"mu", report.params.mu},
                   {"kappa", report.params.kappa},
                   {"x0", report.params.x0}};
    j["representation"] = std::string(to_string(report.representation));
    j["window"] = {{"lo", report.window.lo}, {"hi", report.window.hi}};
    j["x_floor"] = report.x_floor;
    j["grid_points"] = report.grid_points;
    j["nodes"] = report.nodes;
    j["degenerate"] = report.degenerate;
    j["min_point"] = {{"x_min", report.min_point.x_min}, {"u_min", report.min_point.u_min}};
    j["warnings"] = report.warnings;
    return j.dump(2) + "\n";
}

std::string summary_line(const compare::ComparisonReport& report) {
    const auto& s = report.summary;
    return "max_abs_dev=" + format_double(s.max_abs_dev) +
           " max_rel_dev=" + format_double(s.max_rel_dev) + " worst_point=(x=" +
           format_double(s.worst_x) + ",t=" + format_double(s.worst_t) +
           ",x0=" + format_double(s.worst_x0) + ")";
}

}  // namespace rieszwave::io
