#include "rieszwave/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace rieszwave {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw std::domain_error("config: bad numeric value for " + key + ": '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_real(key, value);
    const int i = static_cast<int>(v);
    if (i != v) throw std::domain_error("config: " + key + " must be an integer");
    return i;
}

}  // namespace

void RunConfig::validate() const {
    params.validate();
    series.validate();
    quad.validate();
    if (float_format != "shortest") {
        // otherwise a decimal digit count
        const int digits = parse_int("float_format", float_format);
        if (digits < 1 || digits > 17)
            throw std::domain_error("config: float_format digits must be in [1, 17]");
    }
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("config: line " + std::to_string(lineno) +
                                    " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "mu") cfg.params.mu = parse_real(key, value);
        else if (key == "kappa") cfg.params.kappa = parse_real(key, value);
        else if (key == "x0") cfg.params.x0 = parse_real(key, value);
        else if (key == "term_tol") cfg.series.term_tol = parse_real(key, value);
        else if (key == "max_terms") cfg.series.max_terms = parse_int(key, value);
        else if (key == "k_max") cfg.series.k_max = parse_int(key, value);
        else if (key == "abs_tol") cfg.quad.abs_tol = parse_real(key, value);
        else if (key == "rel_tol") cfg.quad.rel_tol = parse_real(key, value);
        else if (key == "max_subdivisions") cfg.quad.max_subdivisions = parse_int(key, value);
        else if (key == "out_dir") cfg.out_dir = value;
        else if (key == "float_format") cfg.float_format = value;
        else throw std::domain_error("config: unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("config: cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

RunConfig load_default_config() {
    const char* env = std::getenv("RIESZWAVE_CONFIG");
    if (env != nullptr && env[0] != '\0') return parse_config_file(env);
    return RunConfig{};
}

}  // namespace rieszwave
