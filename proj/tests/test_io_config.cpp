#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rieszwave/config.hpp"
#include "rieszwave/io.hpp"
#include "rieszwave/nodes.hpp"

using namespace rieszwave;

TEST_CASE("format_double: shortest round-trip strings") {
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(1.0) == "1");
    CHECK(io::format_double(-2.5e-3) == "-0.0025");
    for (double v : {0.1, 1.0 / 3.0, 6.5, -1.591549165e-3, 1e300, 5e-324, -0.0}) {
        const std::string s = io::format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("atomic_write: content lands, no temp residue, nested dirs") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "rieszwave_io_test";
    fs::remove_all(dir);
    const std::string target = (dir / "a" / "b.txt").string();
    io::atomic_write(target, "hello\n");
    std::ifstream in(target);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "hello\n");
    CHECK(!fs::exists(target + ".tmp"));
    fs::remove_all(dir);
}

TEST_CASE("NodeReport JSON round-trips through a parser") {
    nodes::NodeReport rep;
    rep.t = 1.7;
    rep.params = {1, 1, 1};
    rep.representation = Representation::spectral_oracle;
    rep.window = {0.01, 6.0};
    rep.x_floor = 0.01;
    rep.grid_points = 4096;
    rep.nodes = {-0.3228, 0.3228};
    rep.min_point = {0.01, -0.0377};
    const auto j = nlohmann::json::parse(io::to_json(rep));
    CHECK(j["t"] == 1.7);
    CHECK(j["representation"] == "spectral");
    CHECK(j["nodes"].size() == 2);
    CHECK(j["min_point"]["u_min"] == -0.0377);
    CHECK(j["params"]["x0"] == 1.0);
}

TEST_CASE("config parsing: values, comments, overrides of defaults") {
    const std::string text =
        "# sample config\n"
        "mu = 2.5\n"
        "kappa = 0.5   # trailing comment\n"
        "x0 = 0\n"
        "term_tol = 1e-14\n"
        "max_terms = 500\n"
        "k_max = 100\n"
        "abs_tol = 1e-9\n"
        "rel_tol = 1e-9\n"
        "max_subdivisions = 512\n"
        "out_dir = /tmp/rw\n"
        "float_format = 12\n";
    const RunConfig cfg = parse_config_text(text);
    CHECK(cfg.params.mu == 2.5);
    CHECK(cfg.params.kappa == 0.5);
    CHECK(cfg.params.x0 == 0.0);
    CHECK(cfg.series.term_tol == 1e-14);
    CHECK(cfg.series.max_terms == 500);
    CHECK(cfg.quad.max_subdivisions == 512);
    CHECK(cfg.out_dir == "/tmp/rw");
    CHECK(cfg.float_format == "12");
}

TEST_CASE("config parsing: errors") {
    CHECK_THROWS_AS(parse_config_text("nonsense = 1\n"), std::domain_error);  // unknown key
    CHECK_THROWS_AS(parse_config_text("mu 2.5\n"), std::domain_error);        // no '='
    CHECK_THROWS_AS(parse_config_text("mu = abc\n"), std::domain_error);      // bad number
    CHECK_THROWS_AS(parse_config_text("kappa = -1\n"), std::domain_error);    // invariant
    CHECK_THROWS_AS(parse_config_text("max_terms = 2\n"), std::domain_error);
    CHECK_THROWS_AS(parse_config_text("float_format = abc\n"), std::domain_error);
    CHECK_THROWS_AS(parse_config_text("float_format = 25\n"), std::domain_error);
}

TEST_CASE("RIESZWAVE_CONFIG environment variable supplies the default path") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "rieszwave_env_cfg.txt";
    {
        std::ofstream out(path);
        out << "mu = 7\n";
    }
    setenv("RIESZWAVE_CONFIG", path.string().c_str(), 1);
    const RunConfig cfg = load_default_config();
    CHECK(cfg.params.mu == 7.0);
    unsetenv("RIESZWAVE_CONFIG");
    const RunConfig plain = load_default_config();
    CHECK(plain.params.mu == 1.0);
    fs::remove(path);
}
