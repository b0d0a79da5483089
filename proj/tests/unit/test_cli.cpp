// Copyright 2026 The qcbm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "qcbm/cli/commands.hpp"
#include "qcbm/io.hpp"

using namespace qcbm;
namespace fs = std::filesystem;

namespace {

class TempDir {
  public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() /
                ("qcbm_cli_test_" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;

    [[nodiscard]] const fs::path &path() const { return path_; }
    [[nodiscard]] std::string str() const { return path_.string(); }

  private:
    fs::path path_;
};

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qcbm");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void spit(const fs::path &p, const std::string &text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

std::map<std::string, std::string> directory_contents(const fs::path &dir) {
    std::map<std::string, std::string> files;
    for (const auto &e : fs::directory_iterator(dir)) {
        files[e.path().filename().string()] = slurp(e.path());
    }
    return files;
}

// Recovers the config text from a CSV preamble.
std::string config_from_csv(const std::string &csv) {
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    REQUIRE(line.rfind("# qcbm ", 0) == 0);
    std::string config;
    while (std::getline(lines, line) && !line.empty() && line[0] == '#') {
        config += (line.size() > 2 ? line.substr(2) : std::string()) + '\n';
    }
    return config;
}

// The first line after the '#' preamble.
std::string csv_header(const std::string &csv) {
    std::istringstream lines(csv);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] != '#') {
            return line;
        }
    }
    return {};
}

std::size_t data_rows(const std::string &csv) {
    std::istringstream lines(csv);
    std::string line;
    std::size_t n = 0;
    bool header_seen = false;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (header_seen) {
            ++n;
        }
        header_seen = true;
    }
    return n;
}

std::map<std::string, std::string> manifest() {
    std::ifstream f(QCBM_CSV_MANIFEST);
    REQUIRE(f);
    std::map<std::string, std::string> m;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto colon = line.find(": ");
        REQUIRE(colon != std::string::npos);
        m[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return m;
}

} // namespace

TEST_CASE("index lists accept ranges and mixtures", "[cli]") {
    CHECK(cli::parse_index_list("0..3") == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(cli::parse_index_list("1,3,5") == std::vector<std::size_t>{1, 3, 5});
    CHECK(cli::parse_index_list("0..2, 8") == std::vector<std::size_t>{0, 1, 2, 8});
    CHECK(cli::parse_index_list("4") == std::vector<std::size_t>{4});
    CHECK_THROWS_AS(cli::parse_index_list("3..1"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_index_list("a"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_index_list(""), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_index_list("-1"), cli::UsageError);
}

TEST_CASE("config files load over defaults and reject unknown keys", "[cli]") {
    TempDir dir;
    const auto good = dir.path() / "good.ini";
    spit(good, "[experiment]\nqubits = 3\ndepths = 0..2\ntarget = ghz\nruns = 7\n"
               "steps = 50\nepsilon = 1e-6\nseed = 42\nshots = 128\n"
               "\n[optimizer]\nlearning_rate = 0.05\n");
    const auto c = cli::load_config_file(good.string());
    CHECK(c.n_qubits == 3);
    CHECK(c.depths == std::vector<std::size_t>{0, 1, 2});
    CHECK(c.target == "ghz");
    CHECK(c.n_runs == 7);
    CHECK(c.n_steps == 50);
    CHECK(c.epsilon == 1e-6);
    CHECK(c.seed == 42);
    CHECK(c.n_shots == std::optional<std::size_t>{128});
    CHECK(c.adam.learning_rate == 0.05);
    CHECK(c.adam.beta1 == 0.9);

    const auto unknown = dir.path() / "unknown.ini";
    spit(unknown, "[experiment]\nqubits = 3\ncolour = blue\n");
    CHECK_THROWS_AS(cli::load_config_file(unknown.string()), cli::UsageError);
    const auto bad_value = dir.path() / "bad.ini";
    spit(bad_value, "[experiment]\nruns = many\n");
    CHECK_THROWS_AS(cli::load_config_file(bad_value.string()), cli::UsageError);
    CHECK_THROWS_AS(cli::load_config_file((dir.path() / "absent.ini").string()),
                    cli::UsageError);

    const auto r = run_cli({"--config", unknown.string(), "bounds"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("experiment.colour") != std::string::npos);
}

TEST_CASE("rendered configs load back to the same config", "[cli]") {
    cli::ExperimentConfig c;
    c.n_qubits = 4;
    c.depths = {1, 3};
    c.target = "sparse";
    c.target_seed = 99;
    c.n_shots = 500;
    c.epsilon = 3e-7;
    c.seed = 12345;
    c.adam.learning_rate = 0.02;
    TempDir dir;
    const auto path = dir.path() / "echo.ini";
    spit(path, cli::render_config(c, "sweep"));
    const auto back = cli::load_config_file(path.string());
    CHECK(cli::render_config(back, "sweep") == cli::render_config(c, "sweep"));
    CHECK(back.target_seed == c.target_seed);
    CHECK(back.n_shots == c.n_shots);
}

TEST_CASE("bad usage exits with code 2", "[cli]") {
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run_cli({"train", "--runs", "ten"}).code == cli::kExitUsage);
    CHECK(run_cli({"train", "--bogus"}).code == cli::kExitUsage);
    CHECK(run_cli({"--workers", "0", "bounds"}).code == cli::kExitUsage);
    TempDir dir;
    CHECK(run_cli({"--out", dir.str(), "train", "-t", "nope"}).code == cli::kExitUsage);
    CHECK(run_cli({"--out", dir.str(), "train", "-n", "3", "-t", "sparse"}).code ==
          cli::kExitUsage);
    CHECK(run_cli({"--out", dir.str(), "train", "-n", "2", "-t", "w"}).code ==
          cli::kExitUsage);
    CHECK(run_cli({"--out", dir.str(), "train", "--runs", "0"}).code == cli::kExitUsage);
    CHECK(run_cli({"--out", dir.str(), "sweep", "--depths", "2..1"}).code ==
          cli::kExitUsage);
    CHECK(run_cli({"--out", dir.str(), "hessian"}).code == cli::kExitUsage);
    CHECK(run_cli({"--out", dir.str(), "gradvar", "--inits", "1"}).code ==
          cli::kExitUsage);
    CHECK(run_cli({"--out", dir.str(), "bounds", "-n", "1"}).code == cli::kExitUsage);
    CHECK(run_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("missing HEP samples are a usage error naming the path", "[cli]") {
    TempDir dir;
    const std::string missing = (dir.path() / "no_such_samples.txt").string();
    const auto r = run_cli({"--out", dir.str(), "train", "-n", "4", "-t", "hep",
                            "--hep-file", missing, "--runs", "1", "--steps", "1"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find(missing) != std::string::npos);

    const auto none = run_cli({"--out", dir.str(), "train", "-n", "4", "-t", "hep"});
    CHECK(none.code == cli::kExitUsage);

    const auto bad = dir.path() / "bad_samples.txt";
    spit(bad, "0.1 0.2\n0.3 oops\n");
    const auto r2 = run_cli({"--out", dir.str(), "train", "-n", "4", "-t", "hep",
                             "--hep-file", bad.string(), "--runs", "1"});
    CHECK(r2.code == cli::kExitUsage);
    CHECK(r2.err.find(bad.string() + ":2:") != std::string::npos);
}

TEST_CASE("qfi refuses widths above the matrix guard", "[cli]") {
    TempDir dir;
    const auto r = run_cli({"--out", dir.str(), "qfi", "-n", "7", "--depths", "1"});
    CHECK(r.code == cli::kExitUsage);
    CHECK_FALSE(fs::exists(dir.path() / "qfi_7q.csv"));
}

TEST_CASE("train writes named records and reruns are byte-identical", "[cli]") {
    TempDir a;
    TempDir b;
    const std::vector<std::string> args{"train", "-n", "2", "-p", "1", "-t", "bell",
                                        "--runs", "3", "--steps", "25"};
    auto with_out = [&](const TempDir &d, const char *workers) {
        std::vector<std::string> v{"--seed", "17", "--workers", workers, "--out", d.str()};
        v.insert(v.end(), args.begin(), args.end());
        return v;
    };
    REQUIRE(run_cli(with_out(a, "1")).code == cli::kExitOk);
    REQUIRE(run_cli(with_out(b, "3")).code == cli::kExitOk);
    const auto fa = directory_contents(a.path());
    const auto fb = directory_contents(b.path());
    CHECK(fa == fb);
    for (int i = 0; i < 3; ++i) {
        CHECK(fa.count("run_2q_1p_bell_" + std::to_string(i) + ".json") == 1);
    }
    CHECK(fa.count("summary_2q_1p_bell.csv") == 1);
    CHECK(fa.size() == 4);

    const auto rec = io::json::parse(fa.at("run_2q_1p_bell_2.json"));
    CHECK(rec.at("schema") == io::kRunRecordSchema);
    CHECK(rec.at("loss_trajectory").size() == 26);
    CHECK_FALSE(rec.contains("wall_time_s"));
    CHECK(rec.at("experiment").get<std::string>().find("seed = 17") != std::string::npos);

    TempDir c;
    auto timed = with_out(c, "1");
    timed.push_back("--wall-time");
    REQUIRE(run_cli(timed).code == cli::kExitOk);
    CHECK(io::json::parse(slurp(c.path() / "run_2q_1p_bell_0.json"))
              .contains("wall_time_s"));

    TempDir d;
    auto quiet = with_out(d, "1");
    quiet.push_back("--no-records");
    REQUIRE(run_cli(quiet).code == cli::kExitOk);
    CHECK(directory_contents(d.path()).size() == 1);
}

TEST_CASE("sweep config echo reproduces every output byte for byte", "[cli]") {
    TempDir first;
    const auto r = run_cli({"--seed", "5", "--out", first.str(), "sweep", "-n", "2",
                            "--depths", "0..2", "-t", "sparse", "--runs", "3",
                            "--steps", "30", "--shots", "200"});
    REQUIRE(r.code == cli::kExitOk);
    const auto files = directory_contents(first.path());
    REQUIRE(files.count("sweep_2q_sparse.csv") == 1);
    REQUIRE(files.count("sweep_2q_sparse.json") == 1);
    REQUIRE(files.count("pc_2q_sparse.txt") == 1);
    CHECK(files.count("run_2q_2p_sparse_2.json") == 1);
    CHECK(files.size() == 3 + 3 * 3);
    CHECK(data_rows(files.at("sweep_2q_sparse.csv")) == 3);
    CHECK(files.at("pc_2q_sparse.txt").find("p_c = ") != std::string::npos);
    CHECK(r.out.find("p_c = ") != std::string::npos);

    const std::string config = config_from_csv(files.at("sweep_2q_sparse.csv"));
    CHECK(config == cli::render_config(cli::load_config_file([&] {
                                           const auto p = first.path() / "x.ini";
                                           spit(p, config);
                                           return p.string();
                                       }()),
                                       "sweep"));
    const auto sweep_json = io::json::parse(files.at("sweep_2q_sparse.json"));
    CHECK(sweep_json.at("config") == config);
    CHECK(sweep_json.at("command") == "sweep");

    TempDir cfg_dir;
    TempDir second;
    const auto cfg = cfg_dir.path() / "echo.ini";
    spit(cfg, config);
    REQUIRE(run_cli({"--config", cfg.string(), "--out", second.str(), "--workers", "2",
                     "sweep"})
                .code == cli::kExitOk);
    CHECK(directory_contents(second.path()) == files);
}

TEST_CASE("CSV headers match the checked-in manifest", "[cli]") {
    const auto m = manifest();
    CHECK(m.at("sweep") == io::kSweepHeader);
    CHECK(m.at("summary") == io::kSweepHeader);
    CHECK(m.at("bounds") == io::kBoundsHeader);
    CHECK(m.at("qfi") == io::kQfiHeader);
    CHECK(m.at("gradvar") == io::kGradvarHeader);
    CHECK(m.at("hessian") == io::kSpectrumHeader);

    TempDir dir;
    REQUIRE(run_cli({"--out", dir.str(), "train", "-n", "2", "-p", "0", "--runs", "2",
                     "--steps", "5"})
                .code == cli::kExitOk);
    REQUIRE(run_cli({"--out", dir.str(), "sweep", "-n", "2", "--depths", "0,1",
                     "--runs", "2", "--steps", "5", "--no-records"})
                .code == cli::kExitOk);
    REQUIRE(run_cli({"--out", dir.str(), "bounds", "-n", "4"}).code == cli::kExitOk);
    REQUIRE(run_cli({"--out", dir.str(), "qfi", "-n", "2", "--depths", "0..2",
                     "--samples", "2"})
                .code == cli::kExitOk);
    REQUIRE(run_cli({"--out", dir.str(), "gradvar", "--qubits-list", "2,4", "--depth",
                     "2", "--targets", "ghz,uniform", "--inits", "4"})
                .code == cli::kExitOk);
    REQUIRE(run_cli({"--out", dir.str(), "hessian", "--record",
                     (dir.path() / "run_2q_0p_uniform_0.json").string()})
                .code == cli::kExitOk);

    const std::map<std::string, std::string> produced{
        {"summary_2q_0p_uniform.csv", "summary"}, {"sweep_2q_uniform.csv", "sweep"},
        {"bounds_4q.csv", "bounds"},              {"qfi_2q.csv", "qfi"},
        {"gradvar.csv", "gradvar"},               {"hessian_run_2q_0p_uniform_0.csv", "hessian"}};
    for (const auto &[file, kind] : produced) {
        INFO(file);
        const auto text = slurp(dir.path() / file);
        CHECK(csv_header(text) == m.at(kind));
        CHECK(text.rfind("# qcbm ", 0) == 0);
    }
    CHECK(data_rows(slurp(dir.path() / "qfi_2q.csv")) == 3);
    // One row per (width, target) pair.
    CHECK(data_rows(slurp(dir.path() / "gradvar.csv")) == 4);
    CHECK(data_rows(slurp(dir.path() / "hessian_run_2q_0p_uniform_0.csv")) == 4);
}

TEST_CASE("bounds prints flags for discrepant published entries", "[cli]") {
    TempDir dir;
    const auto six = run_cli({"--out", dir.str(), "bounds", "-n", "6"});
    REQUIRE(six.code == cli::kExitOk);
    CHECK(six.out.find("flag: p_to_dc: ceiling rule gives 6, published table lists 5") !=
          std::string::npos);
    CHECK(six.out.find("flag: p_to_dla") != std::string::npos);
    const auto five = run_cli({"--out", dir.str(), "bounds", "-n", "5"});
    REQUIRE(five.code == cli::kExitOk);
    CHECK(five.out.find("flag:") == std::string::npos);
    const auto j = io::json::parse(slurp(dir.path() / "bounds_6q.json"));
    CHECK(j.at("command") == "bounds");
}

TEST_CASE("hessian reports runtime failures for bad records", "[cli]") {
    TempDir dir;
    const auto junk = dir.path() / "junk.json";
    spit(junk, "{ not json");
    CHECK(run_cli({"--out", dir.str(), "hessian", "--record", junk.string()}).code ==
          cli::kExitRuntime);
    const auto wrong = dir.path() / "wrong.json";
    spit(wrong, R"({"schema": "qcbm.run_record.v1"})");
    CHECK(run_cli({"--out", dir.str(), "hessian", "--record", wrong.string()}).code ==
          cli::kExitRuntime);
    CHECK(run_cli({"--out", dir.str(), "hessian", "--record",
                   (dir.path() / "absent.json").string()})
              .code == cli::kExitRuntime);
}

TEST_CASE("hessian output describes the trained run", "[cli]") {
    TempDir dir;
    REQUIRE(run_cli({"--out", dir.str(), "train", "-n", "2", "-p", "1", "-t", "bell",
                     "--runs", "1", "--steps", "10"})
                .code == cli::kExitOk);
    const auto record = (dir.path() / "run_2q_1p_bell_0.json").string();
    const auto r = run_cli({"--out", dir.str(), "hessian", "--record", record});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = io::json::parse(slurp(dir.path() / "hessian_run_2q_1p_bell_0.json"));
    CHECK(j.at("n_params") == 8);
    CHECK(j.at("eigenvalues").size() == 8);
    CHECK(j.at("target") == "bell");
    CHECK(r.out.find("n_params=8") != std::string::npos);
}
