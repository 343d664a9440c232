// duality-lab: runs one verification command described by a JSON config.
//
// Exit status: 0 when every check passes, 1 when any check fails, 2 when the
// config or the command line is unusable.

#include "duality/cli/runner.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

void writeFile(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

void printTable(const duality::cli::json& report) {
  std::size_t width = 5;
  for (const auto& c : report["checks"]) width = std::max(width, c["name"].get<std::string>().size());
  std::cout << report["command"].get<std::string>() << "  (" << report["backend"].get<std::string>() << ", seed "
            << report["seed"] << ")\n";
  for (const auto& c : report["checks"]) {
    const auto name = c["name"].get<std::string>();
    std::cout << "  " << name << std::string(width - name.size() + 2, ' ') << c["verdict"].get<std::string>()
              << "  cases " << c["cases"] << "  worst " << c["worst_residual"];
    if (c.contains("witness") && !c["witness"].get<std::string>().empty())
      std::cout << "  (" << c["witness"].get<std::string>() << ")";
    std::cout << '\n';
  }
  std::cout << "verdict: " << report["verdict"].get<std::string>() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group duality and weighted-length verification suites"};
  std::string configPath;
  std::string outDir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> backend;
  app.add_option("--config", configPath, "JSON run config")->required()->check(CLI::ExistingFile);
  app.add_option("--out", outDir, "directory for report.json and CSV tables");
  app.add_option("--seed", seed, "override the config seed");
  app.add_option("--backend", backend, "override the config backend")
      ->check(CLI::IsMember({"float", "cyclotomic"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  duality::cli::RunConfig cfg;
  try {
    std::ifstream in(configPath, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = duality::cli::parseConfig(buf.str());
  } catch (const duality::cli::ConfigError& e) {
    for (const auto& issue : e.issues()) std::cerr << configPath << ": " << issue.path << ": " << issue.message << '\n';
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  const auto result = duality::cli::runCommand(cfg, {seed, backend});
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  try {
    std::filesystem::create_directories(outDir);
    writeFile(std::filesystem::path(outDir) / "report.json", result.report.dump(2) + "\n");
    for (const auto& [name, text] : result.files) writeFile(std::filesystem::path(outDir) / name, text);
  } catch (const std::exception& e) {
    std::cerr << "duality-lab: " << e.what() << '\n';
    return 2;
  }
  printTable(result.report);
  // wall time stays out of report.json so reports are byte-identical across runs
  std::cerr << "elapsed " << elapsed << " s\n";
  return result.pass ? 0 : 1;
}
