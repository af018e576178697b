// Batch front-end: declarative JSON jobs in, canonical reports out.
//
// Exit codes: 0 success, 2 unparseable/schema-invalid input,
// 3 violated mathematical precondition, 1 anything else.

#include "qpt/job.hpp"
#include "qpt/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitPrecondition = 3;

void write_report(const qpt::Json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file '" + out_path + "'");
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with quadratic Poisson tori"};
  app.set_version_flag("--version", qpt::kVersion);

  std::string job_path, out_path, suite_name;
  int truncation = 0;
  std::uint64_t seed = 20240817ULL;
  app.add_option("--job", job_path, "job document (JSON); stdin when omitted");
  app.add_option("--out", out_path, "report file; stdout when omitted");
  app.add_option("--truncation", truncation, "override the truncation degree N")
      ->check(CLI::Range(1, 64));
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--suite", suite_name, "run a named verification suite ('all' runs every one)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!suite_name.empty()) {
      const qpt::Json report = qpt::run_suite_report(suite_name, seed);
      write_report(report, out_path);
      return report.at("passed").get<bool>() ? 0 : 1;
    }
    std::string text;
    if (job_path.empty()) {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream is(job_path, std::ios::binary);
      if (!is) {
        std::cerr << "error: cannot open job file '" << job_path << "'\n";
        return 1;
      }
      std::ostringstream ss;
      ss << is.rdbuf();
      text = ss.str();
    }
    qpt::Json job;
    try {
      job = qpt::Json::parse(text);
    } catch (const qpt::Json::parse_error& e) {
      std::cerr << "schema error: " << e.what() << "\n";
      return kExitSchema;
    }
    qpt::JobOptions options;
    options.truncation_override = truncation;
    write_report(qpt::run_job(job, options), out_path);
    return 0;
  } catch (const qpt::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const qpt::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
