// lgroup: command-line front end.
//
//   lgroup analyze  (FILE | --gallery NAME)
//   lgroup spectrum (FILE | --gallery NAME) [--format json|dot]
//   lgroup crt      (FILE | --gallery NAME)     exit 0 solved, 1 incompatible,
//                                               2 not strongly semisimple, 3 bad input
//   lgroup gallery  [--name NAME]
//   lgroup selftest [--serial]

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lgroup/gallery.hpp"
#include "lgroup/laws.hpp"

namespace {

using namespace lgroup;

constexpr int exit_bad_input = 3;

struct Source {
  std::string file;
  std::string gallery_name;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* file = cmd->add_option("file", src.file, "Instance file (JSON)");
  auto* name = cmd->add_option("--gallery", src.gallery_name, "Use a built-in instance instead of a file");
  file->excludes(name);
  name->excludes(file);
}

Instance load(const Source& src) {
  if (!src.gallery_name.empty()) return gallery(src.gallery_name);
  if (src.file.empty()) throw Error(ErrorCode::parse_error, "no instance file or --gallery given");
  return load_instance(src.file);
}

Exec exec_of(bool serial) { return serial ? Exec::serial : Exec::parallel; }

int run_selftest_command(Exec exec) {
  const auto results = run_selftest(exec);
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::cout << (r.law.holds() ? "PASS " : "FAIL ") << r.instance << ' ' << r.law.name << " (" << r.law.cases
              << " cases)";
    if (!r.law.holds()) {
      std::cout << ": " << r.law.failures << " failures, first " << r.law.first_failure;
      ++failed;
    }
    std::cout << '\n';
  }
  std::cout << results.size() - failed << '/' << results.size() << " laws hold\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ideals, spectra and patching for unital l-groups"};
  app.require_subcommand(1);
  bool serial = false;
  app.add_flag("--serial", serial, "Use the serial reference kernels");

  Source analyze_src;
  auto* analyze_cmd = app.add_subcommand("analyze", "Ideals, spectrum, radical and Yosida values as JSON");
  add_source(analyze_cmd, analyze_src);

  Source spectrum_src;
  std::string format = "json";
  auto* spectrum_cmd = app.add_subcommand("spectrum", "The prime spectrum as JSON or a Graphviz Hasse diagram");
  add_source(spectrum_cmd, spectrum_src);
  spectrum_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));

  Source crt_src;
  auto* crt_cmd = app.add_subcommand("crt", "Run the instance's patching task");
  add_source(crt_cmd, crt_src);

  std::string gallery_name;
  auto* gallery_cmd = app.add_subcommand("gallery", "Print a built-in instance, or list them");
  gallery_cmd->add_option("--name", gallery_name, "Instance name");

  app.add_subcommand("selftest", "Check every law suite on the gallery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_bad_input;
  }

  const Exec exec = exec_of(serial);
  try {
    if (analyze_cmd->parsed()) {
      std::cout << canonical_dump(analyze(load(analyze_src), exec));
      return 0;
    }
    if (spectrum_cmd->parsed()) {
      const Instance inst = load(spectrum_src);
      const SpectrumSpace X(inst.group);
      std::cout << (format == "dot" ? to_dot(X) : canonical_dump(spectrum_to_json(X)));
      return 0;
    }
    if (crt_cmd->parsed()) {
      const PatchResult result = run_task(load(crt_src), exec);
      std::cout << canonical_dump(to_json(result));
      return exit_code(result);
    }
    if (gallery_cmd->parsed()) {
      if (gallery_name.empty()) {
        for (auto name : gallery_names()) std::cout << name << '\n';
        return 0;
      }
      std::cout << canonical_dump(to_json(gallery(gallery_name)));
      return 0;
    }
    return run_selftest_command(exec);
  } catch (const std::exception& e) {
    std::cerr << "lgroup: " << e.what() << '\n';
    return exit_bad_input;
  }
}
