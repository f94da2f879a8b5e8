// Command-line front end: enumerate, census, invert, check, center, render.
//
// Exit codes: 0 success, 1 not a label, 2 usage error, 3 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "coxeter/center.hpp"
#include "coxeter/error.hpp"
#include "coxeter/inverse.hpp"
#include "coxeter/paklabel.hpp"
#include "coxeter/render.hpp"
#include "coxeter/serialize.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

coxeter::EnumerationOptions options_from_env() {
  coxeter::EnumerationOptions options;
  if (const char* cap = std::getenv("COXETER_REGION_CAP")) {
    try {
      options.region_cap = std::stoull(cap);
    } catch (const std::exception&) {
      throw coxeter::InvalidArgument("COXETER_REGION_CAP must be a non-negative integer");
    }
  }
  return options;
}

// Writes to the named file, or stdout when the name is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw coxeter::InvalidArgument("cannot open '" + path + "' for writing");
  file << text;
}

struct SpecArgs {
  int n = 0;
  int k = 0;
  int l = 0;
};

void add_spec_options(CLI::App* cmd, SpecArgs& args) {
  cmd->add_option("--n", args.n, "dimension")->required();
  cmd->add_option("--k", args.k, "positive offsets 1..k")->required();
  cmd->add_option("--l", args.l, "negative offsets -l..-1")->required();
}

int run_enumerate(const SpecArgs& args, const std::string& format, const std::string& output) {
  const coxeter::CoxeterSpec spec(args.n, args.k, args.l);
  const auto regions = coxeter::labeled_regions(spec, options_from_env());
  std::string text;
  if (format == "csv") {
    text = coxeter::csv_header(spec) + "\n";
    for (const auto& entry : regions) text += coxeter::csv_row(entry) + "\n";
  } else {
    for (const auto& entry : regions) text += coxeter::region_record(entry).dump() + "\n";
  }
  emit(output, text);
  return 0;
}

int run_census(const SpecArgs& args, bool seed_check) {
  const coxeter::CoxeterSpec spec(args.n, args.k, args.l);
  auto options = options_from_env();
  const auto record = coxeter::census(spec, options);
  auto json = coxeter::to_json(record);
  int status = 0;
  if (seed_check) {
    if (coxeter::tuple_count(spec) > options.tuple_cap) {
      json["exhaustive_check"] = "skipped";
    } else {
      const bool match = coxeter::enumerate_regions_exhaustive(spec, options) ==
                         coxeter::enumerate_regions(spec, options);
      json["exhaustive_check"] = match ? "match" : "mismatch";
      if (!match) status = kExitDomain;
    }
  }
  std::cout << json.dump() << "\n";
  return status;
}

int run_invert(int m, const std::string& label_text) {
  const auto label = coxeter::parse_label(label_text);
  if (!coxeter::is_m_catalan(label, m)) {
    std::cerr << "not an m-Catalan function: " << label.str() << " (m = " << m << ")\n";
    return kExitDomain;
  }
  std::cout << coxeter::to_json(coxeter::invert_label(label, m)).dump() << "\n";
  return 0;
}

int run_check(int m, const std::string& label_text) {
  const auto label = coxeter::parse_label(label_text);
  std::cout << coxeter::recognizer_report(label, m).dump() << "\n";
  return 0;
}

int run_center(int m, const std::string& label_text) {
  const auto label = coxeter::parse_label(label_text);
  std::cout << coxeter::to_json(coxeter::center_vector(label, m)).dump() << "\n";
  return 0;
}

int run_render(int m, const std::string& label_text, const std::string& format_text, bool plain,
               const std::string& output) {
  const auto label = coxeter::parse_label(label_text);
  const auto format = coxeter::parse_render_format(format_text);
  if (!coxeter::is_m_catalan(label, m)) {
    std::cerr << "not an m-Catalan function: " << label.str() << " (m = " << m << ")\n";
    return kExitDomain;
  }
  emit(output, plain ? coxeter::render_dyck(label, m, format)
                     : coxeter::render_labeled_dyck(label, m, format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pak-Stanley labels of (k,l)-Coxeter arrangements"};
  app.require_subcommand(1);

  SpecArgs spec_args;
  std::string format = "jsonl";
  std::string output;
  auto* enumerate = app.add_subcommand("enumerate", "list every region with its label");
  add_spec_options(enumerate, spec_args);
  enumerate->add_option("--format", format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  enumerate->add_option("-o,--output", output, "output file (default stdout)");

  bool seed_check = false;
  auto* census = app.add_subcommand("census", "region and label counts");
  add_spec_options(census, spec_args);
  census->add_flag("--seed-check", seed_check, "cross-check BFS against exhaustive enumeration");

  int m = 0;
  std::string label_text;
  auto add_label_options = [&](CLI::App* cmd) {
    cmd->add_option("--m", m, "order of the Catalan arrangement")->required()->check(
        CLI::PositiveNumber);
    cmd->add_option("--label", label_text, "comma-separated, or compact digits")->required();
  };
  auto* invert = app.add_subcommand("invert", "chamber and fundamental label of an m-Catalan label");
  add_label_options(invert);
  auto* check = app.add_subcommand("check", "m-Catalan / prime / m-parking recognizers");
  add_label_options(check);
  auto* center = app.add_subcommand("center", "center vector with its levels");
  add_label_options(center);

  std::string render_format = "ascii";
  bool plain = false;
  auto* render = app.add_subcommand("render", "Dyck path of a label (ASCII or SVG)");
  add_label_options(render);
  render->add_option("--format", render_format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render->add_flag("--plain", plain, "unlabeled path; the label must be weakly increasing");
  render->add_option("-o,--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) return run_enumerate(spec_args, format, output);
    if (*census) return run_census(spec_args, seed_check);
    if (*invert) return run_invert(m, label_text);
    if (*check) return run_check(m, label_text);
    if (*center) return run_center(m, label_text);
    if (*render) return run_render(m, label_text, render_format, plain, output);
  } catch (const coxeter::ResourceLimit& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const coxeter::NotALabel& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  } catch (const coxeter::InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const coxeter::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
