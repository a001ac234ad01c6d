#include <CLI11.hpp>

#include <iostream>

#include "okbody/okcli.hpp"

using namespace okb;

namespace {

struct Options {
  std::string input;
  int truncation = 6;
  std::optional<std::uint64_t> flag_seed;
  std::string flag_matrix;
  std::string out;
  std::string svg;
  std::string t;
  int flags = 5;
  std::vector<int> p{1, 2, 4};
  int sigma_max = 4;
};

void common(CLI::App *sub, Options &o, bool needs_flag) {
  sub->add_option("input", o.input, "input JSON file")->required();
  sub->add_option("--K", o.truncation, "truncation bound");
  sub->add_option("--out", o.out, "write the result here instead of stdout");
  if (needs_flag) {
    sub->add_option("--flag-seed", o.flag_seed, "random flag from this seed");
    sub->add_option("--flag-matrix", o.flag_matrix,
                    "flag matrix, rows separated by ';', entries by ','");
  }
}

cli::JobSpec to_job(const std::string &command, const Options &o) {
  cli::JobSpec job;
  job.command = command;
  job.input = o.input;
  job.truncation = o.truncation;
  if (o.flag_seed && !o.flag_matrix.empty())
    throw InputError("give either --flag-seed or --flag-matrix, not both");
  if (o.flag_seed) {
    job.flag.kind = cli::FlagSpec::Kind::seed;
    job.flag.seed = *o.flag_seed;
  } else if (!o.flag_matrix.empty()) {
    job.flag.kind = cli::FlagSpec::Kind::matrix;
    job.flag.matrix = cli::parse_matrix(o.flag_matrix);
  }
  if (!o.svg.empty())
    job.svg_path = o.svg;
  if (!o.t.empty()) {
    try {
      job.t = parse_rational(o.t);
    } catch (const std::exception &) {
      throw InputError("--t must be a rational number, got " + o.t);
    }
  }
  job.flags = o.flags;
  job.p = o.p;
  job.sigma_max = o.sigma_max;
  return job;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Newton-Okounkov bodies of graded linear series on projective "
               "space, with exact arithmetic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cli::kToolVersion);
  Options o;

  auto *body = app.add_subcommand("body", "convex hull of valuation points");
  common(body, o, true);
  body->add_option("--svg", o.svg, "also write an SVG plot");

  auto *slice = app.add_subcommand(
      "slice", "slice at x1 = t against the restricted series");
  common(slice, o, true);
  slice->add_option("--t", o.t, "slice position a/b")->required();

  auto *volume = app.add_subcommand(
      "volume", "Hilbert volume, body volume and lattice index");
  common(volume, o, true);

  auto *sheaf = app.add_subcommand("sheafify", "saturate the base ideals");
  common(sheaf, o, false);

  auto *base = app.add_subcommand("base-locus", "stable base locus");
  common(base, o, false);

  auto *bir = app.add_subcommand("birational", "lattice birationality test");
  common(bir, o, false);

  auto *surf = app.add_subcommand(
      "surface", "Zariski chamber continuation on a surface lattice");
  common(surf, o, false);
  surf->add_option("--svg", o.svg, "also write an SVG plot");

  auto *gen = app.add_subcommand(
      "generic-test", "compare bodies under seeded random flags");
  common(gen, o, false);
  gen->add_option("--flags", o.flags, "number of random flags (seeds 1..n)");
  gen->add_option("--svg", o.svg, "plot the body for seed 1");

  auto *filt = app.add_subcommand("filtered-dims",
                                  "dimensions of the valuation filtration");
  common(filt, o, true);
  filt->add_option("--sigma-max", o.sigma_max, "largest |sigma|");

  auto *fuj = app.add_subcommand("fujita", "bodies of the Fujita subseries");
  common(fuj, o, true);
  fuj->add_option("--p", o.p, "subseries degrees")->expected(1, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    auto result = cli::run(to_job(command, o));
    if (o.out.empty())
      std::cout << result.text();
    else
      cli::write_file(o.out, result.text());
    return 0;
  } catch (const std::exception &e) {
    int code = cli::exit_code(e);
    const char *kind = code == 2 ? "input error" : code == 3 ? "unsupported"
                                                             : "internal error";
    std::cerr << "okbody: " << kind << ": " << e.what() << "\n";
    return code;
  }
}
