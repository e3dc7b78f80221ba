#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "thrackle/error.hpp"
#include "thrackle/io.hpp"

namespace fs = std::filesystem;
using namespace thrackle;

namespace {

enum Exit { kPass = 0, kFail = 1, kParse = 2, kResource = 3 };

Drawing read_drawing(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tmf(buf.str());
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int cmd_validate(const std::string& file) {
  const Drawing d = read_drawing(file);
  const ThrackleReport r = validate_thrackle(d);
  if (r.ok) {
    std::cout << "thrackle: " << d.vertex_count() << " vertices, " << d.edge_count() << " edges, " << r.crossing_total
              << " crossings\n";
    return kPass;
  }
  std::cout << "not a thrackle: " << r.violations.size() << " violating pairs\n";
  for (const auto& v : r.violations) {
    std::cout << "  edges " << v.e << " and " << v.f << " meet " << v.meets << " times\n";
  }
  return kFail;
}

ClassConstraint parse_class(const std::string& s) {
  if (s == "T1") return ClassConstraint::T1;
  if (s == "T2") return ClassConstraint::T2;
  if (s == "T3") return ClassConstraint::T3;
  return ClassConstraint::None;
}

int cmd_enumerate(int n, const std::string& cls, const std::string& mode, bool group, const std::string& out_dir,
                  int threads) {
  EnumerateOptions opt;
  opt.group_reidemeister = group;
  opt.threads = threads;
  const Census c =
      enumerate_cycles(n, parse_class(cls), mode == "achiral" ? MirrorMode::Achiral : MirrorMode::Chiral, opt);
  fs::create_directories(out_dir);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < c.reps.size(); ++i) {
    std::ostringstream name;
    name << "rep-" << std::setw(4) << std::setfill('0') << i << ".tmf";
    names.push_back(name.str());
    write_file(fs::path(out_dir) / names.back(), to_tmf(c.reps[i]));
  }
  write_file(fs::path(out_dir) / "census.json", census_json(c, names));
  std::cout << c.reps.size() << " isotopy classes";
  if (c.grouped) std::cout << ", " << c.reid_classes.size() << " Reidemeister classes";
  std::cout << '\n';
  return kPass;
}

int cmd_emit(const std::string& file, const std::string& format, bool canonical) {
  const Drawing d = read_drawing(file);
  if (format == "svg") std::cout << to_svg(d);
  else if (format == "dot") std::cout << to_dot(d);
  else if (format == "json") std::cout << to_json(d);
  else std::cout << to_tmf(d, canonical);
  return kPass;
}

int cmd_verify(const std::string& suite, int n_max, bool json, int small_graph_limit) {
  VerdictReport r;
  if (suite == "outerplanar") r = suite_outerplanar(n_max);
  else if (suite == "annular") r = suite_annular(n_max);
  else r = suite_pants(n_max, small_graph_limit);
  std::cout << (json ? report_json(r) : report_text(r));
  return r.all_pass ? kPass : kFail;
}

int cmd_builtin(const std::string& name, int n, bool bare, bool canonical) {
  Drawing d = name == "pants" ? pants_six_cycle() : standard_musquash(n);
  if (bare) d = d.bare();
  std::cout << to_tmf(d, canonical);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thrackle drawing engine"};
  app.require_subcommand(1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "check that a TMF drawing is a thrackle");
  validate->add_option("file", file, "TMF file")->required();

  int n = 0, threads = 0;
  std::string cls = "any", mode = "achiral", out_dir = "census";
  bool group = false;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate thrackled n-cycles");
  enumerate->add_option("--n", n, "cycle length")->required()->check(CLI::Range(3, 64));
  enumerate->add_option("--class", cls, "class constraint")->check(CLI::IsMember({"any", "T1", "T2", "T3"}));
  enumerate->add_option("--mode", mode, "mirror convention")->check(CLI::IsMember({"chiral", "achiral"}));
  enumerate->add_flag("--group-reidemeister", group, "partition reps into Reidemeister classes");
  enumerate->add_option("--out", out_dir, "output directory");
  enumerate->add_option("--threads", threads, "worker threads (0: automatic)")->check(CLI::NonNegativeNumber);

  std::string format = "svg";
  bool canonical = false;
  auto* emit = app.add_subcommand("emit", "render a TMF drawing");
  emit->add_option("file", file, "TMF file")->required();
  emit->add_option("--format", format, "output format")->check(CLI::IsMember({"svg", "dot", "json", "tmf"}));
  emit->add_flag("--canonical", canonical, "canonical numbering (tmf format)");

  std::string suite;
  int n_max = 0, small_graph_limit = 11;
  bool json = false;
  auto* verify = app.add_subcommand("verify", "run a theorem suite");
  verify->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"outerplanar", "annular", "pants"}));
  verify->add_option("--n-max", n_max, "largest cycle length")->required()->check(CLI::Range(3, 64));
  verify->add_option("--small-graph-limit", small_graph_limit, "edge limit for small-graph searches (pants)");
  verify->add_flag("--json", json, "JSON report");

  std::string builtin_name;
  int builtin_n = 5;
  bool bare = false;
  auto* builtin = app.add_subcommand("builtin", "print a built-in drawing as TMF");
  builtin->add_option("name", builtin_name, "musquash or pants")->required()->check(CLI::IsMember({"musquash", "pants"}));
  builtin->add_option("--n", builtin_n, "musquash length (odd)");
  builtin->add_flag("--bare", bare, "drop the scaffold");
  builtin->add_flag("--canonical", canonical, "canonical numbering");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kParse;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*enumerate) return cmd_enumerate(n, cls, mode, group, out_dir, threads);
    if (*emit) return cmd_emit(file, format, canonical);
    if (*verify) return cmd_verify(suite, n_max, json, small_graph_limit);
    if (*builtin) return cmd_builtin(builtin_name, builtin_n, bare, canonical);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::ParseError: return kParse;
      case ErrorCode::ResourceLimit:
      case ErrorCode::BudgetExceeded: return kResource;
      default: return kFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kPass;
}
