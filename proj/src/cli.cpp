#include "diagsurf/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "diagsurf/acceptance.hpp"
#include "diagsurf/codes.hpp"
#include "diagsurf/counts.hpp"
#include "diagsurf/enumerate.hpp"
#include "diagsurf/export.hpp"
#include "diagsurf/hermitian.hpp"
#include "diagsurf/zeta.hpp"

namespace diagsurf::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kSizeExceeded = 3;

struct RunConfig {
  unsigned p = 0, r = 1, k = 1, d = 0, s = 0, h = 1, m = 1, terms = 4;
  unsigned s_max = 6;
  std::string format = "json";
  std::string out;
  std::string method = "direct";
  std::string point_set = "hermitian";
  std::string export_path;
  std::string matrix_path;
  std::string log_path;
  std::string export_dir;
  bool verify = false;
  bool ratio = false;
  bool two_weight = false;
  bool tss = false;
  Limits limits;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::BadParams, "cannot open output file " + cfg.out);
    f << text;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::BadParams, "cannot open " + path);
  f << text;
}

int cmd_count(const RunConfig& cfg) {
  const DiagonalParams params{cfg.p, cfg.r, cfg.k, cfg.d};
  const CountTriple c = wolfmann_counts(params, cfg.s);
  Json j = to_json(c);
  j["projective_dim" + std::to_string(cfg.s - 1)] = to_decimal(projective_count(params, cfg.s - 1));
  emit(cfg, j.dump() + "\n");
  return kOk;
}

int cmd_profile(const RunConfig& cfg) {
  const Field field = build_field(cfg.p, cfg.m, cfg.limits);
  const ValueProfile prof = value_profile(field, cfg.d, cfg.s, cfg.limits);
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "# Q=" << prof.Q << ",d=" << prof.d << ",s=" << prof.s << "\nelement,count\n";
    for (std::size_t a = 0; a < prof.counts.size(); ++a) os << a << "," << to_decimal(prof.counts[a]) << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, to_json(prof).dump() + "\n");
  }
  return kOk;
}

int cmd_lemmas(const RunConfig& cfg) {
  const DiagonalParams params{cfg.p, cfg.r, cfg.k, cfg.d};
  params.validate();
  Json out = Json::array();
  bool all = true;
  for (unsigned s = 2; s <= cfg.s_max; ++s) {
    Json row{{"s", s}};
    const auto l22 = verify_lemma_22(params, s);
    const auto l23 = verify_lemma_23(params, s);
    row["n0_recursion"] = to_json(l22);
    row["total_count"] = to_json(l23);
    all = all && l22.holds && l23.holds;
    Json splits = Json::array();
    for (unsigned i = 1; i < s; ++i) {
      const auto l24 = verify_lemma_24(params, s, i);
      all = all && l24.holds;
      Json entry = to_json(l24);
      entry["i"] = i;
      splits.push_back(entry);
    }
    row["splits"] = splits;
    out.push_back(row);
  }
  emit(cfg, Json{{"params", {{"p", cfg.p}, {"r", cfg.r}, {"k", cfg.k}, {"d", cfg.d}}}, {"results", out}, {"pass", all}}
                .dump() +
                "\n");
  return all ? kOk : kVerifyFailed;
}

int cmd_zeta(const RunConfig& cfg) {
  const FactoredRational z = diagonal_zeta(cfg.p, cfg.r, cfg.d, cfg.s);
  Json j = to_json(z);
  Json series = Json::array();
  for (const auto& v : series_counts(z, cfg.terms)) series.push_back(to_decimal(v));
  j["series"] = series;
  int code = kOk;
  if (cfg.ratio) {
    const RatioReport rep = ratio_f_check(cfg.p, cfg.r, cfg.d, cfg.s, cfg.terms);
    j["ratio"] = to_json(rep);
    if (!rep.equal) code = kVerifyFailed;
  }
  emit(cfg, j.dump() + "\n");
  return code;
}

int cmd_tower(const RunConfig& cfg) {
  Json counts = Json::array();
  for (unsigned k = 1; k <= cfg.terms; ++k) counts.push_back(to_decimal(tower_counts(cfg.p, cfg.r, cfg.s, k)));
  Json j{{"counts", counts}, {"report", to_json(tower_zeta_report(cfg.p, cfg.r, cfg.s, cfg.terms))}};
  emit(cfg, j.dump() + "\n");
  return kOk;
}

int cmd_hermitian(const RunConfig& cfg) {
  const Field field = build_field(cfg.p, 2 * cfg.r, cfg.limits);
  PointMatrix points;
  if (cfg.method == "recursive") {
    points = build_recursive(field, cfg.s, cfg.limits).sets.back();
  } else {
    points = build_direct(field, cfg.s, cfg.limits);
  }
  if (!cfg.export_path.empty()) write_file(cfg.export_path, point_matrix_csv(field, points));
  int code = kOk;
  if (cfg.format == "csv" && cfg.export_path.empty()) {
    emit(cfg, point_matrix_csv(field, points));
  } else {
    Json j{{"p", cfg.p}, {"r", cfg.r}, {"s", cfg.s}, {"method", cfg.method}, {"points", points.size()}};
    if (cfg.verify) {
      const RecursionReport rep = verify_recursion(field, cfg.s, cfg.limits);
      j["verify"] = to_json(rep);
      if (!rep.pass()) code = kVerifyFailed;
    }
    emit(cfg, j.dump() + "\n");
  }
  return code;
}

int cmd_code(const RunConfig& cfg) {
  const Field field = build_field(cfg.p, 2 * cfg.r, cfg.limits);
  const PointMatrix points =
      cfg.point_set == "projective" ? all_points(field, cfg.s, cfg.limits) : build_direct(field, cfg.s, cfg.limits);
  const GeneratorMatrix g = evaluation_matrix(field, points, cfg.h);
  if (!cfg.matrix_path.empty()) write_file(cfg.matrix_path, generator_matrix_csv(field, g));
  const WeightDistribution wd = weight_distribution(field, g, cfg.limits);
  if (cfg.format == "csv") {
    emit(cfg, spectrum_csv(wd));
    return kOk;
  }
  Json j = to_json(wd);
  if (cfg.two_weight) j["two_weight"] = to_json(two_weight_check(cfg.p, cfg.r, cfg.s, cfg.limits));
  if (cfg.tss) j["tss"] = to_json(min_weight_vs_tss(cfg.p, cfg.r, cfg.s, cfg.h, cfg.limits));
  emit(cfg, j.dump() + "\n");
  return kOk;
}

int cmd_verify_all(const RunConfig& cfg) {
  const AcceptanceRun run = run_acceptance(cfg.limits);
  const std::string log = run.log();
  std::cout << log;
  if (!cfg.log_path.empty()) {
    const auto parent = std::filesystem::path(cfg.log_path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    write_file(cfg.log_path, log);
  }
  if (!cfg.export_dir.empty()) write_exports(run, cfg.export_dir);
  return run.pass() ? kOk : kVerifyFailed;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeExceeded: return kSizeExceeded;
    case ErrorKind::Internal: return kVerifyFailed;
    default: return kUsage;
  }
}

}  // namespace

int run(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("DIAGSURF_MAX_FIELD")) {
    try {
      cfg.limits.max_field = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: DIAGSURF_MAX_FIELD must be a positive integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Point counts, zeta functions, Hermitian point sets and evaluation codes over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-field", cfg.limits.max_field, "Largest field size to construct");
  app.add_option("--max-codewords", cfg.limits.max_codewords, "Largest q^rank to enumerate");
  app.add_option("--max-scan", cfg.limits.max_scan, "Largest projective space to scan");

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write output to this file instead of standard output");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* count = app.add_subcommand("count", "Closed-form affine class counts and the projective count");
  count->add_option("--p", cfg.p, "prime")->required();
  count->add_option("--r", cfg.r, "q = p^{2r}")->required();
  count->add_option("--k", cfg.k, "extension index");
  count->add_option("--d", cfg.d, "degree, d | p^r + 1")->required();
  count->add_option("--s", cfg.s, "number of variables (>= 2)")->required();
  add_out(count);

  auto* profile = app.add_subcommand("profile", "Convolution oracle: solution counts for every right-hand side");
  profile->add_option("--p", cfg.p, "prime")->required();
  profile->add_option("--m", cfg.m, "extension degree of F_{p^m}")->required();
  profile->add_option("--d", cfg.d, "degree, d | p^m - 1")->required();
  profile->add_option("--s", cfg.s, "number of variables")->required();
  add_out(profile);

  auto* lemmas = app.add_subcommand("lemmas", "Check the counting identities for s = 2..s-max");
  lemmas->add_option("--p", cfg.p, "prime")->required();
  lemmas->add_option("--r", cfg.r, "q = p^{2r}")->required();
  lemmas->add_option("--k", cfg.k, "extension index");
  lemmas->add_option("--d", cfg.d, "degree")->required();
  lemmas->add_option("--s-max", cfg.s_max, "largest number of variables");
  add_out(lemmas);

  auto* zeta = app.add_subcommand("zeta", "Factored zeta function and its point counts");
  zeta->add_option("--p", cfg.p, "prime")->required();
  zeta->add_option("--r", cfg.r, "q = p^{2r}")->required();
  zeta->add_option("--d", cfg.d, "degree")->required();
  zeta->add_option("--s", cfg.s, "projective dimension")->required();
  zeta->add_option("--terms", cfg.terms, "number of series terms");
  zeta->add_flag("--ratio", cfg.ratio, "also check Z_s / Z_{s-1}");
  add_out(zeta);

  auto* tower = app.add_subcommand("tower", "Counts of the growing-degree Hermitian equation");
  tower->add_option("--p", cfg.p, "prime")->required();
  tower->add_option("--r", cfg.r, "q = p^{2r}")->required();
  tower->add_option("--s", cfg.s, "projective dimension")->required();
  tower->add_option("--terms", cfg.terms, "largest k");
  add_out(tower);

  auto* herm = app.add_subcommand("hermitian", "Build, verify and export Hermitian point sets");
  herm->add_option("--p", cfg.p, "prime")->required();
  herm->add_option("--r", cfg.r, "q = p^{2r}")->required();
  herm->add_option("--s", cfg.s, "projective dimension")->required();
  herm->add_option("--method", cfg.method, "construction")->check(CLI::IsMember({"direct", "recursive"}));
  herm->add_option("--export", cfg.export_path, "write the point matrix as CSV");
  herm->add_flag("--verify", cfg.verify, "compare recursive and direct constructions");
  add_out(herm);

  auto* code = app.add_subcommand("code", "Evaluation code spectrum on Hermitian or projective points");
  code->set_help_flag("--help", "Print this help message and exit");
  code->add_option("--p", cfg.p, "prime")->required();
  code->add_option("--r", cfg.r, "q = p^{2r}")->required();
  code->add_option("--s", cfg.s, "projective dimension")->required();
  code->add_option("--h", cfg.h, "monomial degree");
  code->add_option("--set", cfg.point_set, "point set")->check(CLI::IsMember({"hermitian", "projective"}));
  code->add_option("--export-matrix", cfg.matrix_path, "write the generator matrix as CSV");
  code->add_flag("--two-weight", cfg.two_weight, "compare the h=1 Hermitian spectrum with the two-weight formula");
  code->add_flag("--tss", cfg.tss, "compare the projective code's minimum weight with the TSS bound");
  add_out(code);

  auto* verify = app.add_subcommand("verify-all", "Run every acceptance check");
  verify->add_option("--log", cfg.log_path, "also write the log here");
  verify->add_option("--export-dir", cfg.export_dir, "write exported artifacts here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*count) {
      if (cfg.s < 2) throw Error(ErrorKind::BadParams, "count needs --s >= 2");
      return cmd_count(cfg);
    }
    if (*profile) return cmd_profile(cfg);
    if (*lemmas) return cmd_lemmas(cfg);
    if (*zeta) return cmd_zeta(cfg);
    if (*tower) return cmd_tower(cfg);
    if (*herm) return cmd_hermitian(cfg);
    if (*code) return cmd_code(cfg);
    if (*verify) return cmd_verify_all(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace diagsurf::cli
