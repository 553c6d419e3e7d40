/*
 * Copyright 2026 The pfrlab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.h"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json_report.h"
#include "pfrlab/pfrlab.h"

namespace pfrlab::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Paths a command read and wrote, plus the resolved configuration; these go
// into the run manifest.
struct Context {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  Json config = Json::object();
};

struct SeedRange {
  uint64_t first = 1;
  uint64_t last = 1;
};

uint64_t DefaultSeed() {
  const char* env = std::getenv("PFRLAB_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParameterRange,
                std::string("PFRLAB_SEED is not an integer: ") + env);
  }
}

// "a..b" or a single seed.
SeedRange ParseSeeds(const std::string& text) {
  SeedRange r;
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      r.first = r.last = std::stoull(text);
    } else {
      r.first = std::stoull(text.substr(0, dots));
      r.last = std::stoull(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParameterRange,
                "--seeds expects a..b or a single integer, got '" + text + "'");
  }
  if (r.last < r.first) {
    throw Error(ErrorCode::kParameterRange, "--seeds range is empty: " + text);
  }
  return r;
}

QuadBackend ParseBackend(const std::string& name) {
  if (name == "auto") return QuadBackend::kAuto;
  if (name == "exhaustive") return QuadBackend::kExhaustive;
  if (name == "bilinear") return QuadBackend::kBilinear;
  throw Error(ErrorCode::kParameterRange, "unknown backend '" + name + "'");
}

const char* BackendName(QuadBackend b) {
  switch (b) {
    case QuadBackend::kAuto:
      return "auto";
    case QuadBackend::kExhaustive:
      return "exhaustive";
    case QuadBackend::kBilinear:
      return "bilinear";
  }
  return "auto";
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 == 1 ? v[k] : (v[k - 1] + v[k]) / 2;
}

Json MedianOrNull(const std::vector<double>& v) {
  return v.empty() ? Json(nullptr) : Json(Median(v));
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

std::string ReadText(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Json ReadJsonFile(const std::string& path) {
  try {
    return Json::parse(ReadText(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

// ---- gen ------------------------------------------------------------------

struct GenOptions {
  std::string kind;
  std::size_t n = 16;
  std::size_t dim = 8;
  std::size_t cosets = 4;
  double noise = 0.0;
  std::size_t m = 8;
  double rho = 1.0;
  std::size_t imgk = 2;
  uint64_t seed = 1;
  std::string out;
};

int CmdGen(const GenOptions& o, Context& ctx, std::ostream& out) {
  Rng rng(o.seed);
  Json sidecar;
  if (o.kind == "cover") {
    const PlantedInstance inst =
        GenPlantedCover(o.n, o.dim, o.cosets, o.noise, rng);
    WriteSetFile(o.out, inst.set);
    sidecar = CoverSidecar(inst, o.seed);
    ctx.config = {{"kind", o.kind}, {"n", o.n},         {"dim", o.dim},
                  {"cosets", o.cosets}, {"noise", o.noise}, {"seed", o.seed}};
  } else if (o.kind == "affine") {
    const AffineInstance inst = GenPlantedAffine(o.m, o.n, o.rho, rng);
    WriteTableFile(o.out, inst.f);
    sidecar = AffineSidecar(inst, o.seed);
    ctx.config = {{"kind", o.kind}, {"m", o.m}, {"n", o.n},
                  {"rho", o.rho},   {"seed", o.seed}};
  } else {
    const SmallImageInstance inst = GenSmallImage(o.m, o.n, o.imgk, rng);
    WriteTableFile(o.out, inst.f);
    sidecar = SmallImageSidecar(inst, o.seed);
    ctx.config = {{"kind", o.kind}, {"m", o.m}, {"n", o.n},
                  {"imgk", o.imgk}, {"seed", o.seed}};
  }
  const std::string sidecar_path = o.out + ".json";
  WriteText(sidecar_path, sidecar.dump(2) + "\n");
  ctx.outputs = {o.out, sidecar_path};
  out << Json{{"kind", o.kind}, {"out", o.out}, {"sidecar", sidecar_path}}
             .dump()
      << "\n";
  return kExitOk;
}

// ---- pfr ------------------------------------------------------------------

struct PfrOptions {
  std::string set_path;
  std::optional<uint64_t> k;
  std::size_t m_slack = 10;
  std::optional<std::size_t> m;
  std::optional<std::size_t> t;
  std::optional<std::string> seeds;
  uint64_t seed = 1;
  std::size_t workers = 1;
  std::string backend = "auto";
  std::optional<std::string> out;
  bool timings = false;
  std::optional<std::size_t> max_cover;
  std::size_t restarts = 10;
  std::size_t kernel_cap = kDefaultKernelCap;
};

struct SeedOutcome {
  bool completed = false;
  Json line;
  PipelineReport report;
};

int CmdPfr(const PfrOptions& o, Context& ctx, std::ostream& out) {
  const PointSet a = ReadSetFile(o.set_path);
  ctx.inputs.push_back(o.set_path);
  if (a.empty()) throw Error(ErrorCode::kEmptyInput, "set file is empty");

  PipelineConfig base;
  base.k = o.k ? *o.k : DoublingConstant(a);
  base.m_slack = o.m_slack;
  base.m_override = o.m;
  base.t_override = o.t;
  base.restarts = o.restarts;
  base.kernel_cap = o.kernel_cap;
  base.max_cover = o.max_cover;
  base.timings = o.timings;
  base.fit.backend = ParseBackend(o.backend);
  const SeedRange range = o.seeds ? ParseSeeds(*o.seeds) : SeedRange{o.seed, o.seed};

  ctx.config = {{"K", base.k},
                {"m_slack", base.m_slack},
                {"m", o.m ? Json(*o.m) : Json(nullptr)},
                {"t", o.t ? Json(*o.t) : Json(nullptr)},
                {"backend", o.backend},
                {"restarts", base.restarts},
                {"kernel_cap", base.kernel_cap},
                {"max_cover", o.max_cover ? Json(*o.max_cover) : Json(nullptr)},
                {"timings", base.timings},
                {"seeds", {range.first, range.last}}};

  const std::size_t count = range.last - range.first + 1;
  std::vector<SeedOutcome> outcomes(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      PipelineConfig cfg = base;
      cfg.seed = range.first + i;
      SeedOutcome& slot = outcomes[i];
      try {
        slot.report = RunPipeline(a, cfg);
        slot.line = ReportJson(slot.report);
        slot.completed = true;
      } catch (const std::exception& e) {
        slot.line = {{"seed", cfg.seed}, {"success", false}, {"error", e.what()}};
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(o.workers, 1, count);
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ostringstream lines;
  std::size_t completed = 0, successes = 0;
  std::vector<double> covers, queries, samples;
  for (const SeedOutcome& s : outcomes) {
    lines << s.line.dump() << "\n";
    if (!s.completed) continue;
    ++completed;
    queries.push_back(static_cast<double>(s.report.membership_queries));
    samples.push_back(static_cast<double>(s.report.samples));
    if (s.report.success) {
      ++successes;
      covers.push_back(static_cast<double>(s.report.certificate.cover_size));
    }
  }
  Json summary;
  summary["summary"] = true;
  summary["seeds"] = count;
  summary["completed"] = completed;
  summary["successes"] = successes;
  summary["success_rate"] =
      static_cast<double>(successes) / static_cast<double>(count);
  summary["median_cover_size"] = MedianOrNull(covers);
  summary["median_membership_queries"] = MedianOrNull(queries);
  summary["median_samples"] = MedianOrNull(samples);
  lines << summary.dump() << "\n";

  if (o.out) {
    WriteText(*o.out, lines.str());
    ctx.outputs.push_back(*o.out);
    out << summary.dump() << "\n";
  } else {
    out << lines.str();
  }
  return completed == count ? kExitOk : kExitCheckFailed;
}

// ---- homtest / approxhom ----------------------------------------------------

struct FuncOptions {
  std::string table_path;
  uint64_t seed = 1;
  std::string backend = "auto";
  std::optional<std::string> out;
};

int Emit(const Json& j, const std::optional<std::string>& path, Context& ctx,
         std::ostream& out) {
  const std::string text = j.dump() + "\n";
  if (path) {
    WriteText(*path, text);
    ctx.outputs.push_back(*path);
  }
  out << text;
  return kExitOk;
}

int CmdHomtest(const FuncOptions& o, Context& ctx, std::ostream& out) {
  FuncTable f = ReadTableFile(o.table_path);
  ctx.inputs.push_back(o.table_path);
  ctx.config = {{"backend", o.backend}, {"seed", o.seed}};
  HomFitConfig cfg = DefaultFunctionFitConfig(f.codomain_dim());
  cfg.backend = ParseBackend(o.backend);
  Rng rng(o.seed);
  const HomFitResult r = HomTestFit(f, cfg, rng);

  Json j;
  j["m"] = f.domain_dim();
  j["n"] = f.codomain_dim();
  j["agreement"] =
      static_cast<double>(r.agreement) / static_cast<double>(f.size());
  j["agreement_count"] = r.agreement;
  if (f.domain_dim() <= kQuadrupleExactCap) {
    j["quadruple_agreement"] = QuadrupleAgreementExact(f).value();
  } else {
    Rng qrng(rng.Fork());
    j["quadruple_agreement"] = QuadrupleAgreementSampled(f, 0, qrng).value();
  }
  j["backend"] = BackendName(r.backend);
  j["M"] = MatrixRows(r.m);
  j["v"] = r.v.ToString();
  j["seed"] = o.seed;
  return Emit(j, o.out, ctx, out);
}

int CmdApproxhom(const FuncOptions& o, Context& ctx, std::ostream& out) {
  FuncTable f = ReadTableFile(o.table_path);
  ctx.inputs.push_back(o.table_path);
  ctx.config = {{"backend", o.backend}, {"seed", o.seed}};
  HomFitConfig cfg = DefaultFunctionFitConfig(f.codomain_dim());
  cfg.backend = ParseBackend(o.backend);
  Rng rng(o.seed);
  const ApproxHomResult r = ApproxHomDecompose(f, cfg, rng);

  Json j;
  j["m"] = f.domain_dim();
  j["n"] = f.codomain_dim();
  j["residual_image_size"] = r.residual_image_size;
  j["residual_image"] = BitStrings(r.residual_image);
  j["agreement_count"] = r.agreement;
  j["cover_size"] = r.cover_size;
  j["cover_verified"] = r.cover_verified;
  j["delta_size"] = r.delta_size ? Json(*r.delta_size) : Json(nullptr);
  j["image_bound"] = r.image_bound ? Json(*r.image_bound) : Json(nullptr);
  j["bound_holds"] = r.bound_holds;
  j["M"] = MatrixRows(r.m);
  j["v"] = r.v.ToString();
  j["seed"] = o.seed;
  return Emit(j, o.out, ctx, out);
}

// ---- verify ---------------------------------------------------------------

int CmdVerify(const std::string& set_path, const std::string& cert_path,
              Context& ctx, std::ostream& out) {
  const PointSet a = ReadSetFile(set_path);
  const Json cert = ReadJsonFile(cert_path);
  ctx.inputs = {set_path, cert_path};
  const Subspace v = BasisFromJson(cert, a.ambient());
  const CoverCertificate c = VerifyCover(a, v, RepsFromJson(cert, a.ambient()));
  const bool small = v.dim() < 64 && (uint64_t{1} << v.dim()) <= a.size();
  Json j;
  j["covered"] = c.covered;
  j["subspace_fits"] = small;
  j["dimV"] = v.dim();
  j["cover_size"] = c.cover_size;
  j["set_size"] = a.size();
  out << j.dump() << "\n";
  return c.covered && small ? kExitOk : kExitCheckFailed;
}

// ---- bench-queries ----------------------------------------------------------

struct BenchOptions {
  std::string family = "subspace";
  std::size_t n = 16;
  std::size_t min_log = 6;
  std::size_t max_log = 12;
  std::optional<uint64_t> k;
  std::optional<std::string> seeds;
  uint64_t seed = 1;
  std::optional<std::string> out;
};

int CmdBenchQueries(const BenchOptions& o, Context& ctx, std::ostream& out) {
  if (o.family != "subspace" && o.family != "cover") {
    throw Error(ErrorCode::kParameterRange,
                "--family must be subspace or cover, got '" + o.family + "'");
  }
  if (o.min_log > o.max_log || o.max_log > o.n) {
    throw Error(ErrorCode::kParameterRange,
                "need min-log <= max-log <= n for the size sweep");
  }
  const SeedRange range =
      o.seeds ? ParseSeeds(*o.seeds) : SeedRange{o.seed, o.seed};
  ctx.config = {{"family", o.family},   {"n", o.n},
                {"min_log", o.min_log}, {"max_log", o.max_log},
                {"K", o.k ? Json(*o.k) : Json(nullptr)},
                {"seeds", {range.first, range.last}}};

  std::ostringstream csv;
  csv << "log_size,set_size,n,K,seed,t,samples,membership_queries,success\n";
  bool all_completed = true;
  for (std::size_t lg = o.min_log; lg <= o.max_log; ++lg) {
    for (uint64_t seed = range.first; seed <= range.last; ++seed) {
      // The instance depends on (size, seed) only, so two sweeps sharing a
      // size and seed see the same set.
      Rng gen(seed * 1000003ULL + lg);
      PointSet a(o.n);
      if (o.family == "subspace") {
        const Subspace v = RandomSubspace(o.n, lg, gen);
        a = PointSet::FromVectors(o.n, v.Enumerate(v.dim()));
      } else {
        if (lg < 2) {
          throw Error(ErrorCode::kParameterRange,
                      "cover family needs log size >= 2");
        }
        a = GenPlantedCover(o.n, lg - 2, 4, 0.0, gen).set;
      }
      PipelineConfig cfg;
      cfg.k = o.k ? *o.k : DoublingConstant(a);
      cfg.seed = seed;
      csv << lg << "," << a.size() << "," << o.n << "," << cfg.k << ","
          << seed << ",";
      try {
        const PipelineReport r = RunPipeline(a, cfg);
        csv << r.t << "," << r.samples << "," << r.membership_queries << ","
            << (r.success ? 1 : 0) << "\n";
      } catch (const std::exception&) {
        all_completed = false;
        csv << DefaultSampleCount(a.size(), cfg.k) << ",,,0\n";
      }
    }
  }
  if (o.out) {
    WriteText(*o.out, csv.str());
    ctx.outputs.push_back(*o.out);
  } else {
    out << csv.str();
  }
  return all_completed ? kExitOk : kExitCheckFailed;
}

// ---- manifest / replay ------------------------------------------------------

Json HashList(const std::vector<std::string>& paths) {
  Json list = Json::array();
  for (const auto& p : paths) {
    list.push_back({{"path", p}, {"sha256", Sha256File(p)}});
  }
  return list;
}

void WriteManifest(const std::string& path, const std::string& command,
                   const std::vector<std::string>& args, const Context& ctx,
                   const std::string& stdout_text, int exit_code) {
  Json m;
  m["command"] = command;
  m["argv"] = args;
  m["config"] = ctx.config;
  m["inputs"] = HashList(ctx.inputs);
  m["outputs"] = HashList(ctx.outputs);
  m["stdout_sha256"] = Sha256Hex(stdout_text);
  m["exit_code"] = exit_code;
  WriteText(path, m.dump(2) + "\n");
}

int CmdReplay(const std::string& manifest_path, std::ostream& out,
              std::ostream& err) {
  const Json m = ReadJsonFile(manifest_path);
  if (!m.contains("argv") || !m["argv"].is_array()) {
    throw Error(ErrorCode::kParse, manifest_path + ": manifest lacks argv");
  }
  const auto args = m["argv"].get<std::vector<std::string>>();
  if (!args.empty() && args.front() == "replay") {
    throw Error(ErrorCode::kParameterRange, "a manifest cannot replay a replay");
  }

  Json report;
  bool identical = true;
  Json inputs = Json::array();
  for (const auto& in : m.value("inputs", Json::array())) {
    const std::string p = in.at("path").get<std::string>();
    const bool same = Sha256File(p) == in.at("sha256").get<std::string>();
    identical = identical && same;
    inputs.push_back({{"path", p}, {"match", same}});
  }

  std::ostringstream captured, captured_err;
  const int code = Run(args, captured, captured_err);
  err << captured_err.str();
  const bool stdout_same =
      Sha256Hex(captured.str()) == m.value("stdout_sha256", std::string());
  const bool code_same = code == m.value("exit_code", 0);
  identical = identical && stdout_same && code_same;

  Json outputs = Json::array();
  for (const auto& o : m.value("outputs", Json::array())) {
    const std::string p = o.at("path").get<std::string>();
    const bool same = Sha256File(p) == o.at("sha256").get<std::string>();
    identical = identical && same;
    outputs.push_back({{"path", p}, {"match", same}});
  }
  report["identical"] = identical;
  report["stdout_match"] = stdout_same;
  report["exit_code_match"] = code_same;
  report["inputs"] = inputs;
  report["outputs"] = outputs;
  out << report.dump() << "\n";
  return identical ? kExitOk : kExitCheckFailed;
}

// Removes "--manifest PATH" / "--manifest=PATH" from args.
std::optional<std::string> TakeManifestFlag(std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--manifest" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i + 2));
    } else if (args[i].rfind("--manifest=", 0) == 0) {
      path = args[i].substr(11);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return path;
}

}  // namespace

std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorCode::kIo, "SHA-256 digest failed");
  }
  std::ostringstream hex;
  hex << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) hex << std::setw(2) << int{digest[i]};
  return hex.str();
}

std::string Sha256File(const std::string& path) {
  return Sha256Hex(ReadText(path));
}

int Run(const std::vector<std::string>& raw_args, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> args = raw_args;
  std::optional<std::string> manifest;
  try {
    manifest = TakeManifestFlag(args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Structure learning for sets of small doubling in F_2^n",
               "pfrlab"};
  app.require_subcommand(1);
  uint64_t seed_default = 1;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a planted instance");
  gen_cmd->add_option("kind", gen.kind, "cover, affine or smallimage")
      ->required()
      ->check(CLI::IsMember({"cover", "affine", "smallimage"}));
  gen_cmd->add_option("--n", gen.n, "Ambient / codomain dimension");
  gen_cmd->add_option("--dim", gen.dim, "Hidden subspace dimension (cover)");
  gen_cmd->add_option("--cosets", gen.cosets, "Number of cosets (cover)");
  gen_cmd->add_option("--noise", gen.noise, "Fraction of points replaced");
  gen_cmd->add_option("--m", gen.m, "Domain dimension (affine, smallimage)");
  gen_cmd->add_option("--rho", gen.rho, "Planted agreement (affine)");
  gen_cmd->add_option("--imgk", gen.imgk, "Residual image bound (smallimage)");
  auto* gen_seed = gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out, "Output path; sidecar is <out>.json")
      ->required();

  PfrOptions pfr;
  auto* pfr_cmd = app.add_subcommand("pfr", "Run the structure pipeline");
  pfr_cmd->add_option("set", pfr.set_path)->required();
  pfr_cmd->add_option("--K", pfr.k, "Doubling bound (default: exact)");
  pfr_cmd->add_option("--m-slack", pfr.m_slack);
  pfr_cmd->add_option("--m", pfr.m, "Dense model dimension override");
  pfr_cmd->add_option("--t", pfr.t, "Localization sample override");
  pfr_cmd->add_option("--seeds", pfr.seeds, "Seed range a..b");
  auto* pfr_seed = pfr_cmd->add_option("--seed", pfr.seed);
  pfr_cmd->add_option("--workers", pfr.workers);
  pfr_cmd->add_option("--backend", pfr.backend)
      ->check(CLI::IsMember({"auto", "exhaustive", "bilinear"}));
  pfr_cmd->add_option("--out", pfr.out, "Write report lines here");
  pfr_cmd->add_flag("--timings", pfr.timings, "Record per-stage wall time");
  pfr_cmd->add_option("--max-cover", pfr.max_cover);
  pfr_cmd->add_option("--restarts", pfr.restarts);
  pfr_cmd->add_option("--kernel-cap", pfr.kernel_cap);

  FuncOptions hom;
  auto* hom_cmd = app.add_subcommand("homtest", "Fit an affine map to a table");
  FuncOptions approx;
  auto* approx_cmd = app.add_subcommand(
      "approxhom", "Affine map plus small residual image for a table");
  CLI::Option* hom_seed = nullptr;
  CLI::Option* approx_seed = nullptr;
  for (auto [cmd, opts, seed_opt] :
       {std::tuple{hom_cmd, &hom, &hom_seed},
        std::tuple{approx_cmd, &approx, &approx_seed}}) {
    cmd->add_option("table", opts->table_path)->required();
    *seed_opt = cmd->add_option("--seed", opts->seed);
    cmd->add_option("--backend", opts->backend)
        ->check(CLI::IsMember({"auto", "exhaustive", "bilinear"}));
    cmd->add_option("--out", opts->out);
  }

  std::string verify_set, verify_cert;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a cover certificate against a set");
  verify_cmd->add_option("set", verify_set)->required();
  verify_cmd->add_option("certificate", verify_cert)->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand(
      "bench-queries", "Query counts over a sweep of set sizes (CSV)");
  bench_cmd->add_option("--family", bench.family)
      ->check(CLI::IsMember({"subspace", "cover"}));
  bench_cmd->add_option("--n", bench.n);
  bench_cmd->add_option("--min-log", bench.min_log);
  bench_cmd->add_option("--max-log", bench.max_log);
  bench_cmd->add_option("--K", bench.k);
  bench_cmd->add_option("--seeds", bench.seeds);
  auto* bench_seed = bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--out", bench.out);

  std::string replay_path;
  auto* replay_cmd =
      app.add_subcommand("replay", "Re-run a manifest and compare hashes");
  replay_cmd->add_option("manifest", replay_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream captured;
  std::ostream& sink = manifest ? static_cast<std::ostream&>(captured) : out;
  Context ctx;
  int code = kExitOk;
  try {
    seed_default = DefaultSeed();
    auto seeded = [&](CLI::Option* opt, uint64_t& value) {
      if (opt->count() == 0) value = seed_default;
    };
    if (*gen_cmd) {
      seeded(gen_seed, gen.seed);
      code = CmdGen(gen, ctx, sink);
    } else if (*pfr_cmd) {
      seeded(pfr_seed, pfr.seed);
      code = CmdPfr(pfr, ctx, sink);
    } else if (*hom_cmd) {
      seeded(hom_seed, hom.seed);
      code = CmdHomtest(hom, ctx, sink);
    } else if (*approx_cmd) {
      seeded(approx_seed, approx.seed);
      code = CmdApproxhom(approx, ctx, sink);
    } else if (*verify_cmd) {
      code = CmdVerify(verify_set, verify_cert, ctx, sink);
    } else if (*bench_cmd) {
      seeded(bench_seed, bench.seed);
      code = CmdBenchQueries(bench, ctx, sink);
    } else if (*replay_cmd) {
      return CmdReplay(replay_path, out, err);
    }
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (manifest) {
    out << captured.str();
    try {
      WriteManifest(*manifest, app.get_subcommands().front()->get_name(), args,
                    ctx, captured.str(), code);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace pfrlab::cli
