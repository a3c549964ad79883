// Copyright 2026 The tercodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tercodes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include "CLI11.hpp"
#include "tercodes/charsums.hpp"
#include "tercodes/fixtures.hpp"
#include "tercodes/function_spec.hpp"
#include "tercodes/report.hpp"

namespace tercodes {

namespace {

struct Common {
  unsigned jobs = 1;
  std::uint64_t seed = 20240611;
  std::string format = "json";
  std::string output;
};

struct Emitted {
  Json report;
  int status = kExitOk;
};

Emitted cmd_analyze(const std::string& spec) {
  const TernaryFunction f = parse_function_spec(spec);
  const SpectrumProfile p = analyze(f);
  Json j = profile_json(p, format_function_spec(f));
  return {j, spectral_identities_hold(p) ? kExitOk : kExitMismatch};
}

Emitted cmd_lemma(int lemma, const std::string& context, std::size_t sample, const Common& c) {
  Json ctx;
  try {
    ctx = Json::parse(context);
  } catch (const Json::parse_error&) {
    std::ifstream in(context);
    if (!in) throw std::invalid_argument("--context is neither JSON nor a readable file");
    ctx = Json::parse(in);
  }
  if (!ctx.is_object() || !ctx.contains("g")) throw std::invalid_argument("context needs at least a \"g\" spec");
  std::optional<SpectrumProfile> fp;
  std::string f_spec;
  if (ctx.contains("f")) {
    f_spec = ctx.at("f").get<std::string>();
    fp = analyze(parse_function_spec(f_spec));
  }
  const std::string g_spec = ctx.at("g").get<std::string>();
  const SpectrumProfile gp = analyze(parse_function_spec(g_spec));
  const int n = ctx.value("n", 1);
  if (n < 1 || n > 12) throw std::invalid_argument("context n must be between 1 and 12");
  LemmaSweep sweep = sweep_lemma(lemma, fp ? &*fp : nullptr, gp, n, c.jobs);
  Json j;
  j["context"] = ctx;
  if (sample > 0 && sample < sweep.rows.size()) {
    std::vector<LemmaRow> picked;
    std::mt19937_64 rng(c.seed);
    std::sample(sweep.rows.begin(), sweep.rows.end(), std::back_inserter(picked), sample, rng);
    Json full = lemma_json(sweep);
    sweep.rows = std::move(picked);
    Json part = lemma_json(sweep);
    part["rows_total"] = full["rows_total"];
    part["rows_shown"] = sample;
    part["seed"] = c.seed;
    j["sweep"] = part;
  } else {
    j["sweep"] = lemma_json(sweep);
  }
  return {j, sweep.mismatches == 0 ? kExitOk : kExitMismatch};
}

TableReading parse_reading(const std::string& r) {
  return r == "corrected" ? TableReading::kCorrected : TableReading::kAsPrinted;
}

Emitted cmd_construct(const ConstructionInput& in, bool lcd, bool unchecked, const std::string& matrix_path,
                      const std::string& reading, const Common& c) {
  const BuiltConstruction b = build_construction(in, !unchecked);
  VerifyOptions opts;
  opts.lcd = lcd;
  opts.jobs = c.jobs;
  opts.reading = parse_reading(reading);
  const VerificationReport r =
      verify_construction(b.defining_set, b.f_profile ? &*b.f_profile : nullptr, b.g_profile, opts);
  if (!matrix_path.empty()) {
    std::ofstream mf(matrix_path);
    if (!mf) throw std::invalid_argument("cannot write matrix file " + matrix_path);
    write_matrix(mf, lcd ? lcd_generator(b.defining_set) : augmented_generator(b.defining_set));
  }
  Json j;
  j["inputs"] = {{"kind", to_string(in.kind)},
                 {"f", in.f_spec},
                 {"g", in.g_spec},
                 {"x_degree", in.x_degree},
                 {"lambda", static_cast<int>(in.lambda)},
                 {"reading", reading}};
  j["report"] = verification_json(r);
  return {j, r.ok() ? kExitOk : kExitMismatch};
}

Emitted cmd_reproduce(int example, bool all, const std::string& reading, const Common& c) {
  const TableReading rd = parse_reading(reading);
  if (!all) {
    const ExampleFixture& ex = reference_example(example);
    const ExampleResult r = run_example(ex, c.jobs, rd);
    return {example_json(r), r.ok() ? kExitOk : kExitMismatch};
  }
  Json j;
  Json list = Json::array();
  bool ok = true;
  for (const auto& ex : reference_examples()) {
    const ExampleResult r = run_example(ex, c.jobs, rd);
    ok = ok && r.ok();
    list.push_back(example_json(r));
  }
  j["examples"] = list;
  j["ok"] = ok;
  return {j, ok ? kExitOk : kExitMismatch};
}

Emitted cmd_bound(std::size_t n, std::size_t k, std::optional<std::size_t> d) {
  if (n == 0 || k > n) throw std::invalid_argument("need 1 <= n and k <= n");
  Json j;
  j["n"] = n;
  j["k"] = k;
  j["sphere_packing_max_d"] = sphere_packing_max_d(n, k);
  if (d) {
    if (*d == 0 || *d > n) throw std::invalid_argument("d must lie in 1..n");
    j["d"] = *d;
    j["class"] = to_string(classify_against_bound(n, k, *d));
  }
  return {j, kExitOk};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ternary self-orthogonal and LCD codes from weakly regular plateaued functions", "tercodes"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--jobs", common.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", common.seed, "seed for sampled output");
  app.add_option("--format", common.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", common.output, "write the report to this file");

  std::string f_spec;
  std::string g_spec;
  auto* analyze_cmd = app.add_subcommand("analyze", "Walsh spectrum summary of a function");
  analyze_cmd->add_option("--f", f_spec, "function spec, e.g. \"Tr(g^1*x^2) @ GF(3^4)\"")->required();

  int lemma = 0;
  std::string context;
  std::size_t sample = 0;
  auto* lemma_cmd = app.add_subcommand("lemma-check", "compare closed forms with brute-force oracles");
  lemma_cmd->add_option("--lemma", lemma, "lemma number")->required()->check(CLI::Range(2, 10));
  lemma_cmd->add_option("--context", context, "JSON {\"f\": spec, \"g\": spec, \"n\": degree} or a file")->required();
  lemma_cmd->add_option("--sample", sample, "show this many seeded random rows");

  ConstructionInput in;
  std::string kind = "fg";
  int lambda = 1;
  bool lcd = false;
  bool unchecked = false;
  std::string matrix_path;
  std::string reading = "printed";
  auto* construct_cmd = app.add_subcommand("construct", "build and verify a defining-set code");
  construct_cmd->add_option("--kind", kind, "fg or traceg")->check(CLI::IsMember({"fg", "traceg"}));
  construct_cmd->add_option("--f", in.f_spec, "f spec (fg)");
  construct_cmd->add_option("--g", in.g_spec, "g spec")->required();
  construct_cmd->add_option("--n", in.x_degree, "degree of the x field (traceg)")->check(CLI::Range(1, 12));
  construct_cmd->add_option("--lambda", lambda, "1 or 2")->check(CLI::IsMember({1, 2}));
  construct_cmd->add_flag("--lcd", lcd, "also verify the (I | G) lift");
  construct_cmd->add_flag("--unchecked", unchecked, "skip admission checks");
  construct_cmd->add_option("--matrix", matrix_path, "write the generator matrix here");
  construct_cmd->add_option("--reading", reading, "even-case table reading")
      ->check(CLI::IsMember({"printed", "corrected"}));

  int example = 0;
  bool all = false;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "run a built-in reference example");
  auto* ex_opt = reproduce_cmd->add_option("--example", example, "example id");
  auto* all_opt = reproduce_cmd->add_flag("--all", all, "run every example");
  ex_opt->excludes(all_opt);
  reproduce_cmd->add_option("--reading", reading, "even-case table reading")
      ->check(CLI::IsMember({"printed", "corrected"}));

  std::size_t bn = 0;
  std::size_t bk = 0;
  std::optional<std::size_t> bd;
  auto* bound_cmd = app.add_subcommand("bound", "sphere-packing bound and classification");
  bound_cmd->add_option("--n", bn, "length")->required();
  bound_cmd->add_option("--k", bk, "dimension")->required();
  bound_cmd->add_option("--d", bd, "minimum distance to classify");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  Emitted result;
  try {
    if (*analyze_cmd) {
      result = cmd_analyze(f_spec);
    } else if (*lemma_cmd) {
      result = cmd_lemma(lemma, context, sample, common);
    } else if (*construct_cmd) {
      in.kind = kind == "fg" ? ConstructionKind::kFG : ConstructionKind::kTraceG;
      in.lambda = static_cast<Trit>(lambda);
      if (in.kind == ConstructionKind::kFG && in.f_spec.empty()) throw std::invalid_argument("--f is required for fg");
      result = cmd_construct(in, lcd, unchecked, matrix_path, reading, common);
    } else if (*reproduce_cmd) {
      if (!all && ex_opt->count() == 0) throw std::invalid_argument("give --example N or --all");
      result = cmd_reproduce(example, all, reading, common);
    } else if (*bound_cmd) {
      result = cmd_bound(bn, bk, bd);
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  const std::string text = common.format == "json" ? result.report.dump(2) + "\n" : render_text(result.report);
  if (common.output.empty()) {
    out << text;
  } else {
    std::ofstream f(common.output);
    if (!f) {
      err << "error: cannot write " << common.output << '\n';
      return kExitInputError;
    }
    f << text;
  }
  return result.status;
}

}  // namespace tercodes
