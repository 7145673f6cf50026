// toric_orlov: command-line front end for the toric library.
//
//   toric_orlov <command> <target> [options]
//
// target is a builtin catalog name or a fan file.  Exit codes: 0 success,
// 1 hypothesis failed, 2 invalid input.

#include "toric/catalog.hpp"
#include "toric/cohomology.hpp"
#include "toric/cones.hpp"
#include "toric/frobenius.hpp"
#include "toric/report.hpp"
#include "toric/tilting.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace toric;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

struct RunConfig {
  std::string command;
  std::string target;
  std::optional<unsigned long> ell;
  std::optional<std::string> divisor;
  std::string format = "json";
  int threads = 0;
  bool verbose = false;
  std::string manifest;
};

/// Thrown for malformed command input that CLI11 cannot catch itself.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Output {
  Json json;
  Table table;
  int code = kOk;
};

std::string render(const Output& out, const std::string& format) {
  if (format == "json") return out.json.dump(2) + "\n";
  if (format == "md") return to_markdown(out.table);
  return to_csv(out.table);
}

std::string join(std::span<const Integer> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

Fan load_fan(const std::string& target) {
  return resolve_target(target, std::filesystem::current_path()).fan;
}

TorusDivisor parse_divisor(const Variety& x, const std::string& text) {
  IntVec coeffs;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    Integer z;
    if (b == std::string::npos || z.set_str(tok.substr(b, e - b + 1), 10) != 0)
      throw UsageError("--divisor: '" + tok + "' is not an integer");
    coeffs.push_back(z);
  }
  if (coeffs.size() != x.num_rays())
    throw UsageError("--divisor: expected " + std::to_string(x.num_rays()) + " coefficients (one per ray), got " +
                     std::to_string(coeffs.size()));
  return {coeffs};
}

TorusDivisor divisor_or_zero(const Variety& x, const RunConfig& cfg) {
  return cfg.divisor ? parse_divisor(x, *cfg.divisor) : x.zero_divisor();
}

TorusDivisor required_divisor(const Variety& x, const RunConfig& cfg) {
  if (!cfg.divisor) throw UsageError(cfg.command + ": --divisor is required");
  return parse_divisor(x, *cfg.divisor);
}

// ---------------------------------------------------------------------------
// commands

Output describe(const RunConfig& cfg) {
  const Fan fan = load_fan(cfg.target);
  const ValidationReport rep = validate(fan);
  Output out;
  out.json["name"] = fan.name;
  out.json["dim"] = fan.dim;
  Json rays = Json::array();
  out.table.header = {"ray", "coordinates"};
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    rays.push_back({{"index", i}, {"ray", to_json(fan.rays[i])}});
    out.table.rows.push_back({"D" + std::to_string(i), join(fan.rays[i])});
  }
  out.json["rays"] = std::move(rays);
  out.json["max_cones"] = fan.max_cones;
  out.json["validation"] = to_json(rep);
  if (!rep.ok()) {
    out.code = kInvalid;
    return out;
  }
  const Variety x(fan);
  out.json["pic_rank"] = x.pic_rank();
  out.json["canonical_class"] = to_json(divisor_class(x, canonical_divisor(x)));
  out.json["nef_fano_status"] = to_string(nef_fano_status(x));
  return out;
}

Output frob(const RunConfig& cfg) {
  const Variety x(load_fan(cfg.target));
  const unsigned long ell = cfg.ell.value_or(2);
  const TorusDivisor d = divisor_or_zero(x, cfg);
  const auto counts = tally(pushforward_summands(x, d, ell));
  Output out;
  out.json["name"] = x.name();
  out.json["ell"] = ell;
  out.json["divisor"] = to_json(d);
  Json s = Json::array();
  out.table.header = {"class", "multiplicity"};
  for (const auto& [cls, mult] : counts) {
    s.push_back({{"class", to_json(cls)}, {"multiplicity", mult}});
    out.table.rows.push_back({class_label(cls), std::to_string(mult)});
  }
  out.json["summands"] = std::move(s);
  return out;
}

Output frob_set_cmd(const RunConfig& cfg) {
  const Variety x(load_fan(cfg.target));
  const FrobSet f = frob_set(x);
  Output out;
  out.json["name"] = x.name();
  merge(out.json, to_json(f));
  out.table.header = {"class", "divisor", "min_ell"};
  for (const auto& e : f.entries)
    out.table.rows.push_back({class_label(e.cls), join(e.divisor.coeffs), std::to_string(e.min_ell)});
  return out;
}

Output stabilize(const RunConfig& cfg) {
  const Variety x(load_fan(cfg.target));
  const FrobSet f = frob_set(x);
  Output out;
  out.json["name"] = x.name();
  out.json["stabilizing_ell"] = f.stabilizing_ell;
  out.json["frob_count"] = f.size();
  Json first = Json::array();
  for (const auto& e : f.entries) first.push_back({{"class", to_json(e.cls)}, {"min_ell", e.min_ell}});
  out.json["first_seen"] = std::move(first);
  out.table.header = {"name", "stabilizing_ell", "frob_count"};
  out.table.rows.push_back({x.name(), std::to_string(f.stabilizing_ell), std::to_string(f.size())});
  return out;
}

Output nef(const RunConfig& cfg) {
  const Variety x(load_fan(cfg.target));
  const TorusDivisor d = required_divisor(x, cfg);
  const NefVerdict v = is_nef(x, d);
  const bool anti = is_antinef(x, d);
  Output out;
  out.json["name"] = x.name();
  out.json["divisor"] = to_json(d);
  merge(out.json, to_json(v));
  out.json["antinef"] = anti;
  out.table.header = {"class", "nef", "ample", "antinef"};
  out.table.rows.push_back({class_label(v.cls), v.is_nef ? "yes" : "no", v.is_ample ? "yes" : "no", anti ? "yes" : "no"});
  return out;
}

Output cohom(const RunConfig& cfg) {
  const Variety x(load_fan(cfg.target));
  const TorusDivisor d = required_divisor(x, cfg);
  const CohomologyVector h = cohomology(x, d);
  Output out;
  out.json["name"] = x.name();
  out.json["divisor"] = to_json(d);
  out.json["class"] = to_json(divisor_class(x, d));
  merge(out.json, to_json(h, cfg.verbose));
  out.table.header = {"degree", "h"};
  for (std::size_t p = 0; p < h.h.size(); ++p) out.table.rows.push_back({std::to_string(p), h.h[p].get_str()});
  return out;
}

Output bu(const RunConfig& cfg) {
  const Variety x(load_fan(cfg.target));
  const auto classes = bu_set(x);
  Output out;
  out.json["name"] = x.name();
  out.json["count"] = classes.size();
  out.json["max_cones"] = x.num_cones();
  Json b = Json::array();
  out.table.header = {"class", "representative"};
  for (const auto& c : classes) {
    b.push_back(to_json(c));
    out.table.rows.push_back({class_label(c), join(x.representative(c).coeffs)});
  }
  out.json["bu"] = std::move(b);
  return out;
}

Output tilting(const RunConfig& cfg) {
  const Variety x(load_fan(cfg.target));
  const TiltingCandidate c = build_candidate(x);
  const ExtVanishing ev = ext_vanishing(c);
  Output out;
  out.json["name"] = x.name();
  merge(out.json, to_json(c));
  out.json["ext_vanishing"] = ev.ok;
  Json w = Json::array();
  for (const auto& v : ev.witnesses)
    w.push_back({{"from", to_json(c.summands[v.from])},
                 {"to", to_json(c.summands[v.to])},
                 {"degree", v.degree},
                 {"dim", to_json(v.dim)}});
  out.json["ext_witnesses"] = std::move(w);
  out.table.header = {"from", "to", "ext"};
  for (std::size_t a = 0; a < c.summands.size(); ++a)
    for (std::size_t b = 0; b < c.summands.size(); ++b)
      out.table.rows.push_back({class_label(c.summands[a]), class_label(c.summands[b]), join(c.ext[a][b])});
  out.code = ev.ok ? kOk : kFailed;
  return out;
}

Output orlov(const RunConfig& cfg) {
  const Variety x(load_fan(cfg.target));
  const OrlovReport r = orlov_check(x);
  Output out;
  out.json = to_json(r);
  out.table = orlov_table({r});
  out.code = r.status == OrlovStatus::VerifiedModuloFullness ? kOk : kFailed;
  return out;
}

Output batch(const RunConfig& cfg) {
  std::vector<std::string> targets;
  std::filesystem::path base = std::filesystem::current_path();
  if (cfg.manifest.empty()) {
    targets = builtin_names();
  } else {
    targets = read_manifest(cfg.manifest);
    base = std::filesystem::absolute(cfg.manifest).parent_path();
  }

  const auto n = static_cast<std::ptrdiff_t>(targets.size());
  std::vector<std::optional<OrlovReport>> reports(targets.size());
  std::vector<std::string> errors(targets.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      const Variety x(resolve_target(targets[i], base).fan);
      reports[i] = orlov_check(x);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  Output out;
  Json list = Json::array();
  std::vector<OrlovReport> ok;
  std::size_t verified = 0, failed = 0, not_applicable = 0, invalid = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!reports[i]) {
      ++invalid;
      list.push_back({{"target", targets[i]}, {"error", errors[i]}});
      continue;
    }
    const OrlovReport& r = *reports[i];
    switch (r.status) {
      case OrlovStatus::VerifiedModuloFullness: ++verified; break;
      case OrlovStatus::HypothesisFailed: ++failed; break;
      case OrlovStatus::NotApplicable: ++not_applicable; break;
    }
    list.push_back(to_json(r));
    ok.push_back(r);
  }
  out.json["reports"] = std::move(list);
  out.json["summary"] = {{"total", targets.size()},
                         {"verified", verified},
                         {"hypothesis_failed", failed},
                         {"not_applicable", not_applicable},
                         {"invalid", invalid}};
  out.table = orlov_table(ok);
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (!reports[i]) {
      std::vector<std::string> row(out.table.header.size());
      row.front() = targets[i];
      row.back() = "INVALID(" + errors[i] + ")";
      out.table.rows.push_back(std::move(row));
    }
  out.code = invalid ? kInvalid : failed ? kFailed : kOk;
  return out;
}

Output dispatch(const RunConfig& cfg) {
  if (cfg.command == "describe") return describe(cfg);
  if (cfg.command == "frob") return frob(cfg);
  if (cfg.command == "frob-set") return frob_set_cmd(cfg);
  if (cfg.command == "stabilize") return stabilize(cfg);
  if (cfg.command == "nef") return nef(cfg);
  if (cfg.command == "cohom") return cohom(cfg);
  if (cfg.command == "bu") return bu(cfg);
  if (cfg.command == "tilting") return tilting(cfg);
  if (cfg.command == "orlov") return orlov(cfg);
  return batch(cfg);
}

void diagnose(const std::string& kind, const std::string& msg) {
  std::cerr << "toric_orlov: error[" << kind << "]: " << msg << "\n";
}

// "--divisor -3,0,0" would otherwise parse the value as an option.
std::vector<std::string> glue_negative_values(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if ((a == "--divisor" || a == "--ell") && i + 1 < argc && argv[i + 1][0] == '-') {
      args.push_back(a + "=" + argv[++i]);
      continue;
    }
    args.push_back(std::move(a));
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Frobenius summands, Bondal-Uehara bundles and Rouquier dimension bounds for smooth toric varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "md", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_flag("-v,--verbose", cfg.verbose, "timings on stderr; weight patterns in cohom output");

  const auto with_target = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("target", cfg.target, "catalog name or fan file")->required();
    return sub;
  };
  with_target("describe", "validate the fan and print the ray order");
  CLI::App* frob_cmd = with_target("frob", "summand classes of (F_ell)_* O(D)");
  frob_cmd->add_option("--ell", cfg.ell, "Frobenius degree (default 2)")->check(CLI::PositiveNumber);
  frob_cmd->add_option("--divisor", cfg.divisor, "coefficients a1,...,ak in ray order (default 0)");
  with_target("frob-set", "the finite set frob(X)");
  with_target("stabilize", "least ell realizing every class of frob(X)");
  with_target("nef", "nef / ample / anti-nef test")->add_option("--divisor", cfg.divisor, "a1,...,ak")->required();
  with_target("cohom", "line bundle cohomology")->add_option("--divisor", cfg.divisor, "a1,...,ak")->required();
  with_target("bu", "frob(X) intersected with the anti-nef cone");
  with_target("tilting", "Ext table of the candidate tilting bundle");
  with_target("orlov", "hypothesis check and Rouquier dimension bounds");
  app.add_subcommand("batch", "orlov over a manifest (default: the builtin catalog)")
      ->add_option("--manifest", cfg.manifest, "one catalog name or fan file per line")
      ->check(CLI::ExistingFile);

  std::vector<std::string> args = glue_negative_values(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnose("usage", e.what());
    return kInvalid;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Output out = dispatch(cfg);
    std::cout << render(out, cfg.format);
    if (cfg.verbose)
      std::cerr << "toric_orlov: " << cfg.command << " finished in "
                << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
    return out.code;
  } catch (const InvalidFan& e) {
    diagnose("invalid_fan", e.what());
  } catch (const FanFileError& e) {
    diagnose("fan_file", e.what());
  } catch (const UsageError& e) {
    diagnose("usage", e.what());
  } catch (const std::out_of_range& e) {
    diagnose("unknown_target", e.what());
  } catch (const std::invalid_argument& e) {
    diagnose("invalid_input", e.what());
  } catch (const InfiniteCohomology& e) {
    diagnose("infinite_cohomology", e.what());
    return kFailed;
  } catch (const std::exception& e) {
    diagnose("internal", e.what());
    return kFailed;
  }
  return kInvalid;
}
