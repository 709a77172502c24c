// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. run() is the whole program; the binary's main()
// only forwards argv, so tests drive the exact code path users run.
//
// Exit codes: 0 success, 1 usage or input error, 2 capacity exceeded.

#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperci/decision.hpp"
#include "hyperci/form_io.hpp"
#include "hyperci/joins.hpp"
#include "hyperci/series.hpp"
#include "hyperci/slice_rank.hpp"

namespace hyperci::cli {

namespace detail {

using nlohmann::ordered_json;

enum class OutputMode { text, json, tsv };

inline std::vector<int> parse_int_list(const std::string& s, char sep, const char* what) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw std::invalid_argument(std::string(what) + ": empty entry");
    std::size_t pos = 0;
    int v = std::stoi(cur, &pos);
    if (pos != cur.size()) {
      throw std::invalid_argument(std::string(what) + ": bad integer '" + cur + "'");
    }
    out.push_back(v);
    cur.clear();
  };
  for (char c : s) {
    if (c == sep) {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  flush();
  return out;
}

inline Partition parse_partition(const std::string& s) {
  return Partition(parse_int_list(s, '+', "partition"));
}

inline std::vector<Partition> parse_lambdas(const std::string& s) {
  std::vector<Partition> out;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      out.push_back(parse_partition(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(parse_partition(cur));
  return out;
}

inline ordered_json profile_json(const CIProfile& p) {
  return ordered_json{{"n", p.n}, {"d", p.d}, {"a", p.a}};
}

inline std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string tsv_escape(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void emit_flat(const ordered_json& j, OutputMode mode, std::ostream& out) {
  if (mode == OutputMode::json) {
    out << j.dump() << "\n";
    return;
  }
  // tsv: one header line, one value line
  std::string header, row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!header.empty()) {
      header += '\t';
      row += '\t';
    }
    header += it.key();
    row += tsv_escape(it.value());
  }
  out << header << "\n" << row << "\n";
}

struct CommonOptions {
  std::uint64_t prime = kDefaultPrime;
  int trials = 2;
  std::uint64_t seed = 0;
  std::uint64_t capacity = default_limits().max_basis;
  std::string output = "text";
  bool json_flag = false;
  int jobs = 1;

  OutputMode mode() const {
    if (json_flag || output == "json") return OutputMode::json;
    if (output == "tsv") return OutputMode::tsv;
    return OutputMode::text;
  }

  PrimeField field() const {
    if (prime == 0 || prime > 0xffffffffull) {
      throw std::invalid_argument("prime must be a prime below 2^32");
    }
    return PrimeField(static_cast<std::uint32_t>(prime));
  }

  Limits limits() const {
    Limits l;
    l.max_basis = capacity;
    return l;
  }

  void provenance(std::ostream& err) const {
    err << "# prime=" << prime << " seed=" << seed << " trials=" << trials << "\n";
  }
};

inline void add_output_options(CLI::App* sub, CommonOptions& c) {
  sub->add_option("--output", c.output, "output format: text, json, or tsv")
      ->check(CLI::IsMember({"text", "json", "tsv"}));
  sub->add_flag("--json", c.json_flag, "shorthand for --output json");
}

inline void add_random_options(CLI::App* sub, CommonOptions& c) {
  sub->add_option("--prime", c.prime, "modulus for GF(p) computations");
  sub->add_option("--trials", c.trials, "independent random trials")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "master seed for all random draws");
  sub->add_option("--capacity", c.capacity, "largest allowed monomial basis")
      ->check(CLI::PositiveNumber);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::CommonOptions;
  using detail::OutputMode;
  using nlohmann::ordered_json;

  CommonOptions common;
  if (const char* env = std::getenv("HYPERCI_PRIME")) {
    try {
      common.prime = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: HYPERCI_PRIME is not an integer\n";
      return 1;
    }
  }
  if (const char* env = std::getenv("HYPERCI_CAPACITY")) {
    try {
      common.capacity = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: HYPERCI_CAPACITY is not an integer\n";
      return 1;
    }
  }

  CLI::App app{"complete intersections inside generic hypersurfaces, decided over GF(p)"};
  app.require_subcommand(1);

  int arg_n = 0, arg_d = 0, arg_k = 0, arg_r = 0, arg_nvars = 0;
  int arg_nmax = 0, arg_dmax_verify = 0, arg_dmax = 0;
  std::string arg_alist, arg_degrees, arg_lambdas, arg_lambda;

  CLI::App* decide_cmd = app.add_subcommand("decide", "decide containment by rank");
  decide_cmd->add_option("n", arg_n, "ambient projective dimension")->required();
  decide_cmd->add_option("d", arg_d, "hypersurface degree")->required();
  decide_cmd->add_option("a", arg_alist, "complete intersection degrees a1,...,ar")->required();
  detail::add_random_options(decide_cmd, common);
  detail::add_output_options(decide_cmd, common);

  CLI::App* classify_cmd = app.add_subcommand("classify", "closed-form classification");
  classify_cmd->add_option("n", arg_n)->required();
  classify_cmd->add_option("d", arg_d)->required();
  classify_cmd->add_option("a", arg_alist, "normalized degrees a1,...,ar")->required();
  detail::add_output_options(classify_cmd, common);

  CLI::App* hf_cmd = app.add_subcommand("hf", "Hilbert function of an ideal of generic forms");
  hf_cmd->add_option("n", arg_n)->required();
  hf_cmd->add_option("d", arg_d)->required();
  hf_cmd->add_option("--degrees", arg_degrees, "generator degrees a,b,c,...")->required();
  detail::add_random_options(hf_cmd, common);
  detail::add_output_options(hf_cmd, common);

  CLI::App* series_cmd = app.add_subcommand("series", "truncated generic Hilbert series");
  series_cmd->add_option("nvars", arg_nvars, "number of ring variables")->required();
  series_cmd->add_option("--degrees", arg_degrees, "generator degrees a,b,c,...")->required();
  series_cmd->add_option("--dmax", arg_dmax, "largest degree to print")->required();
  detail::add_output_options(series_cmd, common);

  CLI::App* join_cmd = app.add_subcommand("join", "dimension of a join of reducible varieties");
  join_cmd->add_option("n", arg_n)->required();
  join_cmd->add_option("d", arg_d)->required();
  join_cmd->add_option("--lambdas", arg_lambdas, "factor partitions \"a1+b1;a2+b2;...\"")
      ->required();
  detail::add_random_options(join_cmd, common);
  detail::add_output_options(join_cmd, common);

  CLI::App* secant_cmd = app.add_subcommand("secant", "dimension of a secant variety");
  secant_cmd->add_option("n", arg_n)->required();
  secant_cmd->add_option("lambda", arg_lambda, "partition \"a+b\"")->required();
  secant_cmd->add_option("k", arg_k, "number of points joined")->required();
  detail::add_random_options(secant_cmd, common);
  detail::add_output_options(secant_cmd, common);

  CLI::App* defect_cmd = app.add_subcommand("defect", "secant defect of a reducible variety");
  defect_cmd->add_option("n", arg_n)->required();
  defect_cmd->add_option("lambda", arg_lambda, "partition \"a+b\"")->required();
  detail::add_random_options(defect_cmd, common);
  detail::add_output_options(defect_cmd, common);

  CLI::App* fano_cmd = app.add_subcommand("fano", "dimension-count containment criterion");
  fano_cmd->add_option("n", arg_n)->required();
  fano_cmd->add_option("d", arg_d)->required();
  fano_cmd->add_option("r", arg_r)->required();
  detail::add_output_options(fano_cmd, common);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "compare rank decisions against the classification");
  verify_cmd->add_option("--nmax", arg_nmax, "largest ambient dimension")->required();
  verify_cmd->add_option("--dmax", arg_dmax_verify, "largest hypersurface degree")->required();
  verify_cmd->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);
  detail::add_random_options(verify_cmd, common);
  detail::add_output_options(verify_cmd, common);

  CLI::App* gorenstein_cmd =
      app.add_subcommand("gorenstein", "Hilbert function profile of the associated algebra");
  gorenstein_cmd->add_option("r", arg_r)->required();
  gorenstein_cmd->add_option("d", arg_d)->required();
  gorenstein_cmd->add_option("a", arg_alist, "degrees a1,...,ar")->required();
  detail::add_output_options(gorenstein_cmd, common);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hyperci");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const OutputMode mode = common.mode();
  try {
    if (app.got_subcommand(decide_cmd)) {
      const CIProfile profile(arg_n, arg_d,
                              detail::parse_int_list(arg_alist, ',', "degree list"));
      const DecisionReport rep =
          decide(profile, common.trials, common.seed, common.field(), common.limits());
      if (mode == OutputMode::text) {
        common.provenance(err);
        out << to_string(rep.verdict) << "\n";
      } else {
        ordered_json j{{"verdict", to_string(rep.verdict)},
                       {"certified", rep.certified},
                       {"hilbert_at_d", rep.hilbert_at_d < 0
                                            ? ordered_json(nullptr)
                                            : ordered_json(rep.hilbert_at_d)},
                       {"trials", rep.trials_requested},
                       {"trials_used", rep.trials_used},
                       {"prime", rep.prime},
                       {"seed", rep.seed},
                       {"input", detail::profile_json(rep.input)},
                       {"normalized", detail::profile_json(rep.normalized)}};
        detail::emit_flat(j, mode, out);
      }
    } else if (app.got_subcommand(classify_cmd)) {
      const CIProfile profile(arg_n, arg_d,
                              detail::parse_int_list(arg_alist, ',', "degree list"));
      const TheoremPrediction pred = classify(profile);
      if (mode == OutputMode::text) {
        out << to_string(pred.verdict) << " " << pred.branch << "\n";
      } else {
        detail::emit_flat(
            ordered_json{{"verdict", to_string(pred.verdict)}, {"branch", pred.branch}},
            mode, out);
      }
    } else if (app.got_subcommand(hf_cmd)) {
      const std::vector<int> degrees = detail::parse_int_list(arg_degrees, ',', "degrees");
      if (arg_n < 0 || arg_d < 0) throw std::invalid_argument("hf: n and d must be nonnegative");
      const GenericValue gv = generic_hilbert_value(arg_n, degrees, arg_d, common.trials,
                                                    common.seed, common.field(),
                                                    common.limits());
      if (mode == OutputMode::text) {
        common.provenance(err);
        out << gv.value << "\n";
      } else {
        detail::emit_flat(ordered_json{{"n", arg_n},
                                       {"d", arg_d},
                                       {"degrees", degrees},
                                       {"value", gv.value},
                                       {"certified", gv.certified_zero},
                                       {"trials", common.trials},
                                       {"trials_used", gv.trials_used},
                                       {"prime", common.prime},
                                       {"seed", common.seed}},
                          mode, out);
      }
    } else if (app.got_subcommand(series_cmd)) {
      const std::vector<int> degrees = detail::parse_int_list(arg_degrees, ',', "degrees");
      const HilbertVector hv = froberg_series(arg_nvars, degrees, arg_dmax);
      if (mode == OutputMode::text) {
        std::string line;
        for (std::size_t i = 0; i < hv.values.size(); ++i) {
          if (i) line += ' ';
          line += std::to_string(hv.values[i]);
        }
        out << line << "\n";
      } else {
        detail::emit_flat(ordered_json{{"nvars", hv.nvars},
                                       {"degrees", hv.gen_degrees},
                                       {"d_max", arg_dmax},
                                       {"values", hv.values},
                                       {"mode", to_string(hv.mode)}},
                          mode, out);
      }
    } else if (app.got_subcommand(join_cmd)) {
      const JoinSpec spec(arg_n, detail::parse_lambdas(arg_lambdas));
      if (spec.degree() != arg_d) {
        throw std::invalid_argument("join: partitions do not sum to d");
      }
      const long long ambient =
          static_cast<long long>(checked_basis_size(arg_n, arg_d, common.limits())) - 1;
      const long long dim =
          join_dim(spec, common.trials, common.seed, common.field(), common.limits());
      if (mode == OutputMode::text) {
        common.provenance(err);
        out << dim << "\n";
      } else {
        ordered_json names = ordered_json::array();
        for (const auto& l : spec.lambdas) names.push_back(l.str());
        detail::emit_flat(ordered_json{{"n", arg_n},
                                       {"d", arg_d},
                                       {"lambdas", names},
                                       {"dim", dim},
                                       {"ambient", ambient},
                                       {"fills", dim == ambient},
                                       {"trials", common.trials},
                                       {"prime", common.prime},
                                       {"seed", common.seed}},
                          mode, out);
      }
    } else if (app.got_subcommand(secant_cmd)) {
      const Partition lambda = detail::parse_partition(arg_lambda);
      const long long ambient = static_cast<long long>(checked_basis_size(
                                    arg_n, lambda.total(), common.limits())) - 1;
      const long long dim = secant_dim(lambda, arg_k, arg_n, common.trials, common.seed,
                                       common.field(), common.limits());
      if (mode == OutputMode::text) {
        common.provenance(err);
        out << dim << "\n";
      } else {
        detail::emit_flat(ordered_json{{"n", arg_n},
                                       {"lambda", lambda.str()},
                                       {"k", arg_k},
                                       {"dim", dim},
                                       {"ambient", ambient},
                                       {"fills", dim == ambient},
                                       {"trials", common.trials},
                                       {"prime", common.prime},
                                       {"seed", common.seed}},
                          mode, out);
      }
    } else if (app.got_subcommand(defect_cmd)) {
      const Partition lambda = detail::parse_partition(arg_lambda);
      const long long rdim = reducible_dim(lambda, arg_n);
      const long long sdim = secant_dim(lambda, 2, arg_n, common.trials, common.seed,
                                        common.field(), common.limits());
      const long long expected = 2 * rdim + 1;
      if (mode == OutputMode::text) {
        common.provenance(err);
        out << (expected - sdim) << "\n";
      } else {
        detail::emit_flat(ordered_json{{"n", arg_n},
                                       {"lambda", lambda.str()},
                                       {"reducible_dim", rdim},
                                       {"secant_dim", sdim},
                                       {"expected", expected},
                                       {"defect", expected - sdim},
                                       {"trials", common.trials},
                                       {"prime", common.prime},
                                       {"seed", common.seed}},
                          mode, out);
      }
    } else if (app.got_subcommand(fano_cmd)) {
      const bool ok = fano_ci_criterion(arg_n, arg_d, arg_r);
      if (mode == OutputMode::text) {
        out << (ok ? "true" : "false") << "\n";
      } else {
        detail::emit_flat(
            ordered_json{{"n", arg_n}, {"d", arg_d}, {"r", arg_r}, {"satisfied", ok}}, mode,
            out);
      }
    } else if (app.got_subcommand(verify_cmd)) {
      const VerifyReport rep =
          verify_theorem(arg_nmax, arg_dmax_verify, common.trials, common.seed, common.jobs,
                         common.field(), common.limits());
      if (mode == OutputMode::text) {
        common.provenance(err);
        out << "instances: " << rep.total() << "\n"
            << "agreements: " << rep.agreements() << "\n"
            << "disagreements: " << rep.disagreements() << "\n"
            << "skipped: " << rep.skipped.size() << "\n";
        for (const auto& inst : rep.instances) {
          if (inst.agree) continue;
          out << "disagree: n=" << inst.profile.n << " d=" << inst.profile.d << " a="
              << detail::join_ints(inst.profile.a, ',') << " decided="
              << to_string(inst.decided) << " predicted=" << to_string(inst.predicted)
              << " (" << inst.branch << ")\n";
        }
        for (const auto& skip : rep.skipped) {
          out << "skipped: n=" << skip.profile.n << " d=" << skip.profile.d << " a="
              << detail::join_ints(skip.profile.a, ',') << " reason=" << skip.reason << "\n";
        }
      } else if (mode == OutputMode::json) {
        ordered_json disagreements = ordered_json::array();
        for (const auto& inst : rep.instances) {
          if (inst.agree) continue;
          disagreements.push_back(ordered_json{{"profile", detail::profile_json(inst.profile)},
                                               {"decided", to_string(inst.decided)},
                                               {"predicted", to_string(inst.predicted)},
                                               {"branch", inst.branch},
                                               {"hilbert_at_d", inst.hilbert_at_d}});
        }
        ordered_json skipped = ordered_json::array();
        for (const auto& skip : rep.skipped) {
          skipped.push_back(ordered_json{{"profile", detail::profile_json(skip.profile)},
                                         {"reason", skip.reason}});
        }
        detail::emit_flat(ordered_json{{"n_max", rep.n_max},
                                       {"d_max", rep.d_max},
                                       {"total", rep.total()},
                                       {"agreements", rep.agreements()},
                                       {"disagreements", disagreements},
                                       {"skipped", skipped},
                                       {"trials", common.trials},
                                       {"prime", common.prime},
                                       {"seed", common.seed},
                                       {"jobs", common.jobs}},
                          OutputMode::json, out);
      } else {
        out << "n\td\ta\tdecided\tpredicted\tbranch\thilbert_at_d\tagree\n";
        for (const auto& inst : rep.instances) {
          out << inst.profile.n << '\t' << inst.profile.d << '\t'
              << detail::join_ints(inst.profile.a, ',') << '\t' << to_string(inst.decided)
              << '\t' << to_string(inst.predicted) << '\t' << inst.branch << '\t'
              << inst.hilbert_at_d << '\t' << (inst.agree ? "true" : "false") << "\n";
        }
        for (const auto& skip : rep.skipped) {
          out << skip.profile.n << '\t' << skip.profile.d << '\t'
              << detail::join_ints(skip.profile.a, ',') << '\t' << "skipped" << '\t' << "-"
              << '\t' << "-" << '\t' << "-" << '\t' << "-" << "\n";
        }
      }
    } else if (app.got_subcommand(gorenstein_cmd)) {
      const std::vector<int> a = detail::parse_int_list(arg_alist, ',', "degree list");
      const GorensteinProfile gp = gorenstein_profile(arg_r, arg_d, a);
      if (mode == OutputMode::text) {
        std::string hf;
        for (std::size_t i = 0; i < gp.hf.size(); ++i) {
          if (i) hf += ' ';
          hf += std::to_string(gp.hf[i]);
        }
        out << "hf: " << hf << "\n"
            << "socle: " << gp.socle << "\n"
            << "c: " << gp.c.str() << "\n"
            << "alpha: " << gp.alpha.str() << "\n"
            << "beta: " << gp.beta.str() << "\n"
            << "m_surjective: " << (gp.m_surjective ? "true" : "false") << "\n"
            << "general_case: " << (gp.general_case ? "true" : "false") << "\n"
            << "symmetric: " << (gp.symmetric ? "true" : "false") << "\n"
            << "unimodal: " << (gp.unimodal ? "true" : "false") << "\n";
      } else {
        detail::emit_flat(
            ordered_json{{"r", gp.r},
                         {"d", gp.d},
                         {"a", gp.a},
                         {"socle", gp.socle},
                         {"c", gp.c.str()},
                         {"alpha", gp.alpha.str()},
                         {"beta", gp.beta.str()},
                         {"hf", gp.hf},
                         {"m_surjective", gp.m_surjective},
                         {"general_case", gp.general_case},
                         {"checks",
                          ordered_json{{"symmetric", gp.symmetric},
                                       {"unimodal", gp.unimodal},
                                       {"strictly_increasing_to_a1",
                                        gp.strictly_increasing_to_a1},
                                       {"middle_exceeds_a1", gp.middle_exceeds_a1},
                                       {"tail_balanced", gp.tail_balanced}}}},
            mode, out);
      }
    }
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hyperci::cli
