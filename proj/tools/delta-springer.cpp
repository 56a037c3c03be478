// delta-springer: exact computations for the rings R_{n,lambda,s} and their
// cell pavings.  JSON on stdout by default, display LaTeX with --latex.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dsv/dsv.hpp"

namespace {

using nlohmann::json;

// Attributed parse failure; the CLI reports the flag and exits 2.
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what)
      : std::runtime_error(flag + ": " + what) {}
};

struct Options {
  int n = -1;
  std::string lambda_text;
  int s = 0;
  std::string method = "groebner";
  bool latex = false;
  bool force_json = false;
  int threads = 0;
  bool unsafe = false;
  bool algebraic = false;
  int max_degree = 8;
  bool all = false;
  int max_n = 6;
};

dsv::Partition parse_lambda(const std::string& text) {
  try {
    return dsv::Partition::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("--lambda", e.what());
  }
}

dsv::RingSpec make_spec(const Options& opt) {
  if (opt.n < 0) throw UsageError("--n", "a nonnegative integer is required");
  dsv::Partition lambda = parse_lambda(opt.lambda_text);
  if (lambda.size() > opt.n) throw UsageError("--lambda", "|lambda| must be at most n");
  try {
    return dsv::RingSpec(opt.n, lambda, opt.s);
  } catch (const std::exception& e) {
    throw UsageError("--s", e.what());
  }
}

// Desk-scale command caps on top of the library guards; --unsafe-size lifts
// both at once.
void guard_cli(int n, bool groebner_backed) {
  int cap = groebner_backed ? 6 : 7;
  dsv::config::check(n <= cap, groebner_backed ? "cli_groebner_n" : "cli_enumeration_n",
                     "n = " + std::to_string(n) + " exceeds the default cap of " +
                         std::to_string(cap));
}

int shown_degree(int alg, bool cohomological) { return cohomological ? 2 * alg : alg; }

std::string monomial_latex(const dsv::Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    out += "x_{" + std::to_string(i + 1) + "}";
    if (m.exps[i] > 1) out += "^{" + std::to_string(m.exps[i]) + "}";
  }
  return out;
}

json base_json(const std::string& command, const dsv::RingSpec& spec) {
  return json{{"schema", "1"}, {"command", command}, {"spec", dsv::jsonio::spec_json(spec)}};
}

struct Output {
  int exit_code = 0;
  std::string text;
};

Output emit(const json& body) { return {0, body.dump(2) + "\n"}; }

Output run_hilb(const dsv::RingSpec& spec, const Options& opt) {
  bool coh = !opt.algebraic;
  std::vector<std::pair<std::string, dsv::QPolynomial>> series;
  auto want = [&](const char* name) { return opt.method == name || opt.method == "all"; };
  if (want("groebner")) {
    guard_cli(spec.n, true);
    series.emplace_back("groebner", dsv::hilbert_groebner(spec));
  }
  if (want("recursive")) series.emplace_back("recursive", dsv::hilbert_recursive(spec));
  if (want("paving")) {
    guard_cli(spec.n, false);
    series.emplace_back("paving", dsv::paving_hilbert(spec));
  }
  if (opt.method == "prd") {
    guard_cli(spec.n, false);
    series.emplace_back("prd", dsv::graded_frobenius(spec).dimension_series());
  }
  bool agree = true;
  for (const auto& [name, h] : series) agree = agree && h == series.front().second;
  const dsv::QPolynomial& h = series.front().second;
  if (opt.latex) return {agree ? 0 : 1, dsv::latex::qpolynomial(h, coh) + "\n"};
  json body = base_json("hilb", spec);
  body["grading"] = coh ? "cohomological" : "algebraic";
  body["method"] = opt.method;
  body["series"] = dsv::jsonio::series_json(h, coh);
  body["text"] = h.to_string(coh);
  body["total"] = h.total();
  body["top_degree"] = shown_degree(h.top_degree(), coh);
  if (opt.method == "all") {
    json per = json::object();
    for (const auto& [name, hm] : series) per[name] = dsv::jsonio::series_json(hm, coh);
    body["methods"] = per;
    body["agree"] = agree;
  }
  Output out = emit(body);
  out.exit_code = agree ? 0 : 1;
  return out;
}

Output run_frob(const dsv::RingSpec& spec, const Options& opt) {
  bool coh = !opt.algebraic;
  guard_cli(spec.n, false);
  dsv::GradedSymmetricFunction f = dsv::graded_frobenius(spec);
  if (opt.latex) return {0, dsv::latex::graded_schur_sum(f, coh) + "\n"};
  json body = base_json("frob", spec);
  body["grading"] = coh ? "cohomological" : "algebraic";
  body["frobenius"] = dsv::jsonio::graded_frobenius_json(f, coh);
  dsv::QPolynomial h = f.dimension_series();
  body["dimensions"] = dsv::jsonio::series_json(h, coh);
  body["total"] = h.total();
  return emit(body);
}

Output run_cells(const dsv::RingSpec& spec, const Options& opt) {
  guard_cli(spec.n, false);
  std::vector<dsv::Cell> cells = dsv::enumerate_cells(spec);
  if (opt.latex) {
    std::string out;
    for (const dsv::Cell& cell : cells) {
      out += dsv::latex::young_diagram(cell.iprd) + "\n\n";
    }
    return {0, out};
  }
  json body = base_json("cells", spec);
  body["count"] = cells.size();
  json list = json::array();
  for (const dsv::Cell& cell : cells) list.push_back(dsv::jsonio::cell_json(cell));
  body["cells"] = list;
  return emit(body);
}

Output run_components(const dsv::RingSpec& spec, const Options& opt) {
  guard_cli(spec.n, false);
  std::vector<dsv::Component> comps = dsv::enumerate_components(spec);
  std::size_t total = 0;
  for (const dsv::Component& comp : comps) total += comp.cells.size();
  if (opt.latex) {
    std::string out;
    for (const dsv::Component& comp : comps) {
      out += "\\text{" + comp.cls.to_string() + "}: " + std::to_string(comp.cells.size()) +
             " \\\\\n";
    }
    return {0, out};
  }
  json body = base_json("components", spec);
  body["count"] = comps.size();
  json list = json::array();
  for (const dsv::Component& comp : comps) list.push_back(dsv::jsonio::component_json(comp));
  body["components"] = list;
  body["cells_total"] = total;
  return emit(body);
}

Output run_basis(const dsv::RingSpec& spec, const Options& opt) {
  bool coh = !opt.algebraic;
  guard_cli(spec.n, false);
  if (opt.latex) {
    std::vector<dsv::Monomial> monos = dsv::artin_basis(spec);
    std::string out;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (i) out += ",\\; ";
      out += monomial_latex(monos[i]);
    }
    return {0, out + "\n"};
  }
  json body = base_json("basis", spec);
  body["grading"] = coh ? "cohomological" : "algebraic";
  json list = dsv::jsonio::basis_json(spec, coh);
  body["count"] = list.size();
  body["basis"] = list;
  return emit(body);
}

Output run_stable(const Options& opt) {
  bool coh = !opt.algebraic;
  if (opt.n < 0) throw UsageError("--n", "a nonnegative integer is required");
  dsv::Partition lambda = parse_lambda(opt.lambda_text);
  if (lambda.size() > opt.n) throw UsageError("--lambda", "|lambda| must be at most n");
  if (opt.max_degree < 0) throw UsageError("--max-degree", "must be nonnegative");
  guard_cli(opt.n, false);
  dsv::GradedSymmetricFunction f = dsv::stable_frobenius(opt.n, lambda, opt.max_degree);
  if (opt.latex) return {0, dsv::latex::graded_schur_sum(f, coh) + " + \\cdots\n"};
  json body{{"schema", "1"},
            {"command", "stable"},
            {"n", opt.n},
            {"lambda", dsv::jsonio::partition_key(lambda)},
            {"max_degree", opt.max_degree}};
  body["grading"] = coh ? "cohomological" : "algebraic";
  body["frobenius"] = dsv::jsonio::graded_frobenius_json(f, coh);
  return emit(body);
}

Output run_hall_littlewood(const Options& opt) {
  bool coh = !opt.algebraic;
  dsv::Partition lambda = parse_lambda(opt.lambda_text);
  dsv::GradedSymmetricFunction f = dsv::modified_hall_littlewood(lambda);
  if (opt.latex) return {0, dsv::latex::graded_schur_sum(f, coh) + "\n"};
  json body{{"schema", "1"},
            {"command", "hall-littlewood"},
            {"lambda", dsv::jsonio::partition_key(lambda)}};
  body["grading"] = coh ? "cohomological" : "algebraic";
  body["function"] = dsv::jsonio::graded_frobenius_json(f, coh);
  return emit(body);
}

Output run_verify(const Options& opt) {
  if (opt.all) {
    guard_cli(opt.max_n, true);
    std::vector<dsv::CheckResult> rows = dsv::verify_all(opt.max_n);
    bool pass = true;
    for (const dsv::CheckResult& row : rows) pass = pass && row.pass;
    json body{{"schema", "1"},
              {"command", "verify"},
              {"mode", "all"},
              {"max_n", opt.max_n},
              {"status", pass ? "pass" : "fail"},
              {"checks", dsv::jsonio::check_results_json(rows)}};
    Output out = emit(body);
    out.exit_code = pass ? 0 : 1;
    return out;
  }
  dsv::RingSpec spec = make_spec(opt);
  guard_cli(spec.n, true);
  std::vector<dsv::CheckResult> rows = dsv::verify_spec(spec);
  json body = dsv::jsonio::verify_report_json(spec, rows);
  body["command"] = "verify";
  Output out = emit(body);
  out.exit_code = body["status"] == "pass" ? 0 : 1;
  return out;
}

std::string cache_request(const std::string& command, const Options& opt) {
  std::ostringstream key;
  key << command << " n=" << opt.n << " lambda=" << opt.lambda_text << " s=" << opt.s
      << " method=" << opt.method << " grading=" << (opt.algebraic ? "alg" : "coh")
      << " latex=" << (opt.latex ? 1 : 0);
  if (command == "stable") key << " max_degree=" << opt.max_degree;
  return key.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of the rings R_{n,lambda,s}"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_spec, bool with_grading) {
    if (with_spec) {
      cmd->add_option("--n", opt.n, "number of variables");
      cmd->add_option("--lambda", opt.lambda_text, "partition, comma separated (\"\" or 0 empty)");
      cmd->add_option("--s", opt.s, "row bound, at least len(lambda)");
    }
    auto* latex = cmd->add_flag("--latex", opt.latex, "display LaTeX instead of JSON");
    cmd->add_flag("--json", opt.force_json, "JSON output (the default)")->excludes(latex);
    cmd->add_option("--threads", opt.threads, "worker threads for parallel sweeps");
    cmd->add_flag("--unsafe-size", opt.unsafe, "lift the desk-scale guards");
    if (with_grading)
      cmd->add_flag("--algebraic-grading", opt.algebraic,
                    "report algebraic degrees instead of doubled cohomological ones");
  };

  CLI::App* hilb = app.add_subcommand("hilb", "graded Hilbert series");
  add_common(hilb, true, true);
  hilb->add_option("--method", opt.method, "computation route")
      ->check(CLI::IsMember({"groebner", "recursive", "paving", "prd", "all"}));

  CLI::App* frob = app.add_subcommand("frob", "graded Frobenius characteristic");
  add_common(frob, true, true);

  CLI::App* cells = app.add_subcommand("cells", "affine paving cells");
  add_common(cells, true, false);

  CLI::App* components = app.add_subcommand("components", "top components and their cell counts");
  add_common(components, true, false);

  CLI::App* basis = app.add_subcommand("basis", "monomial basis as an ordered term list");
  add_common(basis, true, true);

  CLI::App* verify = app.add_subcommand("verify", "cross-check matrix");
  add_common(verify, true, false);
  verify->add_flag("--all", opt.all, "run the whole check matrix");
  verify->add_option("--max-n", opt.max_n, "sweep bound for --all");

  CLI::App* stable = app.add_subcommand("stable", "stable graded character up to a degree cutoff");
  add_common(stable, true, true);
  stable->add_option("--max-degree", opt.max_degree, "largest reported cohomological degree");

  CLI::App* hall = app.add_subcommand("hall-littlewood", "modified Hall-Littlewood expansion");
  add_common(hall, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (opt.threads > 0) dsv::config::thread_count() = opt.threads;
  if (opt.unsafe) dsv::config::limits().enforce = false;

  std::string command;
  for (CLI::App* cmd : {hilb, frob, cells, components, basis, verify, stable, hall})
    if (cmd->parsed()) command = cmd->get_name();

  try {
    bool cacheable = command != "verify";
    std::string request = cache_request(command, opt);
    if (cacheable) {
      if (auto hit = dsv::cache::lookup(request)) {
        std::cout << *hit;
        return 0;
      }
    }
    Output out;
    if (command == "hilb") {
      out = run_hilb(make_spec(opt), opt);
    } else if (command == "frob") {
      out = run_frob(make_spec(opt), opt);
    } else if (command == "cells") {
      out = run_cells(make_spec(opt), opt);
    } else if (command == "components") {
      out = run_components(make_spec(opt), opt);
    } else if (command == "basis") {
      out = run_basis(make_spec(opt), opt);
    } else if (command == "verify") {
      out = run_verify(opt);
    } else if (command == "stable") {
      out = run_stable(opt);
    } else {
      out = run_hall_littlewood(opt);
    }
    std::cout << out.text;
    if (cacheable && out.exit_code == 0) dsv::cache::store(request, out.text);
    return out.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const dsv::GuardError& e) {
    std::cerr << "guard error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
