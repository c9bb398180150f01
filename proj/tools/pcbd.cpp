// Command line front end for the paired-comparison block design toolkit.
//
// Subcommands: construct, verify, certify, oracle, hadamard, simulate,
// catalog.  Every subcommand prints a stable, machine-readable document on
// stdout; diagnostics and timing go to stderr.  Exit codes: 0 success,
// 2 validation or class errors, 3 unsupported Hadamard order, 4 search
// budget refusal, 64 unknown subcommand.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Dense>

#include <pcbd/pcbd.hpp>

namespace {

using pcbd::ordered_json;

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw pcbd::validation_error(std::string(what) + ": bad integer '" + tok + "'");
    }
  }
  if (out.empty()) throw pcbd::validation_error(std::string(what) + ": empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw pcbd::validation_error(std::string(what) + ": bad number '" + tok + "'");
    }
  }
  if (out.empty()) throw pcbd::validation_error(std::string(what) + ": empty list");
  return out;
}

std::vector<std::pair<int, int>> parse_groups(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw pcbd::validation_error("--groups entries look like B:M, got '" + tok + "'");
    try {
      out.emplace_back(std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1)));
    } catch (const std::exception&) {
      throw pcbd::validation_error("--groups: bad integer in '" + tok + "'");
    }
  }
  if (out.empty()) throw pcbd::validation_error("--groups: empty list");
  return out;
}

ordered_json qmat_to_json(const pcbd::qmat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

ordered_json imat_to_json(const pcbd::imat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

ordered_json dmat_to_json(const pcbd::dmat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

ordered_json value_to_json(const pcbd::criterion_value& v) {
  ordered_json j;
  switch (v.kind) {
    case pcbd::criterion_value::kind_t::exact: j["kind"] = "exact"; break;
    case pcbd::criterion_value::kind_t::quadratic: j["kind"] = "quadratic"; break;
    case pcbd::criterion_value::kind_t::interval: j["kind"] = "interval"; break;
  }
  j["value"] = v.str();
  j["approx"] = v.approx();
  return j;
}

ordered_json criteria_to_json(const pcbd::qmat& m) {
  ordered_json j;
  j["D"] = value_to_json(pcbd::evaluate(m, pcbd::design_criterion::determinant));
  try {
    j["A"] = value_to_json(pcbd::evaluate(m, pcbd::design_criterion::average_variance));
  } catch (const pcbd::singular_error&) {
    j["A"] = ordered_json{{"kind", "undefined"}, {"value", "singular"}};
  }
  j["E"] = value_to_json(pcbd::evaluate(m, pcbd::design_criterion::smallest_eigenvalue));
  j["trace"] = value_to_json(pcbd::evaluate(m, pcbd::design_criterion::total_trace));
  return j;
}

ordered_json eigenvalues_to_json(const pcbd::qmat& m) {
  ordered_json j;
  pcbd::ij_form ij = pcbd::as_ij_form(m);
  if (ij.ok) {
    j["exact"] = true;
    ordered_json vals = ordered_json::array();
    for (const auto& [v, mult] : pcbd::ij_eigenvalues(ij.alpha, ij.beta, m.rows()))
      vals.push_back(ordered_json{{"value", v.str()}, {"multiplicity", mult}});
    j["values"] = vals;
    return j;
  }
  j["exact"] = false;
  Eigen::MatrixXd a(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) a(i, c) = m(i, c).to_double();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  ordered_json vals = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) vals.push_back(es.eigenvalues()(i));
  j["values"] = vals;
  return j;
}

ordered_json checks_to_json(const std::vector<pcbd::claim_check>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks)
    arr.push_back(ordered_json{{"label", c.label}, {"status", c.status}, {"detail", c.detail}});
  return arr;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct construct_flags {
  std::optional<int> method, n, k, b, k1, k2, m, m1, i, p, q;
  std::string sizes, groups;

  pcbd::method_params to_params() const {
    pcbd::method_params mp;
    if (!method) throw pcbd::validation_error("--method is required");
    mp.method = *method;
    mp.n = n;
    mp.k = k;
    mp.b = b;
    mp.k1 = k1;
    mp.k2 = k2;
    mp.m = m;
    mp.m1 = m1;
    mp.i = i;
    mp.p = p;
    mp.q = q;
    if (!sizes.empty()) mp.sizes = parse_int_list(sizes, "--sizes");
    if (!groups.empty()) mp.groups = parse_groups(groups);
    return mp;
  }

  std::map<std::string, std::string> to_manifest() const {
    std::map<std::string, std::string> p2;
    auto put = [&](const char* name, const std::optional<int>& v) {
      if (v) p2[name] = std::to_string(*v);
    };
    put("method", method);
    put("n", n);
    put("k", k);
    put("b", b);
    put("k1", k1);
    put("k2", k2);
    put("m", m);
    put("m1", m1);
    put("i", i);
    put("p", p);
    put("q", q);
    if (!sizes.empty()) p2["sizes"] = sizes;
    if (!groups.empty()) p2["groups"] = groups;
    return p2;
  }

  bool any() const {
    return method || n || k || b || k1 || k2 || m || m1 || i || p || q || !sizes.empty() ||
           !groups.empty();
  }
};

void add_construct_flags(CLI::App* cmd, construct_flags& f) {
  cmd->add_option("--method", f.method, "method number, 1 to 27");
  cmd->add_option("--n", f.n, "number of pairs N");
  cmd->add_option("--k", f.k, "number of attributes K");
  cmd->add_option("--b,--b1", f.b, "number of blocks (or b1 for method 10)");
  cmd->add_option("--k1", f.k1, "first attribute group size");
  cmd->add_option("--k2", f.k2, "second attribute group size");
  cmd->add_option("--m", f.m, "block size m");
  cmd->add_option("--m1", f.m1, "first block size m1");
  cmd->add_option("--i", f.i, "number of dissolved blocks");
  cmd->add_option("--p", f.p, "Hadamard order p");
  cmd->add_option("--q", f.q, "number of Kronecker copies q");
  cmd->add_option("--sizes", f.sizes, "block sizes, comma separated (e.g. 4,4,6)");
  cmd->add_option("--groups", f.groups, "groups as B:M pairs, comma separated (e.g. 4:2,4:3)");
}

std::string render_design(const pcbd::construction_result& cr, const std::string& format) {
  std::ostringstream ss;
  if (format == "csv") {
    pcbd::write_design_csv(ss, cr.design);
  } else if (format == "pairs") {
    pcbd::write_design_pairs(ss, cr.design);
  } else if (format == "json") {
    ss << pcbd::design_to_json(cr.design, &cr.descriptor).dump(2) << "\n";
  } else {
    throw pcbd::validation_error("unknown format '" + format + "' (want csv, json or pairs)");
  }
  return ss.str();
}

int run_construct(const construct_flags& flags, const std::string& format,
                  const std::string& out, bool as_json) {
  pcbd::construction_result cr = pcbd::construct(flags.to_params());
  const std::string effective = as_json ? "json" : format;
  const std::string payload = render_design(cr, effective);
  if (!out.empty()) {
    pcbd::write_text_file(out, payload);
    auto params = flags.to_manifest();
    params["format"] = effective;
    pcbd::write_manifest(out, "construct", params, {});
    std::cerr << "wrote " << out << " and " << out << ".manifest.json\n";
  } else {
    std::cout << payload;
  }
  return 0;
}

int run_verify(const std::string& file) {
  pcbd::construction_result cr = pcbd::load_design_with_provenance(file);
  pcbd::qmat m = pcbd::information_matrix(cr.design);
  ordered_json j;
  j["format"] = "pcbd-verify";
  j["toolkit_version"] = pcbd::toolkit_version;
  j["file"] = file;
  j["design"] = ordered_json{{"pairs", cr.design.pairs()},
                             {"attributes", cr.design.attributes()},
                             {"block_sizes", cr.design.layout.sizes()}};
  j["orthogonally_blocked"] = pcbd::is_orthogonally_blocked(cr.design);
  j["information_matrix"] = qmat_to_json(m);
  pcbd::ij_form ij = pcbd::as_ij_form(m);
  if (ij.ok)
    j["ij_form"] = ordered_json{{"alpha", ij.alpha.str()}, {"beta", ij.beta.str()}};
  else
    j["ij_form"] = nullptr;
  j["eigenvalues"] = eigenvalues_to_json(m);
  j["criteria"] = criteria_to_json(m);
  if (!cr.descriptor.claims.empty()) {
    pcbd::certification_report rep = pcbd::certify(cr);
    j["claims"] = checks_to_json(rep.checks);
    j["all_exact"] = rep.all_exact;
    j["certified"] = rep.certified;
  }
  emit(j);
  return 0;
}

ordered_json oracle_to_json(const pcbd::oracle_result& res, const std::vector<int>& sizes) {
  ordered_json j;
  j["criterion"] = pcbd::criterion_name(res.criterion);
  j["candidates"] = res.candidates;
  j["evaluated"] = res.evaluated;
  j["optima"] = res.optima;
  j["optimum"] = value_to_json(res.best);
  j["witness"] = ordered_json{{"block_sizes", sizes}, {"rows", imat_to_json(res.best_design)}};
  return j;
}

int run_certify(const std::string& file, const construct_flags& flags,
                const std::string& oracle_criterion, unsigned long long budget,
                bool include_zero) {
  pcbd::construction_result cr;
  ordered_json source;
  if (!file.empty() && flags.any())
    throw pcbd::validation_error("give either a design file or construction flags, not both");
  if (!file.empty()) {
    cr = pcbd::load_design_with_provenance(file);
    source = ordered_json{{"file", file}};
  } else if (flags.any()) {
    cr = pcbd::construct(flags.to_params());
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : flags.to_manifest()) params[key] = value;
    source = ordered_json{{"constructed", params}};
  } else {
    throw pcbd::validation_error("certify needs a design file or construction flags");
  }

  pcbd::qmat m = pcbd::information_matrix(cr.design);
  pcbd::certification_report rep = pcbd::certify(cr);

  ordered_json j;
  j["format"] = "pcbd-certificate";
  j["toolkit_version"] = pcbd::toolkit_version;
  j["source"] = source;
  j["provenance"] = pcbd::descriptor_to_json(cr.descriptor);
  j["design"] = ordered_json{{"pairs", cr.design.pairs()},
                             {"attributes", cr.design.attributes()},
                             {"block_sizes", cr.design.layout.sizes()},
                             {"orthogonally_blocked", rep.orthogonally_blocked}};
  j["information_matrix"] = qmat_to_json(m);
  if (rep.measured_alpha)
    j["measured_ij"] =
        ordered_json{{"alpha", rep.measured_alpha->str()}, {"beta", rep.measured_beta->str()}};
  else
    j["measured_ij"] = nullptr;
  j["claims"] = checks_to_json(rep.checks);
  j["criteria"] = criteria_to_json(m);
  if (!rep.checks.empty()) {
    j["all_exact"] = rep.all_exact;
    j["certified"] = rep.certified;
  }
  if (!oracle_criterion.empty()) {
    pcbd::oracle_options opt;
    opt.criterion = pcbd::parse_criterion(oracle_criterion);
    opt.budget = budget;
    opt.include_zero = include_zero;
    auto t0 = std::chrono::steady_clock::now();
    pcbd::oracle_comparison cmp = pcbd::compare_to_oracle(cr.design, opt);
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    ordered_json oj = oracle_to_json(cmp.oracle, cr.design.layout.sizes());
    oj["design_value"] = value_to_json(cmp.design_value);
    oj["verdict"] = cmp.verdict;
    if (cmp.exact_gap) oj["exact_gap"] = cmp.exact_gap->str();
    oj["approx_gap"] = cmp.approx_gap;
    j["oracle"] = oj;
    std::fprintf(stderr, "oracle: %llu candidates in %.3f s\n",
                 (unsigned long long)cmp.oracle.candidates, dt.count());
  }
  emit(j);
  return 0;
}

int run_oracle(const std::optional<int>& n, const std::optional<int>& k,
               const std::string& blocks, const std::string& criterion, bool include_zero,
               unsigned long long budget, const std::string& design_file,
               const std::string& out) {
  pcbd::oracle_options opt;
  opt.criterion = pcbd::parse_criterion(criterion);
  opt.include_zero = include_zero;
  opt.budget = budget;

  ordered_json j;
  j["format"] = "pcbd-oracle";
  j["toolkit_version"] = pcbd::toolkit_version;
  auto t0 = std::chrono::steady_clock::now();
  if (!design_file.empty()) {
    if (n || k || !blocks.empty())
      throw pcbd::validation_error("--design replaces --n, --k and --blocks");
    pcbd::blocked_design d = pcbd::load_design(design_file);
    pcbd::oracle_comparison cmp = pcbd::compare_to_oracle(d, opt);
    j["pairs"] = d.pairs();
    j["attributes"] = d.attributes();
    j["block_sizes"] = d.layout.sizes();
    j["include_zero"] = opt.include_zero || !d.is_pure();
    ordered_json oj = oracle_to_json(cmp.oracle, d.layout.sizes());
    for (auto& [key, value] : oj.items()) j[key] = value;
    j["design"] = ordered_json{{"file", design_file},
                               {"value", value_to_json(cmp.design_value)},
                               {"verdict", cmp.verdict}};
    if (cmp.exact_gap) j["design"]["exact_gap"] = cmp.exact_gap->str();
    j["design"]["approx_gap"] = cmp.approx_gap;
  } else {
    if (!n || !k || blocks.empty())
      throw pcbd::validation_error("oracle needs --n, --k and --blocks (or --design FILE)");
    std::vector<int> sizes = parse_int_list(blocks, "--blocks");
    pcbd::oracle_result res = pcbd::brute_force_best(*n, *k, sizes, opt);
    j["pairs"] = *n;
    j["attributes"] = *k;
    j["block_sizes"] = sizes;
    j["include_zero"] = opt.include_zero;
    ordered_json oj = oracle_to_json(res, sizes);
    for (auto& [key, value] : oj.items()) j[key] = value;
  }
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  std::fprintf(stderr, "oracle: wall time %.3f s\n", dt.count());
  const std::string payload = j.dump(2) + "\n";
  if (!out.empty()) {
    pcbd::write_text_file(out, payload);
    std::map<std::string, std::string> params{{"criterion", criterion}};
    if (!design_file.empty()) params["design"] = design_file;
    if (n) params["n"] = std::to_string(*n);
    if (k) params["k"] = std::to_string(*k);
    if (!blocks.empty()) params["blocks"] = blocks;
    if (include_zero) params["include_zero"] = "true";
    params["budget"] = std::to_string(budget);
    std::vector<std::string> inputs;
    if (!design_file.empty()) inputs.push_back(design_file);
    pcbd::write_manifest(out, "oracle", params, inputs);
    std::cerr << "wrote " << out << " and " << out << ".manifest.json\n";
  } else {
    std::cout << payload;
  }
  return 0;
}

int run_hadamard(int order, bool do_normalize, const std::string& out) {
  pcbd::imat h = pcbd::hadamard(order);
  if (do_normalize) h = pcbd::normalize(h);
  std::ostringstream ss;
  for (int i = 0; i < h.rows(); ++i) {
    for (int j = 0; j < h.cols(); ++j) ss << (j ? "," : "") << h(i, j);
    ss << "\n";
  }
  if (!out.empty()) {
    pcbd::write_text_file(out, ss.str());
    std::map<std::string, std::string> params{{"order", std::to_string(order)}};
    if (do_normalize) params["normalize"] = "true";
    pcbd::write_manifest(out, "hadamard", params, {});
    std::cerr << "wrote " << out << " and " << out << ".manifest.json\n";
  } else {
    std::cout << ss.str();
  }
  return 0;
}

int run_simulate(const std::string& design_file, const std::string& beta,
                 const std::string& gamma, double sigma, int reps,
                 unsigned long long seed, const std::string& out) {
  pcbd::blocked_design d = pcbd::load_design(design_file);
  pcbd::model_params mp;
  mp.beta = parse_double_list(beta, "--beta");
  mp.gamma = parse_double_list(gamma, "--gamma");
  mp.sigma = sigma;
  mp.seed = seed;
  pcbd::simulation_summary sum = pcbd::simulate(d, mp, reps);

  ordered_json j;
  j["format"] = "pcbd-simulate";
  j["toolkit_version"] = pcbd::toolkit_version;
  j["design_file"] = design_file;
  j["design"] = ordered_json{{"pairs", d.pairs()},
                             {"attributes", d.attributes()},
                             {"block_sizes", d.layout.sizes()}};
  j["beta"] = mp.beta;
  j["gamma"] = mp.gamma;
  j["sigma"] = sigma;
  j["reps"] = sum.reps;
  j["seed"] = seed;
  j["mean_estimate"] = sum.mean_estimate;
  j["max_abs_bias"] = sum.max_abs_bias;
  j["empirical_covariance"] = dmat_to_json(sum.empirical_covariance);
  j["target_covariance"] = dmat_to_json(sum.target_covariance);
  j["rel_frobenius"] = sum.rel_frobenius;
  const std::string payload = j.dump(2) + "\n";
  if (!out.empty()) {
    pcbd::write_text_file(out, payload);
    std::map<std::string, std::string> params{
        {"design", design_file}, {"beta", beta},           {"gamma", gamma},
        {"sigma", std::to_string(sigma)}, {"reps", std::to_string(reps)},
        {"seed", std::to_string(seed)}};
    pcbd::write_manifest(out, "simulate", params, {design_file});
    std::cerr << "wrote " << out << " and " << out << ".manifest.json\n";
  } else {
    std::cout << payload;
  }
  return 0;
}

int run_catalog(bool as_json) {
  const auto methods = pcbd::catalog();
  if (as_json) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : methods)
      arr.push_back(ordered_json{{"method", m.method},
                                 {"parameters", m.parameters},
                                 {"description", m.description},
                                 {"constraints", m.constraints},
                                 {"hadamard_orders", m.hadamard_orders},
                                 {"optimality", m.optimality}});
    emit(arr);
    return 0;
  }
  for (const auto& m : methods) {
    std::printf("method %2d  %-24s %s\n", m.method, m.parameters.c_str(),
                m.description.c_str());
    std::printf("           optimality: %s\n", m.optimality.c_str());
    std::printf("           constraints: %s\n", m.constraints.c_str());
    std::printf("           Hadamard orders: %s\n\n", m.hadamard_orders.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paired-comparison block design toolkit"};
  app.set_version_flag("--version", pcbd::toolkit_version);
  app.require_subcommand(0, 1);

  auto* c_construct = app.add_subcommand("construct", "build a design by method number");
  construct_flags cf;
  add_construct_flags(c_construct, cf);
  std::string c_format = "csv", c_out;
  bool c_json = false;
  c_construct->add_option("--format", c_format, "output format")
      ->check(CLI::IsMember({"csv", "json", "pairs"}));
  c_construct->add_option("--out", c_out, "write to FILE (with FILE.manifest.json)");
  c_construct->add_flag("--json", c_json, "print the JSON document regardless of --format");

  auto* c_verify = app.add_subcommand("verify", "recompute everything a design file implies");
  std::string v_file;
  c_verify->add_option("file", v_file, "design file (.csv or .json)")->required();

  auto* c_certify = app.add_subcommand("certify", "check a design's claims and print a certificate");
  std::string ce_file, ce_oracle;
  unsigned long long ce_budget = 1ull << 22;
  bool ce_zero = false;
  construct_flags ce_flags;
  c_certify->add_option("file", ce_file, "design file (.csv or .json)");
  add_construct_flags(c_certify, ce_flags);
  c_certify->add_option("--oracle", ce_oracle,
                        "also run the exhaustive search for this criterion (D, A, E, trace)");
  c_certify->add_option("--budget", ce_budget, "candidate budget for --oracle");
  c_certify->add_flag("--include-zero", ce_zero, "let oracle columns carry zero entries");

  auto* c_oracle = app.add_subcommand("oracle", "exhaustive search over canonical designs");
  std::optional<int> o_n, o_k;
  std::string o_blocks, o_criterion = "D", o_design, o_out;
  bool o_zero = false;
  unsigned long long o_budget = 1ull << 22;
  c_oracle->add_option("--n", o_n, "number of pairs N");
  c_oracle->add_option("--k", o_k, "number of attributes K");
  c_oracle->add_option("--blocks", o_blocks, "block sizes, comma separated");
  c_oracle->add_option("--criterion", o_criterion, "D, A, E or trace");
  c_oracle->add_flag("--include-zero", o_zero, "allow zero entries in candidate columns");
  c_oracle->add_option("--budget", o_budget, "refuse searches above this many candidates");
  c_oracle->add_option("--design", o_design, "compare this design file against the optimum");
  c_oracle->add_option("--out", o_out, "write the result to FILE");

  auto* c_hadamard = app.add_subcommand("hadamard", "emit a Hadamard matrix as CSV");
  int h_order = 0;
  bool h_normalize = false;
  std::string h_out;
  c_hadamard->add_option("--order", h_order, "matrix order")->required();
  c_hadamard->add_flag("--normalize", h_normalize, "normalize first row and column to +1");
  c_hadamard->add_option("--out", h_out, "write to FILE");

  auto* c_simulate = app.add_subcommand("simulate", "Monte Carlo check of the estimator");
  std::string s_design, s_beta, s_gamma, s_out;
  double s_sigma = 1.0;
  int s_reps = 10000;
  unsigned long long s_seed = 0;
  c_simulate->add_option("--design", s_design, "design file")->required();
  c_simulate->add_option("--beta", s_beta, "true attribute effects, comma separated")->required();
  c_simulate->add_option("--gamma", s_gamma, "block effects, comma separated")->required();
  c_simulate->add_option("--sigma", s_sigma, "noise standard deviation");
  c_simulate->add_option("--reps", s_reps, "number of replications");
  c_simulate->add_option("--seed", s_seed, "random seed");
  c_simulate->add_option("--out", s_out, "write the summary to FILE");

  auto* c_catalog = app.add_subcommand("catalog", "list all construction methods");
  bool cat_json = false;
  c_catalog->add_flag("--json", cat_json, "print as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ExtrasError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 64;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 64;
  }

  try {
    if (c_construct->parsed()) return run_construct(cf, c_format, c_out, c_json);
    if (c_verify->parsed()) return run_verify(v_file);
    if (c_certify->parsed())
      return run_certify(ce_file, ce_flags, ce_oracle, ce_budget, ce_zero);
    if (c_oracle->parsed())
      return run_oracle(o_n, o_k, o_blocks, o_criterion, o_zero, o_budget, o_design, o_out);
    if (c_hadamard->parsed()) return run_hadamard(h_order, h_normalize, h_out);
    if (c_simulate->parsed())
      return run_simulate(s_design, s_beta, s_gamma, s_sigma, s_reps, s_seed, s_out);
    if (c_catalog->parsed()) return run_catalog(cat_json);
  } catch (const pcbd::unsupported_order_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const pcbd::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const pcbd::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
