#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "abelsnf/cayley.hpp"
#include "abelsnf/config.hpp"
#include "abelsnf/errors.hpp"
#include "abelsnf/json_io.hpp"
#include "abelsnf/predictor.hpp"
#include "abelsnf/reports.hpp"
#include "abelsnf/snf.hpp"
#include "abelsnf/spectrum.hpp"

namespace abelsnf::cli {

namespace {

struct Options {
  std::vector<std::string> groups;
  std::string weights;
  std::string elements;
  std::string combo;
  std::string matrix_file;
  std::string orders;
  std::string preset;
  std::uint64_t prime = 0;
  std::uint64_t max_prime = 0;
  std::size_t pi_index = 0;
  bool pi_index_set = false;
  bool all_pi = false;
  bool check = false;
  bool transforms = false;
  bool local = false;
  bool table = false;
  bool json = false;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::uint32_t k = 0;
  std::uint32_t n_max = 8;
  std::optional<std::uint64_t> cap_dense, cap_spectrum, cap_snf;
  std::optional<std::uint32_t> cap_ncube;
};

Limits effective_limits(const Options& o) {
  Limits limits = limits_from_environment();
  if (o.cap_dense) limits.dense = *o.cap_dense;
  if (o.cap_spectrum) limits.spectrum = *o.cap_spectrum;
  if (o.cap_snf) limits.snf = *o.cap_snf;
  if (o.cap_ncube) limits.ncube = *o.cap_ncube;
  return limits;
}

void add_output_flags(CLI::App* cmd, Options& o) {
  auto* json = cmd->add_flag("--json", o.json, "JSON output (default)");
  auto* table = cmd->add_flag("--table", o.table, "Aligned text table output");
  json->excludes(table);
  cmd->add_option("--cap-dense", o.cap_dense, "Cap on dense matrix dimension");
  cmd->add_option("--cap-spectrum", o.cap_spectrum, "Cap on |G| for spectra and predictions");
  cmd->add_option("--cap-snf", o.cap_snf, "Cap on |G| for the SNF oracle");
  cmd->add_option("--cap-ncube", o.cap_ncube, "Cap on n for n-cube experiments");
}

void add_group_flags(CLI::App* cmd, Options& o, bool multiple = false) {
  if (multiple) {
    cmd->add_option("--group", o.groups, "Group such as 2^3 or 3,4 (repeatable)");
  } else {
    cmd->add_option("--group", o.groups, "Group such as 2^3 or 3,4")->expected(1);
  }
  auto* w = cmd->add_option("--weights", o.weights, "Union of weight classes, e.g. 1,3");
  auto* e = cmd->add_option("--elements", o.elements, "Explicit connecting set, e.g. (1,0),(0,2)");
  w->excludes(e);
  cmd->add_option("--combo", o.combo, "Integer combination such as 2*W1-3*I (A = the given set)");
}

GroupSpec single_group(const Options& o) {
  if (o.groups.size() != 1) throw InputError("exactly one --group is required");
  return parse_group_spec(o.groups.front());
}

std::optional<ConnectingSet> selected_set(const GroupSpec& spec, const Options& o) {
  if (!o.weights.empty()) {
    auto w = parse_weights(spec, o.weights);
    return ConnectingSet::from_weights(spec, w);
  }
  if (!o.elements.empty()) {
    auto elements = parse_elements(spec, o.elements);
    return ConnectingSet::from_elements(spec, elements);
  }
  return std::nullopt;
}

MatrixCombo selected_combo(const GroupSpec& spec, const Options& o) {
  auto set = selected_set(spec, o);
  if (!o.combo.empty()) return parse_combo(spec, o.combo, set ? &*set : nullptr);
  if (set) return MatrixCombo::adjacency(*set);
  throw InputError("one of --weights, --elements or --combo is required");
}

PiMode pi_mode(const Options& o) {
  if (o.all_pi) return PiMode::all();
  if (o.pi_index_set) return PiMode::at(o.pi_index);
  return PiMode::least();
}

std::string value_string(const CyclotomicInteger& v) {
  if (auto i = v.as_integer()) return i->get_str();
  std::ostringstream s;
  s << '[';
  for (std::size_t j = 0; j < v.coeffs().size(); ++j) s << (j ? "," : "") << v.coeffs()[j];
  s << ']';
  return s.str();
}

void print_rows(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(widths[i])) << row[i];
      if (i + 1 < row.size()) out << "  ";
    }
    out << '\n';
  }
}

std::string power_string(const std::map<std::uint32_t, std::uint64_t>& counts) {
  std::ostringstream s;
  s << '{';
  bool first = true;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    s << (first ? "" : ", ") << it->first << ':' << it->second;
    first = false;
  }
  s << '}';
  return s.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_spectrum(const Options& o, std::ostream& out) {
  const auto spec = single_group(o);
  const auto limits = effective_limits(o);
  const auto combo = selected_combo(spec, o);
  const auto spectrum = spectrum_via_characters(spec, combo, limits.spectrum);
  if (o.table) {
    std::vector<std::vector<std::string>> rows{{"eigenvalue", "multiplicity"}};
    for (const auto& e : spectrum.entries()) rows.push_back({value_string(e.value), std::to_string(e.multiplicity)});
    print_rows(out, rows);
    return kOk;
  }
  Json j = {{"group", spec.to_string()}, {"combo", combo.describe(spec)}, {"spectrum", to_json(spectrum)}};
  if (spectrum.is_integral()) {
    Json map = Json::object();
    for (const auto& [value, mult] : spectrum.integer_map()) map[value.get_str()] = mult;
    j["integer_spectrum"] = map;
  }
  emit(out, j);
  return kOk;
}

IntegerMatrix selected_matrix(const Options& o, const Limits& limits, Json& meta) {
  if (!o.matrix_file.empty()) {
    std::ifstream in(o.matrix_file);
    if (!in) throw InputError("cannot open matrix file '" + o.matrix_file + "'");
    meta["matrix_file"] = o.matrix_file;
    return read_matrix_text(in);
  }
  const auto spec = single_group(o);
  const auto combo = selected_combo(spec, o);
  if (spec.size() > limits.snf) {
    throw ResourceError("|G| = " + std::to_string(spec.size()) + " exceeds SNF oracle cap " +
                        std::to_string(limits.snf));
  }
  meta["group"] = spec.to_string();
  meta["combo"] = combo.describe(spec);
  return combo_matrix(spec, combo, limits.dense);
}

int cmd_snf(const Options& o, std::ostream& out) {
  const auto limits = effective_limits(o);
  Json j = Json::object();
  const auto m = selected_matrix(o, limits, j);
  const auto snf = smith_normal_form(m, o.transforms, limits.dense);
  if (o.table) {
    std::vector<std::vector<std::string>> rows{{"i", "S(i,i)"}};
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) rows.push_back({std::to_string(i + 1), snf.diagonal[i].get_str()});
    print_rows(out, rows);
    return kOk;
  }
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["snf"] = to_json(snf);
  emit(out, j);
  return kOk;
}

int cmd_smith_group(const Options& o, std::ostream& out) {
  const auto limits = effective_limits(o);
  Json j = Json::object();
  const auto m = selected_matrix(o, limits, j);
  const auto group = cokernel_structure(m, limits.dense);
  if (o.table) {
    out << group.to_string() << '\n';
    return kOk;
  }
  j["smith_group"] = to_json(group);
  emit(out, j);
  return kOk;
}

int cmd_critical_group(const Options& o, std::ostream& out, std::ostream& err) {
  const auto spec = single_group(o);
  const auto limits = effective_limits(o);
  const auto set = selected_set(spec, o);
  if (!set) throw InputError("critical-group needs --weights or --elements");
  if (spec.size() > limits.snf) throw ResourceError("|G| exceeds SNF oracle cap");
  const auto group = critical_group(spec, *set, limits.dense);
  Json j = {{"group", spec.to_string()},
            {"set", set->describe(spec)},
            {"critical_group", group.torsion_string()},
            {"free_rank", group.free_rank()},
            {"structure", to_json(group)}};
  const bool connected = is_connected(spec, *set);
  j["connected"] = connected;
  if (!connected) {
    err << "warning: Cayley graph is disconnected; Matrix-Tree check skipped\n";
    j["matrix_tree_check"] = "skipped: disconnected";
  } else if (!set->is_symmetric()) {
    j["matrix_tree_check"] = "skipped: connecting set is not symmetric";
  } else {
    const auto trees = spanning_tree_count(spec, *set, limits.dense);
    j["spanning_trees"] = to_json(trees);
    j["matrix_tree_check"] = trees == group.torsion_order();
  }
  if (o.table) {
    out << group.torsion_string() << '\n';
    return kOk;
  }
  emit(out, j);
  return kOk;
}

int cmd_predict(const Options& o, std::ostream& out) {
  const auto spec = single_group(o);
  const auto limits = effective_limits(o);
  const auto combo = selected_combo(spec, o);
  if (o.prime == 0) throw InputError("--prime is required");
  const auto predicted = predict_elementary_divisors(spec, combo, o.prime, pi_mode(o), limits.spectrum);
  Json j = {{"group", spec.to_string()}, {"combo", combo.describe(spec)}, {"predicted", to_json(predicted)}};
  std::optional<bool> match;
  if (o.check) {
    if (spec.size() > limits.snf) throw ResourceError("|G| exceeds SNF oracle cap");
    const auto oracle = elementary_divisors_at(combo_matrix(spec, combo, limits.dense), o.prime,
                                               o.local ? DivisorMethod::LocalModPk : DivisorMethod::FullSnf,
                                               limits.dense);
    j["oracle"] = to_json(oracle);
    match = profiles_match(predicted, oracle);
    j["match"] = *match;
  }
  if (o.table) {
    std::vector<std::vector<std::string>> rows{{"p^i", "predicted"}};
    for (auto it = predicted.per_power.rbegin(); it != predicted.per_power.rend(); ++it) {
      rows.push_back({std::to_string(o.prime) + "^" + std::to_string(it->first), std::to_string(it->second)});
    }
    rows.push_back({"0", std::to_string(predicted.infinite_count)});
    print_rows(out, rows);
    if (match) out << (*match ? "oracle: MATCH" : "oracle: MISMATCH") << '\n';
  } else {
    emit(out, j);
  }
  return match && !*match ? kMismatch : kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyGrid grid;
  grid.limits = effective_limits(o);
  grid.pi_mode = pi_mode(o);
  grid.method = o.local ? DivisorMethod::LocalModPk : DivisorMethod::FullSnf;
  grid.primes = primes_up_to(o.max_prime == 0 ? 50 : o.max_prime);
  std::vector<GroupSpec> groups;
  if (o.preset == "standard") {
    groups = standard_verification_groups();
  } else if (!o.preset.empty()) {
    throw InputError("unknown preset '" + o.preset + "' (known: standard)");
  }
  for (const auto& g : o.groups) groups.push_back(parse_group_spec(g));
  if (groups.empty()) throw InputError("verify needs --group or --preset");
  const bool explicit_combo = !o.combo.empty() || !o.weights.empty() || !o.elements.empty();
  for (const auto& spec : groups) {
    if (explicit_combo) {
      grid.cases.push_back({spec, selected_combo(spec, o)});
    } else {
      for (auto& c : weight_class_cases(spec)) grid.cases.push_back(std::move(c));
    }
  }
  const auto reports = run_verification(grid);
  const bool any_mismatch = std::any_of(reports.begin(), reports.end(),
                                        [](const auto& r) { return r.status == VerifyStatus::Mismatch; });
  if (o.table) {
    std::vector<std::vector<std::string>> rows{{"group", "combo", "p", "status", "predicted", "oracle"}};
    for (const auto& r : reports) {
      std::string predicted = r.predicted ? power_string(r.predicted->per_power) + " zero:" +
                                                std::to_string(r.predicted->infinite_count)
                                          : "-";
      std::string oracle = r.oracle ? power_string(r.oracle->multiplicities) + " zero:" +
                                          std::to_string(r.oracle->zero_count)
                                    : "-";
      std::string status = to_string(r.status);
      if (r.status == VerifyStatus::Skipped) status += "(" + r.reason + ")";
      rows.push_back({r.group, r.combo, std::to_string(r.p), status, predicted, oracle});
    }
    print_rows(out, rows);
  } else {
    emit(out, verification_summary(reports));
  }
  return any_mismatch ? kMismatch : kOk;
}

int cmd_ncube(const Options& o, std::ostream& out) {
  if (o.n == 0) throw InputError("--n is required");
  emit(out, ncube_report(o.n, effective_limits(o), o.max_prime == 0 ? 13 : o.max_prime));
  return kOk;
}

int cmd_hamming(const Options& o, std::ostream& out) {
  if (o.n == 0 || o.q == 0) throw InputError("--n and --q are required");
  emit(out, hamming_report(o.n, o.q, o.k, effective_limits(o), o.max_prime == 0 ? 50 : o.max_prime));
  return kOk;
}

int cmd_cartesian(const Options& o, std::ostream& out) {
  std::string text = o.orders;
  if (text.empty() && o.groups.size() == 1) text = o.groups.front();
  if (text.empty()) throw InputError("--orders is required");
  const auto spec = parse_group_spec(text);
  emit(out, cartesian_report(spec.orders(), effective_limits(o), o.max_prime == 0 ? 13 : o.max_prime));
  return kOk;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  const auto rows = conjecture_table(o.n_max, o.local ? DivisorMethod::LocalModPk : DivisorMethod::FullSnf,
                                     effective_limits(o));
  if (o.table) {
    out << "evidence table (open conjecture; no verdict)\n";
    std::vector<std::vector<std::string>> text{{"n", "i", "snf_mult", "spectral_count", "agrees"}};
    for (const auto& r : rows) {
      text.push_back({std::to_string(r.n), std::to_string(r.i), std::to_string(r.snf_mult),
                      std::to_string(r.spectral_count), r.agrees ? "yes" : "no"});
    }
    print_rows(out, text);
  } else {
    emit(out, conjecture_report(rows));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra, Smith normal forms and critical groups of abelian Cayley graphs"};
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues via character sums");
  add_group_flags(spectrum, o);
  add_output_flags(spectrum, o);

  auto* snf = app.add_subcommand("snf", "Smith normal form");
  add_group_flags(snf, o);
  snf->add_option("--matrix", o.matrix_file, "Plain-text matrix file ('rows cols' header)");
  snf->add_flag("--transforms", o.transforms, "Also report unimodular P, Q with P*M*Q = S");
  add_output_flags(snf, o);

  auto* smith = app.add_subcommand("smith-group", "Cokernel of the matrix");
  add_group_flags(smith, o);
  smith->add_option("--matrix", o.matrix_file, "Plain-text matrix file");
  add_output_flags(smith, o);

  auto* critical = app.add_subcommand("critical-group", "Torsion of the Laplacian cokernel");
  add_group_flags(critical, o);
  add_output_flags(critical, o);

  auto* predict = app.add_subcommand("predict", "Elementary divisors at p from the spectrum");
  add_group_flags(predict, o);
  predict->add_option("--prime", o.prime, "Prime p not dividing |G|")->required();
  auto* all_pi = predict->add_flag("--all-pi", o.all_pi, "Check every prime over p");
  predict->add_option("--pi-index", o.pi_index, "Use the i-th prime over p")
      ->each([&](const std::string&) { o.pi_index_set = true; })
      ->excludes(all_pi);
  predict->add_flag("--check", o.check, "Compare against the SNF oracle");
  predict->add_flag("--local", o.local, "Oracle via elimination mod p^N");
  add_output_flags(predict, o);

  auto* verify = app.add_subcommand("verify", "Prediction vs. SNF oracle over a grid");
  add_group_flags(verify, o, true);
  verify->add_option("--preset", o.preset, "Named grid (standard)");
  verify->add_option("--max-prime", o.max_prime, "Largest prime tested (default 50)");
  verify->add_flag("--all-pi", o.all_pi, "Check every prime over p");
  verify->add_flag("--local", o.local, "Oracle via elimination mod p^N");
  add_output_flags(verify, o);

  auto* ncube = app.add_subcommand("ncube-report", "n-cube spectra, divisors and critical group");
  ncube->add_option("--n", o.n, "Dimension")->required();
  ncube->add_option("--max-prime", o.max_prime, "Largest odd prime reported (default 13)");
  add_output_flags(ncube, o);

  auto* hamming = app.add_subcommand("hamming", "Distance-k matrix of H(n, q)");
  hamming->add_option("--n", o.n, "Length")->required();
  hamming->add_option("--q", o.q, "Alphabet size")->required();
  hamming->add_option("--k", o.k, "Distance")->required();
  hamming->add_option("--max-prime", o.max_prime, "Largest prime reported (default 50)");
  add_output_flags(hamming, o);

  auto* cartesian = app.add_subcommand("cartesian", "Cartesian product of complete graphs");
  cartesian->add_option("--orders,--group", o.orders, "Factor orders, e.g. 2,3,4");
  cartesian->add_option("--max-prime", o.max_prime, "Largest prime reported (default 13)");
  add_output_flags(cartesian, o);

  auto* conjecture = app.add_subcommand("conjecture", "2-adic evidence table for the n-cube");
  conjecture->add_option("--n-max", o.n_max, "Largest n (default 8)");
  conjecture->add_flag("--local", o.local, "Oracle via elimination mod 2^N");
  add_output_flags(conjecture, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (snf->parsed()) return cmd_snf(o, out);
    if (smith->parsed()) return cmd_smith_group(o, out);
    if (critical->parsed()) return cmd_critical_group(o, out, err);
    if (predict->parsed()) return cmd_predict(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (ncube->parsed()) return cmd_ncube(o, out);
    if (hamming->parsed()) return cmd_hamming(o, out);
    if (cartesian->parsed()) return cmd_cartesian(o, out);
    if (conjecture->parsed()) return cmd_conjecture(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const HypothesisError& e) {
    err << "hypothesis violation: " << e.what() << '\n';
    return kHypothesisError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceError;
  }
  return kInputError;
}

}  // namespace abelsnf::cli
