#include "sdt/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "sdt/dims.hpp"
#include "sdt/parallel.hpp"
#include "sdt/perm.hpp"
#include "sdt/report.hpp"

namespace sdt {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

std::uint64_t budget_from_environment() {
  if (const char* env = std::getenv("SDT_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultBudget;
}

namespace {

std::map<int, int> size_profile(const ConjClassReport& report) {
  std::map<int, int> profile;
  for (const auto& cls : report.classes) ++profile[static_cast<int>(cls.members.size())];
  return profile;
}

std::map<int, int> expected_size_profile(int n) {
  if (n % 2 == 0) return {{1, 2}, {2, 2 * n - 1}, {2 * n, 2}};
  return n == 2 ? std::map<int, int>{} : std::map<int, int>{{1, 4}, {2, 2 * n - 2}, {n, 4}};
}

}  // namespace

VerifyReport verify(int n, int m, std::uint64_t budget, unsigned jobs) {
  VerifyReport report;
  report.n = n;
  report.m = m;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const SemiDihedral group(n);
  const int N = group.rotation_order();
  const auto elems = group.elements();
  const auto classes = conjugacy_classes(n);
  {
    const bool count_ok = static_cast<int>(classes.classes.size()) == expected_class_count(n);
    const bool sizes_ok = size_profile(classes) == expected_size_profile(n);
    check("conjugacy_classes", count_ok && sizes_ok, std::to_string(classes.classes.size()) + " classes");
  }

  const auto ids = character_ids(n);
  check("character_count", ids.size() == classes.classes.size());
  std::vector<std::vector<CycloInt>> values;
  for (const auto& id : ids) values.push_back(character_values(n, id));
  {
    bool ok = true;
    for (const auto& row : values)
      for (const auto& cls : classes.classes)
        for (const auto& g : cls.members) ok = ok && row[group.index(g)] == row[group.index(cls.representative)];
    check("class_function", ok);
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = 0; j < ids.size(); ++j) {
        const auto ip = char_inner_product(n, ids[i], ids[j]);
        ok = ok && ip.num == CycloInt(N, i == j ? ip.den : BigInt(0));
      }
    check("row_orthonormality", ok);
  }
  {
    bool ok = true;
    BigInt degree_sum = 0;
    for (const auto& id : ids) degree_sum += id.degree() * id.degree();
    for (const auto& g : elems) {
      if (g == SDElement::identity()) continue;
      CycloInt sum = CycloInt::zero(N);
      for (std::size_t i = 0; i < ids.size(); ++i) sum += values[i][group.index(g)] * BigInt(ids[i].degree());
      ok = ok && sum.is_zero();
    }
    check("column_relation", ok);
    check("degree_sum", degree_sum == group.order(), "sum chi(1)^2 = " + degree_sum.str());
  }
  {
    const Permutation ta = embed(n, SDElement::a());
    const Permutation tb = embed(n, SDElement::b());
    Permutation ta_pow(N);
    for (int k = 0; k < N; ++k) ta_pow = compose(ta_pow, ta);
    Permutation ta_2n1(N);
    for (int k = 0; k < 2 * n - 1; ++k) ta_2n1 = compose(ta_2n1, ta);
    bool ok = ta_pow.is_identity() && compose(tb, tb).is_identity() && compose(compose(tb, ta), tb) == ta_2n1;
    for (const auto& g : elems)
      for (const auto& h : elems) ok = ok && embed(n, group.multiply(g, h)) == compose(embed(n, g), embed(n, h));
    check("embedding_homomorphism", ok);
    bool cycles_ok = true;
    for (const auto& g : elems)
      cycles_ok = cycles_ok && static_cast<int>(embed(n, g).cycle_decomposition().count()) == cycle_count_formula(n, g);
    check("cycle_counts", cycles_ok);
  }

  std::map<CharacterId, BigInt> general;
  {
    const DimReport dims = dim_report(n, m);
    check("dimension_identity", dims.total_identity_holds, "sum dim = m^{4n}");
    for (const auto& e : dims.entries) {
      general[e.character] = e.general;
      if (!e.agree)
        report.findings.push_back("closed form for " + e.character.to_string() + " at m=" + std::to_string(m) + " gives " +
                                  (e.closed_form ? e.closed_form->str() : std::string("a non-integer")) +
                                  ", trace formula gives " + e.general.str());
    }
    bool sine_ok = true;
    for (const auto& id : ids)
      if (id.kind == CharacterKind::Psi) sine_ok = sine_ok && odd_sine_sum(n, m, id.param).is_zero();
    check("sine_cancellation", sine_ok);
  }
  {
    bool ok = true;
    for (int h = 1; h < 2 * n; ++h) ok = ok && cosine_vanishing_exists(n, h) == (nu2(h, 2LL * n) < 0);
    check("cosine_vanishing_criterion", ok);
  }

  if (sequence_count(n, m) > budget) {
    report.skipped = {"burnside", "fixed_points", "orbit_stabilizer", "stabilizer_zeta_sums", "orbital_direct_sum",
                      "criterion_equivalence"};
    return report;
  }

  const auto all_orbits = orbits(n, m, budget);
  check("burnside", BigInt(all_orbits.size()) == general.at(CharacterId::linear(0)),
        std::to_string(all_orbits.size()) + " orbits");
  {
    bool ok = true;
    for (const auto& g : elems)
      ok = ok && BigInt(count_fixed_sequences(n, m, g, budget)) ==
                     boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(cycle_count_formula(n, g)));
    check("fixed_points", ok);
  }
  {
    bool ok = true;
    for (const auto& o : all_orbits) ok = ok && o.members.size() * o.stabilizer.size() == static_cast<std::size_t>(group.order());
    check("orbit_stabilizer", ok);
  }
  {
    bool ok = true;
    for (const auto& id : ids) {
      if (id.kind != CharacterKind::Zeta) continue;
      for (const auto& o : all_orbits) {
        const auto ci = cyclic_intersection(group, o.stabilizer);
        const int l = N / std::gcd(N, ci.r);
        const CycloInt sum = stabilizer_char_sum(n, id, o);
        const bool divides = (static_cast<long long>(ci.r) * id.param) % N == 0;
        ok = ok && sum == CycloInt(N, divides ? BigInt(2 * l) : BigInt(0));
      }
    }
    check("stabilizer_zeta_sums", ok);
  }
  {
    bool ok = true;
    for (const auto& id : ids) {
      BigInt total = 0;
      for (const auto& o : all_orbits)
        if (!stabilizer_char_sum(n, id, o).is_zero()) total += orbital_dimension(n, id, o);
      ok = ok && total == general.at(id);
    }
    check("orbital_direct_sum", ok);
  }
  if (m >= 2) {
    std::vector<std::string> mismatches;
    for (const auto& id : ids) {
      if (id.degree() == 1) continue;
      const bool exhaustive = decide_orthogonal_basis(n, m, id, all_orbits, jobs).exists;
      if (exhaustive != predicted_basis(n, id))
        mismatches.push_back(id.to_string() + " (exhaustive " + (exhaustive ? "true" : "false") + ")");
    }
    std::string detail;
    for (const auto& s : mismatches) detail += (detail.empty() ? "mismatch: " : ", ") + s;
    check("criterion_equivalence", mismatches.empty(), detail);
  } else {
    report.skipped.push_back("criterion_equivalence");
  }
  return report;
}

namespace {

Json verify_to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"n", r.n}, {"m", r.m}, {"passed", r.passed()}, {"checks", std::move(checks)},
              {"findings", r.findings}, {"skipped", r.skipped}};
}

std::string verify_to_pretty(const VerifyReport& r) {
  std::ostringstream out;
  out << "verify n=" << r.n << " m=" << r.m << "\n";
  for (const auto& c : r.checks)
    out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  for (const auto& s : r.skipped) out << "  [SKIP] " << s << " (beyond budget)\n";
  for (const auto& f : r.findings) out << "  finding: " << f << "\n";
  return out.str();
}

std::vector<CharacterId> characters_for(int n, const std::string& spec) {
  if (spec.empty()) return {};
  if (spec == "all") return character_ids(n);
  return {parse_character(n, spec)};
}

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::string render(const Json& j) { return j.dump(2) + "\n"; }

std::string produce(const CommandConfig& c) {
  const auto fmt = c.format;
  if (fmt == OutputFormat::Csv && c.subcommand != "table") throw UsageError("csv output is only available for 'table'");
  auto need_m = [&] {
    if (!c.m) throw UsageError("--m is required for '" + c.subcommand + "'");
    if (*c.m < 1) throw UsageError("--m must be >= 1");
    return *c.m;
  };

  if (c.subcommand == "classes") {
    const auto report = conjugacy_classes(c.n);
    return fmt == OutputFormat::Pretty ? to_pretty(report) : render(to_json(report));
  }
  if (c.subcommand == "table") {
    const auto table = character_table(c.n);
    if (fmt == OutputFormat::Csv) return table_to_csv(table);
    return fmt == OutputFormat::Pretty ? to_pretty(table) : render(to_json(table));
  }
  if (c.subcommand == "dims") {
    const auto report = dim_report(c.n, need_m());
    return fmt == OutputFormat::Pretty ? to_pretty(report) : render(to_json(report));
  }
  if (c.subcommand == "orbits") {
    const int m = need_m();
    const auto chars = characters_for(c.n, c.character);
    const auto list = orbits(c.n, m, c.budget);
    return fmt == OutputFormat::Pretty ? orbits_to_pretty(c.n, m, list, chars) : render(orbits_to_json(c.n, m, list, chars));
  }
  if (c.subcommand == "basis") {
    const int m = need_m();
    if (c.character.empty()) throw UsageError("--char is required for 'basis'");
    const auto chars = characters_for(c.n, c.character);
    const auto list = orbits(c.n, m, c.budget);
    std::string pretty;
    Json decisions = Json::array();
    for (const auto& id : chars) {
      const auto decision = decide_orthogonal_basis(c.n, m, id, list, c.jobs);
      const std::optional<bool> predicted = m >= 2 ? std::optional<bool>(predicted_basis(c.n, id)) : std::nullopt;
      pretty += to_pretty(decision, predicted);
      decisions.push_back(to_json(decision, predicted));
    }
    if (fmt == OutputFormat::Pretty) return pretty;
    return render(chars.size() == 1 ? decisions[0] : Json{{"decisions", std::move(decisions)}});
  }
  throw UsageError("unknown subcommand '" + c.subcommand + "'");
}

void emit(const CommandConfig& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + c.output);
  file << text;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate_n(config.n);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  try {
    if (config.subcommand == "verify") {
      if (config.format == OutputFormat::Csv) throw UsageError("csv output is only available for 'table'");
      const int m = config.m.value_or(2);
      if (m < 1) throw UsageError("--m must be >= 1");
      const VerifyReport report = verify(config.n, m, config.budget, config.jobs);
      emit(config, config.format == OutputFormat::Pretty ? verify_to_pretty(report) : render(verify_to_json(report)), out);
      if (!report.passed()) {
        for (const auto& c : report.checks)
          if (!c.passed) err << "verification failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
        return exit_code::verification_failed;
      }
      return exit_code::ok;
    }
    emit(config, produce(config), out);
    return exit_code::ok;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << " (raise with --budget or SDT_BUDGET)\n";
    return exit_code::budget_refused;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::verification_failed;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-dihedral groups SD_{8n}: characters, symmetry-class dimensions and orthogonal *-bases"};
  app.require_subcommand(1);

  CommandConfig config;
  config.budget = budget_from_environment();
  config.jobs = default_jobs();
  std::string format = "json";
  int m = 0;

  struct Spec {
    const char* name;
    const char* help;
    bool has_m;
    bool has_char;
  };
  const Spec specs[] = {
      {"classes", "Conjugacy classes", false, false},
      {"table", "Character table (json, csv or pretty)", false, false},
      {"dims", "Dimensions of all symmetry classes", true, false},
      {"orbits", "Orbits, stabilizers and Delta-bar membership", true, true},
      {"basis", "Orthogonal *-basis decision (predicted and exhaustive)", true, true},
      {"verify", "Run the full invariant suite", true, false},
  };
  std::vector<CLI::App*> subs;
  std::map<CLI::App*, CLI::Option*> m_options;
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--n", config.n, "Group parameter n >= 2 (order 8n)")->required();
    if (spec.has_m) m_options[sub] = sub->add_option("--m", m, "Dimension of the underlying space");
    if (spec.has_char) sub->add_option("--char", config.character, "chi:<i> | zeta:<h> | psi:<h> | all");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--output,-o", config.output, "Output file (default: stdout)");
    sub->add_option("--jobs,-j", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", config.budget, "Maximum number of sequences to enumerate");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  for (CLI::App* sub : subs) {
    if (!sub->parsed()) continue;
    config.subcommand = sub->get_name();
    if (auto it = m_options.find(sub); it != m_options.end() && it->second->count() > 0) config.m = m;
  }
  config.format = format == "csv" ? OutputFormat::Csv : format == "pretty" ? OutputFormat::Pretty : OutputFormat::Json;
  return run(config, out, err);
}

}  // namespace sdt
