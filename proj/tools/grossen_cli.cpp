#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grossen/acceptance.hpp"
#include "grossen/serialize.hpp"

using namespace grossen;

namespace {

// Usage problems (bad flags, malformed modulus, non-fundamental delta) exit 2;
// mismatches found by a verification exit 1.
constexpr int kOk = 0, kMismatch = 1, kUsage = 2;

struct Outcome {
  Json body;
  int code = kOk;
};

const std::vector<std::string> kTables = {"deg2", "deg3", "quadodd", "quadeven", "quade3"};

std::vector<int> parse_criteria(const std::string& which) {
  if (which == "all") return all_criteria();
  std::vector<int> ids;
  std::stringstream ss(which);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int id = 0;
    try {
      id = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != tok.size()) throw std::invalid_argument("verify: expected 'all' or ids like 1,3,9");
    ids.push_back(id);
  }
  return ids;
}

Grossenchar make_character(const FieldE& E, const RunConfig& c) {
  QIdeal m = parse_modulus(E, c.modulus);
  EtaQuery q;
  if (c.order > 0) q.order_equals = c.order;
  q.weight = c.ell;
  auto etas = enumerate_eta(E, m, q);
  if (etas.empty()) throw std::runtime_error("no eta on this modulus restricts to chi_E with the weight condition");
  if (c.eta_index < 0 || c.eta_index >= static_cast<long>(etas.size()))
    throw std::invalid_argument("--eta out of range: " + std::to_string(etas.size()) + " candidates");
  return build(E, m, c.ell, etas[c.eta_index]);
}

Json character_summary(const Grossenchar& psi) {
  Json j = to_json(psi);
  j["primitive"] = conductor_of(psi.eta()) == psi.modulus();
  j["value_field_degree"] = std::to_string(value_field_degree(psi));
  try {
    j["rationality_field"] = to_json(rationality_field(psi));
  } catch (const std::domain_error&) {
    j["rationality_field"] = nullptr;
  }
  return j;
}

Json table_json(const std::string& name, const RunConfig& c) {
  Json j;
  j["table"] = name;
  if (name == "deg2" || name == "deg3") {
    ClassificationTables t = classification_tables(c.conductor_norm_bound);
    int degree = name == "deg2" ? 2 : 3;
    const auto& entries = degree == 2 ? t.quadratic : t.cubic;
    j["entries"] = Json::array();
    for (const auto& e : entries) j["entries"].push_back(to_json(e));
    j["rows"] = Json::array();
    for (const auto& r : t.rows)
      if (r.degree == degree) j["rows"].push_back(to_json(r));
    return j;
  }
  SurveyResult s = survey_quadratic_modulus(name == "quade3" ? 3 : 2, c.ell);
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    bool odd = r.delta_E % 2 != 0;
    if (name == "quadodd" && !odd) continue;
    if (name == "quadeven" && odd) continue;
    rows.push_back(to_json(r));
  }
  j["rows"] = rows;
  j["rejections"] = Json::array();
  for (const auto& r : s.rejections)
    j["rejections"].push_back({{"delta_E", std::to_string(r.delta_E)}, {"ell", std::to_string(r.ell)}, {"reason", r.reason}});
  if (name != "quade3") {
    j["skipped"] = Json::array();
    for (long d : s.skipped) j["skipped"].push_back(std::to_string(d));
  }
  return j;
}

Outcome execute(const RunConfig& c) {
  Outcome out;
  const std::string& cmd = c.command;
  if (cmd == "verify") {
    out.body = Json::array();
    for (const auto& r : run_acceptance(parse_criteria(c.subcommand))) {
      out.body.push_back({{"id", std::to_string(r.id)},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"seconds", r.seconds},
                          {"detail", r.detail}});
      if (!r.pass) out.code = kMismatch;
    }
    return out;
  }
  if (cmd == "table") {
    out.body = table_json(c.subcommand, c);
    return out;
  }
  FieldE E(c.delta);
  if (cmd == "classgroup") {
    out.body = to_json(class_group(E));
  } else if (cmd == "units") {
    out.body = to_json(units_structure(E, parse_modulus(E, c.modulus)));
  } else if (cmd == "chars") {
    UnitsStructure S = units_structure(E, parse_modulus(E, c.modulus));
    DirichletChar chi = kronecker_char(E.delta());
    auto mu = E.roots_of_unity();
    long w = E.unit_count();
    out.body = Json::array();
    for (const auto& eta : all_characters(S)) {
      if (c.order > 0 && eta.order() != c.order) continue;
      bool weight_ok = true;
      for (long k = 0; k < w; ++k) weight_ok = weight_ok && eta(mu[k]) == Angle(-c.ell * k, w);
      Json j = to_json(eta);
      j["conductor"] = to_json(conductor_of(eta));
      j["restricts_to_chi_E"] = dirichlet_equal(restrict_to_Z(eta), chi);
      j["weight_compatible"] = weight_ok;
      out.body.push_back(j);
    }
  } else if (cmd == "gross") {
    Grossenchar psi = make_character(E, c);
    if (c.subcommand == "build") {
      out.body = character_summary(psi);
    } else {
      QIdeal a = parse_modulus(E, c.ideal);
      AlgElem v = psi.evaluate(a);
      out.body["ideal"] = to_json(a);
      out.body["norm"] = to_json(a.norm());
      out.body["exact"] = to_json(v);
      out.body["value"] = to_json(psi.algebra().embed(v));
    }
  } else if (cmd == "qexp") {
    Grossenchar psi = make_character(E, c);
    CMForm f = q_expansion(psi, c.bound);
    HeckeReport rep = hecke_verify(f);
    out.body = to_json(f);
    out.body["hecke"] = to_json(rep);
    if (!rep.ok) out.code = kMismatch;
  } else {
    throw std::invalid_argument("unknown command '" + cmd + "'");
  }
  return out;
}

void emit(const Json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  bool print_config = false;
  std::string config_file;

  CLI::App app{"Grossencharacters of imaginary quadratic fields and their CM newforms"};
  app.require_subcommand(1);
  app.add_option("-o,--output", cfg.output, "Write JSON here instead of stdout");
  app.add_option("--precision", cfg.precision_bits, "Working precision in bits (default: $GROSSEN_PRECISION_BITS or 256)")
      ->check(CLI::Range(64L, 65536L));
  app.add_flag("--print-config", print_config, "Print the parsed run configuration and exit");

  auto field_opt = [&](CLI::App* s) { s->add_option("-d,--delta", cfg.delta, "Fundamental discriminant")->required(); };
  auto modulus_opt = [&](CLI::App* s) {
    s->add_option("-m,--modulus", cfg.modulus, "Modulus, e.g. dE, 7*dE, p:3^2, gen:1,1, hnf:a,b,s")->required();
  };
  auto char_opts = [&](CLI::App* s) {
    field_opt(s);
    modulus_opt(s);
    s->add_option("-l,--ell", cfg.ell, "ell = k - 1")->check(CLI::NonNegativeNumber);
    s->add_option("--order", cfg.order, "Order of eta (0: any)")->check(CLI::NonNegativeNumber);
    s->add_option("--eta", cfg.eta_index, "Index among the admissible eta")->check(CLI::NonNegativeNumber);
  };

  auto* classgroup = app.add_subcommand("classgroup", "Class group with generators and principal powers");
  field_opt(classgroup);

  auto* units = app.add_subcommand("units", "Structure of (o_E/m)^x");
  field_opt(units);
  modulus_opt(units);

  auto* chars = app.add_subcommand("chars", "Characters of (o_E/m)^x");
  field_opt(chars);
  modulus_opt(chars);
  chars->add_option("--order", cfg.order, "Keep characters of this order")->check(CLI::NonNegativeNumber);
  chars->add_option("-l,--ell", cfg.ell, "Weight used for the roots-of-unity test")->check(CLI::NonNegativeNumber);

  auto* gross = app.add_subcommand("gross", "Build or evaluate a Grossencharacter");
  gross->require_subcommand(1);
  auto* gbuild = gross->add_subcommand("build", "Construct psi and report its value field");
  char_opts(gbuild);
  auto* geval = gross->add_subcommand("eval", "Evaluate psi at an ideal");
  char_opts(geval);
  geval->add_option("-a,--ideal", cfg.ideal, "Integral ideal, same syntax as --modulus")->required();

  auto* qexp = app.add_subcommand("qexp", "q-expansion of the CM newform, with Hecke checks");
  char_opts(qexp);
  qexp->add_option("-B,--bound", cfg.bound, "Number of coefficients")->check(CLI::Range(1L, 1000000L));

  auto* table = app.add_subcommand("table", "Regenerate a classification table");
  table->add_option("name", cfg.subcommand, "deg2 | deg3 | quadodd | quadeven | quade3")
      ->required()
      ->check(CLI::IsMember(kTables));
  table->add_option("--conductor-norm-bound", cfg.conductor_norm_bound, "Bound for the order-4 search")
      ->check(CLI::PositiveNumber);
  table->add_option("-l,--ell", cfg.ell, "ell for the quadratic-modulus sweeps")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("which", cfg.subcommand, "all, or a comma-separated list of criterion ids")->required();

  auto* run = app.add_subcommand("run", "Replay a configuration written by --print-config");
  run->add_option("config", config_file, "JSON file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*run) {
      std::ifstream f(config_file);
      std::string out_override = cfg.output;
      cfg = run_config_from_json(Json::parse(f));
      if (!out_override.empty()) cfg.output = out_override;
    } else {
      for (auto* s : app.get_subcommands()) {
        cfg.command = s->get_name();
        for (auto* sub : s->get_subcommands()) cfg.subcommand = sub->get_name();
      }
      if (cfg.precision_bits == 256 && !app.count("--precision")) cfg.precision_bits = precision_bits();
    }
    if (print_config) {
      emit(to_json(cfg), cfg.output);
      return kOk;
    }
    set_precision_bits(cfg.precision_bits);
    Outcome o = execute(cfg);
    emit(o.body, cfg.output);
    return o.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "grossen: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "grossen: bad config: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "grossen: " << e.what() << "\n";
    return kMismatch;
  }
}
