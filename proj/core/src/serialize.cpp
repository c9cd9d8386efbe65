#include "grossen/serialize.hpp"

#include <sstream>

namespace grossen {

namespace {

std::string str(long v) { return std::to_string(v); }

Json long_list(const std::vector<long>& v) {
  Json out = Json::array();
  for (long x : v) out.push_back(str(x));
  return out;
}

// Decimal with the working-precision noise floor flushed to zero.
std::string real_str(const Real& x) {
  if (abs(x).to_double() < 1e-40) return "0";
  return x.to_string(25);
}

Int parse_int(const std::string& s) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Json to_json(const Int& v) { return v.get_str(); }

Json to_json(const Rat& v) { return v.get_str(); }

Json to_json(const QuadElem& z) { return Json::array({to_json(z.x), to_json(z.y)}); }

Json to_json(const QIdeal& I) { return Json::array({to_json(I.a), to_json(I.b), to_json(I.scale)}); }

Json to_json(const ClassGroup& cg) {
  Json j;
  j["delta_E"] = str(cg.delta);
  j["h"] = str(cg.h);
  j["exponent"] = str(cg.exponent);
  j["orders"] = long_list(cg.orders);
  j["gens"] = Json::array();
  for (const auto& t : cg.gens) j["gens"].push_back(to_json(t));
  j["thetas"] = Json::array();
  for (const auto& t : cg.thetas) j["thetas"].push_back(to_json(t));
  return j;
}

Json to_json(const UnitsStructure& S) {
  Json j;
  j["delta_E"] = str(S.delta);
  j["modulus"] = to_json(S.m);
  j["order"] = str(S.total_order);
  j["invariants"] = long_list(S.orders());
  j["factors"] = Json::array();
  for (const auto& f : S.factors) j["factors"].push_back({{"gen", to_json(f.gen)}, {"order", str(f.order)}});
  j["components"] = Json::array();
  for (const auto& c : S.components)
    j["components"].push_back(
        {{"prime", to_json(c.prime)}, {"exponent", str(c.exponent)}, {"order", str(c.order)}});
  j["torsion_meet"] = Json::array();
  for (const auto& u : S.torsion_meet) j["torsion_meet"].push_back(to_json(u));
  return j;
}

Json to_json(const GroupChar& eta) {
  Json j;
  j["modulus"] = to_json(eta.structure.m);
  j["order"] = str(eta.order());
  j["generators"] = Json::array();
  j["generator_orders"] = Json::array();
  for (const auto& f : eta.structure.factors) {
    j["generators"].push_back(to_json(f.gen));
    j["generator_orders"].push_back(str(f.order));
  }
  j["exponents"] = long_list(eta.exps);
  return j;
}

Json to_json(const ValueAlgebra& A) {
  Json j;
  j["delta_E"] = str(A.delta());
  j["r"] = str(A.r());
  j["base"] = A.cyclotomic_base() ? "Q(zeta_" + str(A.base_root_order()) + ")" : "E(zeta_" + str(A.r()) + ")";
  j["base_dim"] = str(static_cast<long>(A.base_dim()));
  j["dim"] = str(static_cast<long>(A.dim()));
  j["radicals"] = Json::array();
  for (const auto& rad : A.radicals())
    j["radicals"].push_back({{"n", str(rad.n)},
                             {"zeta_exp", str(rad.zeta_exp)},
                             {"e", to_json(rad.e)},
                             {"root_index", str(rad.root_index)}});
  return j;
}

Json to_json(const AlgElem& a) {
  Json j;
  j["num"] = Json::array();
  for (const auto& v : a.num) j["num"].push_back(to_json(v));
  j["den"] = to_json(a.den);
  return j;
}

Json to_json(const Complex& z) { return Json::array({real_str(z.re), real_str(z.im)}); }

Json to_json(const Grossenchar& psi) {
  Json j;
  j["delta_E"] = str(psi.delta());
  j["modulus"] = to_json(psi.modulus());
  j["ell"] = str(psi.ell());
  j["weight"] = str(psi.weight());
  j["level"] = str(psi.level());
  j["eta"] = to_json(psi.eta());
  j["class_group"] = to_json(psi.class_group());
  j["root_indices"] = long_list(psi.root_indices());
  j["algebra"] = to_json(psi.algebra());
  return j;
}

Json to_json(const RationalityField& K) {
  Json j;
  j["degree"] = str(K.degree);
  j["poly"] = Json::array();
  for (const auto& c : K.poly) j["poly"].push_back(to_json(c));
  j["poly_text"] = poly_to_string(K.poly);
  j["disc"] = to_json(K.disc);
  return j;
}

Json to_json(const CMForm& f) {
  Json j;
  Json h;
  h["level"] = str(f.level);
  h["weight"] = str(f.weight);
  h["delta_E"] = str(f.psi->delta());
  h["conductor"] = to_json(f.psi->modulus());
  h["B"] = str(f.bound);
  h["algebra"] = to_json(f.psi->algebra());
  j["header"] = h;
  j["coeffs"] = Json::array();
  for (long n = 1; n <= f.bound; ++n)
    j["coeffs"].push_back({{"n", str(n)}, {"value", to_json(f.complex_coeffs[n])}, {"exact", to_json(f.coeffs[n])}});
  return j;
}

Json to_json(const HeckeReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["checks"] = str(r.checks);
  if (!r.ok) {
    j["failure"] = r.failure;
    j["witness"] = Json::array({str(r.w1), str(r.w2)});
  }
  j["real"] = r.real;
  return j;
}

Json to_json(const TableRow& row) {
  Json j;
  j["delta_E"] = str(row.delta_E);
  j["delta_K"] = to_json(row.delta_K);
  j["degree"] = str(row.degree);
  j["poly"] = poly_to_string(row.poly);
  j["level"] = str(row.level);
  j["eta_order"] = str(row.eta_order);
  j["provenance"] = provenance_name(row.provenance);
  if (row.hilbert_class_field) j["hilbert_class_field"] = "computed";
  if (row.witness) j["witness"] = to_json(*row.witness);
  return j;
}

Json to_json(const TableEntry& e) {
  Json j;
  j["delta_K"] = to_json(e.delta_K);
  j["degree"] = str(e.degree);
  j["poly"] = poly_to_string(e.poly);
  j["delta_E"] = long_list(e.delta_E);
  return j;
}

Json to_json(const BoundedSearch& s) {
  Json j;
  j["delta_E"] = str(s.delta_E);
  j["r"] = str(s.r);
  j["conductor_norm_bound"] = str(s.bound);
  j["local_moduli"] = str(s.local_moduli);
  j["moduli_examined"] = str(s.moduli_examined);
  j["found"] = s.found;
  j["evidence"] = "bounded";
  if (s.example) j["example"] = to_json(*s.example);
  return j;
}

Json to_json(const SurveyResult& s) {
  Json j;
  j["swept"] = str(static_cast<long>(s.swept.size()));
  j["rows"] = Json::array();
  for (const auto& r : s.rows) j["rows"].push_back(to_json(r));
  j["rejections"] = Json::array();
  for (const auto& r : s.rejections)
    j["rejections"].push_back({{"delta_E", str(r.delta_E)}, {"ell", str(r.ell)}, {"reason", r.reason}});
  j["skipped"] = long_list(s.skipped);
  j["searches"] = Json::array();
  for (const auto& b : s.searches) j["searches"].push_back(to_json(b));
  if (!s.r1_holds_r4.empty() || !s.r1_holds_r6.empty()) {
    j["r1_r4"] = long_list(s.r1_holds_r4);
    j["r1_r6"] = long_list(s.r1_holds_r6);
  }
  return j;
}

QIdeal ideal_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("ideal: expected [a, b, scale]");
  QIdeal I;
  I.a = parse_int(j[0].get<std::string>());
  I.b = parse_int(j[1].get<std::string>());
  I.scale = Rat(j[2].get<std::string>());
  I.scale.canonicalize();
  return I;
}

QIdeal parse_modulus(const FieldE& E, const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty modulus");
  QIdeal m = unit_ideal();
  for (const auto& raw : split(spec, '*')) {
    std::string tok = raw;
    long power = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      power = to_long(parse_int(tok.substr(pos + 1)));
      tok = tok.substr(0, pos);
      if (power < 0) throw std::invalid_argument("modulus: negative power");
    }
    QIdeal I;
    if (tok == "dE") {
      I = minimal_conductor(E).d;
    } else if (tok.rfind("gen:", 0) == 0) {
      auto xy = split(tok.substr(4), ',');
      if (xy.size() != 2) throw std::invalid_argument("modulus: gen:x,y expected");
      QuadElem z(Rat(parse_int(xy[0])), Rat(parse_int(xy[1])));
      if (z.is_zero()) throw std::invalid_argument("modulus: zero generator");
      I = principal_ideal(E, z);
    } else if (tok.rfind("hnf:", 0) == 0) {
      auto abs_ = split(tok.substr(4), ',');
      if (abs_.size() != 3) throw std::invalid_argument("modulus: hnf:a,b,s expected");
      Int a = parse_int(abs_[0]), b = parse_int(abs_[1]), s = parse_int(abs_[2]);
      if (a <= 0 || s <= 0) throw std::invalid_argument("modulus: hnf needs a, s > 0");
      I = ideal_from_zspan(E, {QuadElem(Rat(s * a), Rat(0)), QuadElem(Rat(s * b), Rat(s))});
    } else if (tok.rfind("p:", 0) == 0) {
      auto parts = split(tok.substr(2), ':');
      long p = to_long(parse_int(parts[0]));
      if (!is_prime(p)) throw std::invalid_argument("modulus: p:" + parts[0] + " is not prime");
      long idx = parts.size() > 1 ? to_long(parse_int(parts[1])) : 0;
      auto primes = factor_prime(E, p).primes;
      if (idx < 0 || idx >= static_cast<long>(primes.size())) throw std::invalid_argument("modulus: no such prime index");
      I = primes[idx];
    } else {
      Int n = parse_int(tok);
      if (n <= 0) throw std::invalid_argument("modulus: integer factor must be positive");
      I = rational_ideal(Rat(n));
    }
    m = ideal_mul(E, m, ideal_pow(E, I, power));
  }
  if (!m.is_integral()) throw std::invalid_argument("modulus must be integral");
  return m;
}

Json to_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["subcommand"] = c.subcommand;
  j["delta"] = str(c.delta);
  j["ell"] = str(c.ell);
  j["modulus"] = c.modulus;
  j["order"] = str(c.order);
  j["eta_index"] = str(c.eta_index);
  j["bound"] = str(c.bound);
  j["conductor_norm_bound"] = str(c.conductor_norm_bound);
  j["output"] = c.output;
  j["precision_bits"] = str(c.precision_bits);
  j["ideal"] = c.ideal;
  return j;
}

RunConfig run_config_from_json(const Json& j) {
  auto num = [&](const char* k) { return to_long(parse_int(j.at(k).get<std::string>())); };
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.subcommand = j.at("subcommand").get<std::string>();
  c.delta = num("delta");
  c.ell = num("ell");
  c.modulus = j.at("modulus").get<std::string>();
  c.order = num("order");
  c.eta_index = num("eta_index");
  c.bound = num("bound");
  c.conductor_norm_bound = num("conductor_norm_bound");
  c.output = j.at("output").get<std::string>();
  c.precision_bits = num("precision_bits");
  c.ideal = j.at("ideal").get<std::string>();
  return c;
}

}  // namespace grossen
