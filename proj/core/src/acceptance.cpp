#include "grossen/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "grossen/cmform.hpp"
#include "grossen/resunits.hpp"
#include "grossen/valuefield.hpp"

namespace grossen {

const std::vector<QuadraticOracle>& quadratic_table_oracle() {
  static const std::vector<QuadraticOracle> t = {
      {5, {-15, -20, -35, -40, -115, -235}},
      {8, {-4, -8, -24, -88}},
      {12, {-3, -4}},
      {13, {-52, -91, -403}},
      {17, {-51, -187}},
      {21, {-7}},
      {24, {-8}},
      {28, {-7}},
      {29, {-232}},
      {33, {-11}},
      {37, {-148}},
      {41, {-123}},
      {44, {-11}},
      {57, {-19}},
      {61, {-427}},
      {76, {-19}},
      {89, {-267}},
      {129, {-43}},
      {172, {-43}},
      {201, {-67}},
      {268, {-67}},
      {489, {-163}},
      {652, {-163}},
  };
  return t;
}

const std::vector<std::pair<long, long>>& cubic_table_oracle() {
  static const std::vector<std::pair<long, long>> t = {
      {49, -7},      {81, -3},      {321, -107},   {621, -23},    {837, -31},    {993, -331},
      {1593, -59},   {1929, -643},  {2241, -83},   {3753, -139},  {5697, -211},  {7641, -283},
      {8289, -307},  {10233, -379}, {13473, -499}, {14769, -547}, {23841, -883}, {24489, -907},
  };
  return t;
}

const std::vector<std::pair<long, long>>& quadodd_oracle() {
  static const std::vector<std::pair<long, long>> t = {
      {-15, 5},   {-35, 5},  {-51, 17},  {-91, 13},  {-115, 5},  {-123, 41},
      {-187, 17}, {-235, 5}, {-267, 89}, {-403, 13}, {-427, 61},
  };
  return t;
}

const std::vector<std::pair<long, long>>& quadeven_oracle() {
  static const std::vector<std::pair<long, long>> t = {{-24, 8}, {-40, 5}, {-88, 8}, {-232, 29}};
  return t;
}

const std::vector<std::pair<long, long>>& quade3_oracle() {
  static const std::vector<std::pair<long, long>> t = {
      {-23, 621},    {-31, 837},    {-59, 1593},   {-83, 2241},   {-107, 321},   {-139, 3753},
      {-211, 5697},  {-283, 7641},  {-307, 8289},  {-331, 993},   {-379, 10233}, {-499, 13473},
      {-547, 14769}, {-643, 1929},  {-883, 23841}, {-907, 24489},
  };
  return t;
}

// ------------------------------------------------------------ brute force

namespace {

// Residues x + y omega modulo s(aZ + (b + omega)Z), s a positive integer.
struct BruteRing {
  long s, a, b, T, N;
  BruteRing(const FieldE& E, const QIdeal& I) {
    if (!I.is_integral()) throw std::invalid_argument("brute force: integral ideal expected");
    s = to_long(I.scale.get_num());
    a = to_long(I.a);
    b = to_long(I.b);
    T = to_long(E.omega_trace());
    N = E.omega_norm_l();
  }
  long size() const { return s * s * a; }
  std::pair<long, long> reduce(long x, long y) const {
    long q = y >= 0 ? y / s : -((-y + s - 1) / s);
    y -= q * s;
    x -= q * s * b;
    return {mod_floor(x, s * a), y};
  }
  std::pair<long, long> mul(std::pair<long, long> u, std::pair<long, long> v) const {
    long x = u.first * v.first - N * u.second * v.second;
    long y = u.first * v.second + u.second * v.first + T * u.second * v.second;
    return reduce(x, y);
  }
  std::pair<long, long> at(long i) const { return {i % (s * a), i / (s * a)}; }
};

}  // namespace

BruteDyadic brute_dyadic_units(const FieldE& E, const QIdeal& Pn) {
  auto factors = factor_ideal(E, Pn);
  if (factors.size() != 1) throw std::invalid_argument("brute_dyadic_units: prime power expected");
  BruteRing R(E, Pn), P(E, factors[0].first);
  std::vector<long> units;
  for (long i = 0; i < R.size(); ++i) {
    auto [x, y] = R.at(i);
    if (P.reduce(x, y) != std::pair<long, long>{0, 0}) units.push_back(i);
  }
  long order = static_cast<long>(units.size());
  long odd = order;
  while (odd % 2 == 0) odd /= 2;
  std::vector<long> cnt(64, 0);
  const std::pair<long, long> one = R.reduce(1, 0);
  for (long i : units) {
    auto g = R.at(i);
    std::pair<long, long> y = one;
    for (long e = odd, k = 0; e; e >>= 1, ++k) {
      if (e & 1) y = R.mul(y, g);
      g = R.mul(g, g);
    }
    int k = 0;
    while (y != one) {
      y = R.mul(y, y);
      ++k;
    }
    ++cnt[k];
  }
  // rank profile: #{a_i >= k} = log2 c_k - log2 c_{k-1}
  std::vector<int> logc;
  long c = 0;
  for (int k = 0; k < 64; ++k) {
    c += cnt[k];
    long v = c / odd;
    int l = 0;
    while ((1L << l) < v) ++l;
    logc.push_back(l);
  }
  BruteDyadic out;
  out.odd_order = odd;
  for (int k = 1; k < 63; ++k) {
    int ge_k = logc[k] - logc[k - 1];
    int ge_k1 = logc[k + 1] - logc[k];
    for (int t = 0; t < ge_k - ge_k1; ++t) out.two_exponents.push_back(k);
  }
  std::sort(out.two_exponents.begin(), out.two_exponents.end());
  return out;
}

bool brute_is_square(const FieldE& E, const QIdeal& I, long a) {
  BruteRing R(E, I);
  auto target = R.reduce(a, 0);
  for (long i = 0; i < R.size(); ++i)
    if (R.mul(R.at(i), R.at(i)) == target) return true;
  return false;
}

// ------------------------------------------------------------ criteria

namespace {

std::string join(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

struct Fails {
  std::vector<std::string> items;
  void add(const std::string& s) { items.push_back(s); }
  bool ok() const { return items.empty(); }
  std::string text(std::size_t limit = 6) const {
    std::string out;
    for (std::size_t i = 0; i < items.size() && i < limit; ++i) out += (i ? "; " : "") + items[i];
    if (items.size() > limit) out += "; ... (" + std::to_string(items.size()) + " total)";
    return out;
  }
};

std::map<long, long> rows_by_field(const std::vector<TableRow>& rows, bool (*keep)(long)) {
  std::map<long, long> out;
  for (const auto& r : rows)
    if (keep(r.delta_E)) out[r.delta_E] = to_long(r.delta_K);
  return out;
}

void compare_pairs(const std::string& name, const std::map<long, long>& got,
                   const std::vector<std::pair<long, long>>& want, Fails& f) {
  std::map<long, long> w(want.begin(), want.end());
  if (got.size() != w.size())
    f.add(name + ": " + std::to_string(got.size()) + " rows, expected " + std::to_string(w.size()));
  for (auto& [d, k] : w) {
    auto it = got.find(d);
    if (it == got.end())
      f.add(name + ": missing " + std::to_string(d));
    else if (it->second != k)
      f.add(name + ": " + std::to_string(d) + " gives " + std::to_string(it->second) + ", expected " +
            std::to_string(k));
  }
  for (auto& [d, k] : got)
    if (!w.count(d)) f.add(name + ": unexpected row " + std::to_string(d));
}

CriterionResult c1_quadratic_table() {
  CriterionResult r{1, "quadratic_fields_table", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  ClassificationTables t = classification_tables();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Fails f;
  std::map<long, std::vector<long>> got;
  for (const auto& e : t.quadratic) got[to_long(e.delta_K)] = e.delta_E;
  for (const auto& o : quadratic_table_oracle()) {
    auto it = got.find(o.delta_K);
    if (it == got.end())
      f.add("missing Delta_K=" + std::to_string(o.delta_K));
    else if (it->second != o.delta_E)
      f.add("Delta_K=" + std::to_string(o.delta_K) + ": {" + join(it->second) + "} vs {" + join(o.delta_E) + "}");
  }
  for (auto& [k, v] : got) {
    bool known = std::any_of(quadratic_table_oracle().begin(), quadratic_table_oracle().end(),
                             [&](const QuadraticOracle& o) { return o.delta_K == k; });
    if (!known) f.add("unexpected Delta_K=" + std::to_string(k));
  }
  if (secs > 60) f.add("runtime " + std::to_string(secs) + " s over 60 s");
  r.pass = f.ok();
  r.detail = r.pass ? std::to_string(got.size()) + "/23 entries exact" : f.text();
  return r;
}

CriterionResult c2_cubic_table() {
  CriterionResult r{2, "cubic_fields_table", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  ClassificationTables t = classification_tables();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Fails f;
  std::set<std::pair<long, long>> got, want(cubic_table_oracle().begin(), cubic_table_oracle().end());
  for (const auto& e : t.cubic)
    for (long d : e.delta_E) got.insert({to_long(e.delta_K), d});
  for (const auto& p : want)
    if (!got.count(p)) f.add("missing " + std::to_string(p.first) + "/" + std::to_string(p.second));
  for (const auto& p : got)
    if (!want.count(p)) f.add("unexpected " + std::to_string(p.first) + "/" + std::to_string(p.second));
  if (secs > 60) f.add("runtime over 60 s");
  r.pass = f.ok();
  r.detail = r.pass ? std::to_string(got.size()) + "/18 pairs exact" : f.text();
  return r;
}

CriterionResult c3_tables345() {
  CriterionResult r{3, "quadratic_modulus_tables", false, "", 0};
  Fails f;
  SurveyResult e2 = survey_quadratic_modulus(2, 1);
  SurveyResult e3 = survey_quadratic_modulus(3, 1);
  compare_pairs("quadodd", rows_by_field(e2.rows, [](long d) { return d % 2 != 0; }), quadodd_oracle(), f);
  compare_pairs("quadeven", rows_by_field(e2.rows, [](long d) { return d % 2 == 0; }), quadeven_oracle(), f);
  compare_pairs("quade3", rows_by_field(e3.rows, [](long) { return true; }), quade3_oracle(), f);
  // one row per field: every eta choice gave the same K
  if (e2.rows.size() != 15) f.add("exponent 2 sweep emitted " + std::to_string(e2.rows.size()) + " rows");
  r.pass = f.ok();
  r.detail = r.pass ? "11 + 4 + 16 rows exact" : f.text();
  return r;
}

CriterionResult c4_negative() {
  CriterionResult r{4, "negative_checks", false, "", 0};
  Fails f;
  long q1_fields = 0;
  for (long D : enumerate_discriminants(5460, 2)) {
    if (class_number(D) <= 2) continue;
    ++q1_fields;
    if (check_Q1(FieldE(D), 1).holds) f.add("Q1 holds at " + std::to_string(D));
  }
  if (q1_fields != 38) f.add(std::to_string(q1_fields) + " exponent-2 fields with h > 2, expected 38");
  for (long ell : {1L, 2L})
    if (check_Q1(FieldE(-4027), ell).holds) f.add("Q1 holds at -4027, ell=" + std::to_string(ell));
  SurveyResult e2 = survey_quadratic_modulus(2, 1);
  if (e2.skipped != std::vector<long>{-20, -52, -148}) f.add("Delta = 4 mod 8 skips: {" + join(e2.skipped) + "}");
  long examined = 0;
  for (long D : {-24L, -40L, -88L, -232L}) {
    BoundedSearch s = order4_search(FieldE(D), 10000);
    examined += s.moduli_examined;
    if (s.found) f.add("order 4 eta found for " + std::to_string(D));
  }
  r.pass = f.ok();
  r.detail = r.pass ? "38 Q1 rejections, -4027 rejected at ell=1,2, skips {-20,-52,-148}, no eta in " +
                          std::to_string(examined) + " moduli with N(m) <= 10000"
                    : f.text();
  return r;
}

CriterionResult c5_class_groups() {
  CriterionResult r{5, "class_group_oracle", false, "", 0};
  Fails f;
  long fields = 0;
  for (long D = -3; D >= -5460; --D) {
    if (!is_fundamental(D)) continue;
    ++fields;
    long forms = static_cast<long>(reduced_forms(D).size());
    Int lattice = class_group_relations(D).order;
    if (lattice != forms) f.add(std::to_string(D) + ": forms " + std::to_string(forms) + " vs lattice " + lattice.get_str());
  }
  auto e2 = enumerate_discriminants(5460, 2);
  auto e3 = enumerate_discriminants(5460, 3);
  if (e2.size() != 56) f.add("exponent 2: " + std::to_string(e2.size()) + " fields");
  if (e3.size() != 17) f.add("exponent 3: " + std::to_string(e3.size()) + " fields");
  std::map<long, long> by_h;
  for (long D : e2) ++by_h[class_number(D)];
  if (by_h != std::map<long, long>{{2, 18}, {4, 24}, {8, 13}, {16, 1}}) f.add("exponent 2 class number split differs");
  if (!e2.empty() && e2.back() != -5460) f.add("largest exponent 2 discriminant is not -5460");
  r.pass = f.ok();
  r.detail = r.pass ? std::to_string(fields) + " fields agree; 56 exponent-2 (18/24/13/1), 17 exponent-3" : f.text();
  return r;
}

std::vector<TableRow> hecke_witnesses() {
  ClassificationTables t = classification_tables();
  std::vector<TableRow> rows = t.rows;
  for (auto& row : survey_h1(1, 1)) rows.push_back(std::move(row));
  return rows;
}

CriterionResult c6_hecke() {
  CriterionResult r{6, "hecke_suite", false, "", 0};
  Fails f;
  long forms = 0, checks = 0;
  double max_imag = 0;
  for (const auto& row : hecke_witnesses()) {
    CMForm form = q_expansion(*row.witness, 2000);
    HeckeReport rep = hecke_verify(form);
    ++forms;
    checks += rep.checks;
    max_imag = std::max(max_imag, rep.max_imag);
    if (!rep.ok)
      f.add(std::to_string(row.delta_E) + "/" + provenance_name(row.provenance) + ": " + rep.failure + " at (" +
            std::to_string(rep.w1) + "," + std::to_string(rep.w2) + ")");
    if (!rep.real) f.add(std::to_string(row.delta_E) + ": non-real coefficients");
  }
  r.pass = f.ok();
  std::ostringstream os;
  os << forms << " forms, " << checks << " exact identities at B=2000, max |Im a_n| = " << max_imag;
  r.detail = r.pass ? os.str() : f.text();
  return r;
}

CriterionResult c7_levels() {
  CriterionResult r{7, "level_bookkeeping", false, "", 0};
  Fails f;
  auto d1 = survey_h1(1, 1), d2 = survey_h1(1, 2), d3 = survey_h1(1, 3);
  auto level_of = [](const std::vector<TableRow>& rows, long D, long r_order) -> long {
    for (const auto& row : rows)
      if (row.delta_E == D && (r_order == 0 || row.eta_order == r_order)) return row.level;
    return -1;
  };
  auto expect = [&](const char* what, long got, long want) {
    if (got != want) f.add(std::string(what) + ": " + std::to_string(got) + " != " + std::to_string(want));
  };
  expect("-163 r=6", level_of(d2, -163, 6), 106276);
  expect("-163 r=4", level_of(d2, -163, 4), 239121);
  expect("-3 d=3", level_of(d3, -3, 0), 2187);
  expect("-7 d=3", level_of(d3, -7, 0), 343);
  expect("-4 d=1", level_of(d1, -4, 0), 32);
  r.pass = f.ok();
  r.detail = r.pass ? "106276, 239121, 3^7, 7^3, 32" : f.text();
  return r;
}

CriterionResult c8_invariants() {
  CriterionResult r{8, "invariant_suite", false, "", 0};
  Fails f;
  long n = 0;
  for (long ell : {1L, 3L, 5L}) {
    std::vector<std::shared_ptr<const Grossenchar>> psis;
    auto take = [&](const std::vector<TableRow>& rows) {
      for (const auto& row : rows) psis.push_back(row.witness);
    };
    for (int d = 1; d <= 3; ++d) take(survey_h1(ell, d));
    take(survey_quadratic_modulus(2, ell).rows);
    if (ell % 3 != 0) {
      take(survey_quadratic_modulus(3, ell).rows);
    } else {
      // 3 | ell: the sweep's precondition fails, so build the characters directly
      for (long D : enumerate_discriminants(5460, 3)) {
        if (class_number(D) != 3) continue;
        FieldE E(D);
        QIdeal dE = minimal_conductor(E).d;
        EtaQuery q;
        q.order_equals = 2;
        q.weight = ell;
        for (const auto& eta : enumerate_eta(E, dE, q))
          psis.push_back(std::make_shared<const Grossenchar>(build(E, dE, ell, eta)));
      }
    }
    take(survey_higher_order(ell, 10000).rows);
    for (const auto& psi : psis) {
      ++n;
      long d = value_field_degree(*psi);
      long ex = class_group_exponent(psi->delta());
      if ((ell * d) % ex != 0)
        f.add("exponent " + std::to_string(ex) + " does not divide ell*d at " + std::to_string(psi->delta()));
      long probe = coefficient_field_probe(q_expansion(*psi, 200)).degree;
      if (probe != d)
        f.add(std::to_string(psi->delta()) + " ell=" + std::to_string(ell) + ": probe " + std::to_string(probe) +
              " vs value field degree " + std::to_string(d));
    }
  }
  r.pass = f.ok();
  r.detail = r.pass ? std::to_string(n) + " characters over ell in {1,3,5}" : f.text();
  return r;
}

std::vector<int> sorted_exponents(const std::vector<long>& orders, long& odd) {
  std::vector<int> out;
  odd = 1;
  for (long o : orders) {
    int v = 0;
    while (o % 2 == 0) {
      o /= 2;
      ++v;
    }
    odd *= o;
    if (v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool library_is_square(const UnitsStructure& S, long a) {
  auto e = dlog(QuadElem(a), S);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (S.factors[i].order % 2 == 0 && e[i] % 2 != 0) return false;
  return true;
}

CriterionResult c9_dyadic() {
  CriterionResult r{9, "dyadic_unit_groups", false, "", 0};
  Fails f, five;
  long cases = 0;
  auto drop0 = [](std::vector<int> v) {
    v.erase(std::remove(v.begin(), v.end(), 0), v.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  for (long D : {-7L, -15L, -3L, -11L, -4L, -20L, -8L, -24L}) {
    FieldE E(D);
    QIdeal P = factor_prime(E, 2).primes.at(0);
    const std::string tag = std::to_string(D);
    for (int n = 1; n <= 12; ++n) {
      ++cases;
      QIdeal Pn = ideal_pow(E, P, n);
      UnitsStructure S = units_structure(E, Pn);
      long odd_lib;
      auto lib = sorted_exponents(S.orders(), odd_lib);
      BruteDyadic bf = brute_dyadic_units(E, Pn);
      const std::string at = tag + " n=" + std::to_string(n);
      if (lib != bf.two_exponents || odd_lib != bf.odd_order) f.add(at + ": library structure differs from enumeration");
      // closed forms
      std::vector<int> want;
      bool check = n >= 2;
      long m8 = mod_floor(D, 8);
      if (m8 == 1)
        want = drop0({1, n - 2});
      else if (m8 == 5)
        want = drop0({1, n - 1, n - 2});
      else if (m8 == 0)
        check = n >= 4, want = drop0({1, (n + 1) / 2 - 2, n / 2});
      else
        check = false;
      if (check && bf.two_exponents != want) f.add(at + ": closed form differs");
      if (m8 == 5 && n >= 2 && bf.odd_order != 3) f.add(at + ": odd part is not C3");
      // 2-rank: ramified 0,1,1,2 for n <= 4 then 3; inert 0,2 then 3;
      // ramified n = 5 gives C2^2 x C4
      if (m8 % 4 == 0) {
        const int rank_small[] = {0, 0, 1, 1, 2};
        int want_rank = n <= 4 ? rank_small[n] : 3;
        if (static_cast<int>(bf.two_exponents.size()) != want_rank) f.add(at + ": 2-rank");
        if (n == 5 && bf.two_exponents != std::vector<int>{1, 1, 2}) f.add(at + ": not C2^2 x C4");
      }
      if (m8 == 5 && static_cast<int>(bf.two_exponents.size()) != (n == 1 ? 0 : n == 2 ? 2 : 3)) f.add(at + ": 2-rank");
      if (m8 == 4 && n >= 2) {
        bool inj = rational_image(S, 4).injective;
        if (inj != (n >= 3)) f.add(at + ": (Z/4)^x injectivity");
        // -1 stays a square past n = 4 only when D/4 = 7 mod 8
        bool sq = brute_is_square(E, Pn, -1);
        if (sq != library_is_square(S, -1)) f.add(at + ": library square test for -1 disagrees");
        if (n >= 3 && sq != (n <= 4 || mod_floor(D / 4, 8) == 7)) f.add(at + ": -1 square pattern");
      }
      if (m8 == 0) {
        bool inj = rational_image(S, 8).injective;
        if (inj != (n >= 5)) f.add(at + ": (Z/8)^x injectivity");
        if (n >= 5) {
          bool sq5 = brute_is_square(E, Pn, 5);
          if (sq5 != (n >= 7)) five.add(at + (sq5 ? ": 5 is a square" : ": 5 is not a square") + " (expected iff n >= 7)");
          if (sq5 != library_is_square(S, 5)) f.add(at + ": library square test for 5 disagrees");
          if (brute_is_square(E, Pn, -1) || library_is_square(S, -1)) f.add(at + ": -1 is a square");
          if (brute_is_square(E, Pn, 3) || library_is_square(S, 3)) f.add(at + ": 3 is a square");
        }
      }
    }
  }
  r.pass = f.ok() && five.ok();
  if (r.pass)
    r.detail = std::to_string(cases) + " (field, n) cases match enumeration; 5 square iff n >= 7";
  else if (f.ok())
    r.detail = "structure, injectivity and -1/3 checks hold on all " + std::to_string(cases) +
               " cases; 5-square rule fails (enumeration: square iff n <= 4): " + five.text(3);
  else
    r.detail = f.text() + (five.ok() ? "" : "; " + five.text(3));
  return r;
}

}  // namespace

std::vector<int> all_criteria() { return {1, 2, 3, 4, 5, 6, 7, 8, 9}; }

CriterionResult run_criterion(int id) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = c1_quadratic_table(); break;
      case 2: r = c2_cubic_table(); break;
      case 3: r = c3_tables345(); break;
      case 4: r = c4_negative(); break;
      case 5: r = c5_class_groups(); break;
      case 6: r = c6_hecke(); break;
      case 7: r = c7_levels(); break;
      case 8: r = c8_invariants(); break;
      case 9: r = c9_dyadic(); break;
      default: throw std::invalid_argument("no criterion " + std::to_string(id));
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    static const char* names[] = {"",
                                  "quadratic_fields_table",
                                  "cubic_fields_table",
                                  "quadratic_modulus_tables",
                                  "negative_checks",
                                  "class_group_oracle",
                                  "hecke_suite",
                                  "level_bookkeeping",
                                  "invariant_suite",
                                  "dyadic_unit_groups"};
    r.id = id;
    r.name = names[id];
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids,
                                            const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(run_criterion(id));
    if (report) report(out.back());
  }
  return out;
}

}  // namespace grossen
