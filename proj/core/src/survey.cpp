#include "grossen/survey.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "grossen/valuefield.hpp"

namespace grossen {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::H1D1: return "h1-d1";
    case Provenance::H1D2: return "h1-d2";
    case Provenance::H1D3: return "h1-d3";
    case Provenance::QuadmodE2: return "quadmod-e2";
    case Provenance::QuadmodE3: return "quadmod-e3";
    case Provenance::HighordR4: return "highord-r4";
    case Provenance::HighordR6: return "highord-r6";
  }
  return "?";
}

namespace {

constexpr long kClassNumberOne[] = {-3, -4, -7, -8, -11, -19, -43, -67, -163};
constexpr long kSweepBound = 5460;

TableRow make_row(const Grossenchar& psi, Provenance prov) {
  RationalityField K = rationality_field(psi);
  TableRow row;
  row.delta_E = psi.delta();
  row.degree = K.degree;
  row.delta_K = K.disc;
  row.poly = K.poly;
  row.level = psi.level();
  row.eta_order = psi.eta_order();
  row.provenance = prov;
  if (K.degree == 2 && class_number(psi.delta()) == 2) {
    long dk = to_long(K.disc);
    row.hilbert_class_field = psi.delta() % dk == 0 && is_fundamental(psi.delta() / dk);
  }
  row.witness = std::make_shared<const Grossenchar>(psi);
  return row;
}

std::vector<GroupChar> etas_for(const FieldE& E, const QIdeal& m, long ell, std::optional<long> order_eq,
                                std::optional<long> order_div, bool primitive) {
  EtaQuery q;
  q.order_equals = order_eq;
  q.order_divides = order_div;
  q.weight = ell;
  q.match_chi_E = true;
  std::vector<GroupChar> out;
  for (auto& eta : enumerate_eta(E, m, q))
    if (!primitive || conductor_of(eta) == m) out.push_back(std::move(eta));
  return out;
}

// First primitive eta (in enumeration order) whose character has value field
// degree expect_d over E.
Grossenchar first_build(const FieldE& E, const QIdeal& m, long ell, std::optional<long> order_eq,
                        std::optional<long> order_div, long expect_d, int alternate = 0) {
  BuildOptions opts;
  opts.class_group = class_group(E, m, alternate);
  for (const auto& eta : etas_for(E, m, ell, order_eq, order_div, true)) {
    Grossenchar psi = build(E, m, ell, eta, opts);
    if (value_field_degree(psi) == expect_d) return psi;
  }
  throw std::logic_error("survey: recipe found no primitive eta for " + std::to_string(E.delta()));
}

QIdeal times(const FieldE& E, long c, const QIdeal& I) { return ideal_mul(E, rational_ideal(c), I); }

void sort_rows(std::vector<TableRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    if (a.delta_E != b.delta_E) return a.delta_E > b.delta_E;
    return a.delta_K < b.delta_K;
  });
}

}  // namespace

std::vector<TableRow> survey_h1(long ell, int d) {
  if (ell % 2 == 0 || ell < 1) throw std::invalid_argument("survey_h1: ell must be odd and positive");
  if (d < 1 || d > 3) throw std::invalid_argument("survey_h1: d must be 1, 2 or 3");
  std::vector<TableRow> rows;
  if (d == 1) {
    for (long D : kClassNumberOne) {
      FieldE E(D);
      QIdeal dE = minimal_conductor(E).d;
      // zeta_3 = 1 mod d_E, so d_E only works when zeta_3^ell = 1
      if (D == -3)
        rows.push_back(make_row(first_build(E, ell % 3 == 0 ? dE : rational_ideal(3), ell, std::nullopt, 6, 1),
                                Provenance::H1D1));
      else
        rows.push_back(make_row(first_build(E, dE, ell, std::nullopt, D == -4 ? 4 : 2, 1), Provenance::H1D1));
    }
  } else if (d == 2) {
    for (long D : kClassNumberOne) {
      FieldE E(D);
      QIdeal dE = minimal_conductor(E).d;
      // E already holds mu_4 or mu_6, so eta only needs order dividing r
      if (D == -4) {
        rows.push_back(make_row(first_build(E, times(E, 7, dE), ell, std::nullopt, 8, 2), Provenance::H1D2));
        rows.push_back(make_row(first_build(E, times(E, 11, dE), ell, std::nullopt, 12, 2), Provenance::H1D2));
        continue;
      }
      if (D == -3) {
        rows.push_back(make_row(first_build(E, times(E, 11, dE), ell, std::nullopt, 12, 2), Provenance::H1D2));
        continue;
      }
      // r = 4
      QIdeal m4 = D == -8 ? dE : (D == -11 || D == -19) ? times(E, 5, dE) : times(E, 3, dE);
      rows.push_back(make_row(first_build(E, m4, ell, 4, std::nullopt, 2), Provenance::H1D2));
      // r = 6: 2 inert unless Delta in {-7, -8}, where 5 is inert instead
      QIdeal m6 = kronecker(D, 2) == -1 ? times(E, 2, dE) : times(E, 5, dE);
      rows.push_back(make_row(first_build(E, m6, ell, 6, std::nullopt, 2), Provenance::H1D2));
    }
  } else {
    FieldE E3(-3), E7(-7);
    rows.push_back(make_row(first_build(E3, rational_ideal(27), ell, 18, std::nullopt, 3), Provenance::H1D3));
    rows.push_back(make_row(first_build(E7, rational_ideal(7), ell, 14, std::nullopt, 3), Provenance::H1D3));
  }
  sort_rows(rows);
  return rows;
}

SurveyResult survey_quadratic_modulus(int exponent, long ell, int alternate) {
  if (exponent != 2 && exponent != 3) throw std::invalid_argument("survey_quadratic_modulus: exponent must be 2 or 3");
  if (ell % 2 == 0 || ell < 1) throw std::invalid_argument("survey_quadratic_modulus: ell must be odd and positive");
  if (exponent == 3 && ell % 3 == 0) throw std::invalid_argument("survey_quadratic_modulus: ell must be prime to 3");
  SurveyResult res;
  const Provenance prov = exponent == 2 ? Provenance::QuadmodE2 : Provenance::QuadmodE3;
  for (long D : enumerate_discriminants(kSweepBound, exponent)) {
    res.swept.push_back(D);
    FieldE E(D);
    ClassGroup cg0 = class_group(E, unit_ideal(), alternate);
    if (cg0.gens.size() > 1) {
      if (!check_Q1(E, cg0, ell).holds) {
        res.rejections.push_back({D, ell, "Q1"});
        continue;
      }
      throw std::logic_error("survey: Q1 holds for a non-cyclic class group at " + std::to_string(D));
    }
    if (mod_floor(D, 8) == 4) {
      res.skipped.push_back(D);
      continue;
    }
    QIdeal dE = minimal_conductor(E).d;
    BuildOptions opts;
    opts.class_group = class_group(E, dE, alternate);
    std::set<Int> discs;
    for (const auto& eta : etas_for(E, dE, ell, 2, std::nullopt, false)) {
      Grossenchar psi = build(E, dE, ell, eta, opts);
      TableRow row = make_row(psi, prov);
      if (discs.insert(row.delta_K).second) res.rows.push_back(std::move(row));
    }
    if (mod_floor(D, 8) == 0 && discs.size() == 1) res.eta_choices_agree.push_back(D);
  }
  sort_rows(res.rows);
  return res;
}

namespace {

// The p-part of chi_E evaluated at a (p-adic unit).
int chi_local(long D, long p, long a) {
  long Dp = 1, Do = std::labs(D);
  while (Do % p == 0) {
    Do /= p;
    Dp *= p;
  }
  if (Dp == 1) return 1;
  // a' = a mod Dp, 1 mod Do
  long ap = Do > 1 ? crt_pair(mod_floor(a, Dp), Dp, 1, Do) : mod_floor(a, Dp);
  return kronecker(D, ap);
}

struct LocalModulus {
  QIdeal m;
  long norm;
  unsigned parities;  // bit0: even eta(theta) exponent achievable, bit1: odd
};

std::vector<LocalModulus> local_moduli(const FieldE& E, long p, long bound, long& examined) {
  const long D = E.delta();
  std::vector<std::pair<QIdeal, long>> mods;
  SplitType st = factor_prime(E, p);
  if (st.kind == Splitting::Split) {
    for (long na = 1; na <= bound; na *= p)
      for (long nb = 1; na * nb <= bound; nb *= p) {
        if (na * nb == 1) continue;
        long a = 0, b = 0;
        for (long t = na; t > 1; t /= p) ++a;
        for (long t = nb; t > 1; t /= p) ++b;
        mods.push_back({ideal_mul(E, ideal_pow(E, st.primes[0], a), ideal_pow(E, st.primes[1], b)), na * nb});
      }
  } else if (st.kind == Splitting::Inert) {
    long a = 1;
    for (long n = p * p; n <= bound; n *= p * p, ++a) mods.push_back({rational_ideal(Rat(ipow(Int(p), a))), n});
  } else {
    long a = 1;
    for (long n = p; n <= bound; n *= p, ++a) mods.push_back({ideal_pow(E, st.primes[0], a), n});
  }

  ClassGroup cg = class_group(E, rational_ideal(p));
  const QuadElem theta = cg.thetas.at(0);
  std::vector<LocalModulus> out;
  for (auto& [m, nrm] : mods) {
    ++examined;
    UnitsStructure S = units_structure(E, m);
    std::vector<long> step;
    for (const auto& f : S.factors) step.push_back(f.order / gcd_l(f.order, 4));
    IntegerUnits U = integer_units(lcm_l(nrm, std::labs(D) % p == 0 ? std::labs(D) : 1));
    unsigned par = 0;
    GroupChar eta{S, std::vector<long>(S.factors.size(), 0)};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == S.factors.size()) {
        for (long g : U.gens) {
          Angle v = eta(QuadElem(g));
          if (v != Angle(chi_local(D, p, g) == 1 ? 0 : 1, 2)) return;
        }
        Angle v = eta(theta);
        long e = v.num * (4 / v.den);
        par |= 1u << (e % 2);
        return;
      }
      for (long k = 0; k < S.factors[i].order; k += step[i]) {
        eta.exps[i] = k;
        rec(i + 1);
      }
      eta.exps[i] = 0;
    };
    rec(0);
    out.push_back({m, nrm, par});
  }
  return out;
}

}  // namespace

BoundedSearch order4_search(const FieldE& E, long bound) {
  if (class_number(E.delta()) != 2) throw std::invalid_argument("order4_search: class number 2 fields only");
  const long D = E.delta();
  BoundedSearch bs;
  bs.delta_E = D;
  bs.r = 4;
  bs.bound = bound;

  std::vector<long> required;
  for (long p : prime_divisors(std::labs(D))) required.push_back(p);
  long req_norm = 1;
  for (long p : required) req_norm *= p;

  std::map<long, std::vector<LocalModulus>> memo;
  auto local = [&](long p) -> const std::vector<LocalModulus>& {
    auto it = memo.find(p);
    if (it == memo.end()) it = memo.emplace(p, local_moduli(E, p, bound, bs.local_moduli)).first;
    return it->second;
  };

  std::vector<long> primes = primes_up_to(std::max(2L, bound));
  // parity sets combine as sumsets in Z/2
  auto combine = [](unsigned a, unsigned b) {
    unsigned r = 0;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        if ((a >> x & 1) && (b >> y & 1)) r |= 1u << ((x + y) % 2);
    return r;
  };
  // Required primes (those dividing Delta) are all ramified, so each adds at
  // least p to the norm; they must be taken in increasing order.
  std::function<void(std::size_t, long, long, unsigned, const QIdeal&)> dfs =
      [&](std::size_t i, long norm, long req_left, unsigned par, const QIdeal& m) {
        if (req_left == 1) {
          ++bs.moduli_examined;
          if (par & 2u) {
            bs.found = true;
            bs.example = m;
            return;
          }
        }
        long next_req = req_left == 1 ? 0 : prime_divisors(req_left).front();
        for (std::size_t j = i; j < primes.size() && !bs.found; ++j) {
          long p = primes[j];
          if (next_req && p > next_req) break;
          bool req = p == next_req;
          long rest = req ? req_left / p : req_left;
          if (norm * p * rest > bound) {
            // optional primes no longer fit; jump to the next required one
            if (!next_req || req) break;
            while (j + 1 < primes.size() && primes[j + 1] < next_req) ++j;
            continue;
          }
          for (const auto& lm : local(p)) {
            if (norm * lm.norm * rest > bound || lm.parities == 0) continue;
            dfs(j + 1, norm * lm.norm, rest, combine(par, lm.parities), ideal_mul(E, m, lm.m));
            if (bs.found) return;
          }
        }
      };
  dfs(0, 1, req_norm, 1u, unit_ideal());
  return bs;
}

SurveyResult survey_higher_order(long ell, long conductor_norm_bound, int alternate) {
  if (ell % 2 == 0 || ell < 1) throw std::invalid_argument("survey_higher_order: ell must be odd and positive");
  SurveyResult res;
  for (long D : enumerate_discriminants(kSweepBound, 2)) {
    res.swept.push_back(D);
    FieldE E(D);
    ClassGroup cg = class_group(E, unit_ideal(), alternate);
    if (check_R1(E, cg, ell, 4).holds) {
      res.r1_holds_r4.push_back(D);
      if (mod_floor(D, 8) == 4) {
        QIdeal dE = minimal_conductor(E).d;
        res.rows.push_back(make_row(first_build(E, dE, ell, 4, std::nullopt, 2, alternate), Provenance::HighordR4));
      } else if (mod_floor(D, 8) == 0) {
        res.searches.push_back(order4_search(E, conductor_norm_bound));
      }
    }
    if (check_R1(E, cg, ell, 6).holds) {
      res.r1_holds_r6.push_back(D);
      QIdeal m = ideal_mul(E, factor_prime(E, 3).primes.at(0), minimal_conductor(E).d);
      res.rows.push_back(make_row(first_build(E, m, ell, 6, std::nullopt, 2, alternate), Provenance::HighordR6));
    }
  }
  sort_rows(res.rows);
  return res;
}

std::vector<TableEntry> group_rows(const std::vector<TableRow>& rows, int degree) {
  std::map<Int, TableEntry> by;
  for (const auto& r : rows) {
    if (r.degree != degree) continue;
    auto& e = by[r.delta_K];
    if (e.delta_E.empty()) {
      e.delta_K = r.delta_K;
      e.degree = degree;
      e.poly = r.poly;
    }
    if (std::find(e.delta_E.begin(), e.delta_E.end(), r.delta_E) == e.delta_E.end()) e.delta_E.push_back(r.delta_E);
  }
  std::vector<TableEntry> out;
  for (auto& [k, e] : by) {
    std::sort(e.delta_E.begin(), e.delta_E.end(), [](long a, long b) { return a > b; });
    out.push_back(std::move(e));
  }
  return out;
}

ClassificationTables classification_tables(long conductor_norm_bound) {
  ClassificationTables t;
  auto append = [&](std::vector<TableRow> rows) {
    for (auto& r : rows) t.rows.push_back(std::move(r));
  };
  append(survey_h1(1, 2));
  append(survey_h1(1, 3));
  append(survey_quadratic_modulus(2, 1).rows);
  append(survey_quadratic_modulus(3, 1).rows);
  append(survey_higher_order(1, conductor_norm_bound).rows);
  t.quadratic = group_rows(t.rows, 2);
  t.cubic = group_rows(t.rows, 3);
  return t;
}

}  // namespace grossen
