#include <gtest/gtest.h>

#include "grossen/serialize.hpp"

using namespace grossen;

TEST(RunConfig, RoundTrip) {
  RunConfig c;
  c.command = "qexp";
  c.delta = -23;
  c.ell = 3;
  c.modulus = "7*dE";
  c.order = 2;
  c.eta_index = 1;
  c.bound = 500;
  c.output = "out.json";
  c.precision_bits = 512;
  Json j = to_json(c);
  RunConfig d = run_config_from_json(Json::parse(j.dump()));
  EXPECT_EQ(to_json(d), j);
  EXPECT_EQ(d.delta, -23);
  EXPECT_EQ(d.modulus, "7*dE");
  EXPECT_EQ(d.precision_bits, 512);
  // integers travel as strings
  EXPECT_TRUE(j["delta"].is_string());
}

TEST(RunConfig, MissingKeyThrows) {
  Json j = to_json(RunConfig{});
  j.erase("bound");
  EXPECT_THROW(run_config_from_json(j), nlohmann::json::exception);
}

TEST(ParseModulus, Tokens) {
  FieldE E(-4);
  EXPECT_EQ(parse_modulus(E, "dE"), minimal_conductor(E).d);
  EXPECT_EQ(parse_modulus(E, "7*dE").norm(), Rat(49 * 8));
  EXPECT_EQ(parse_modulus(E, "2^3"), rational_ideal(Rat(8)));
  EXPECT_EQ(parse_modulus(E, "gen:1,1"), factor_prime(E, 2).primes[0]);
  EXPECT_EQ(parse_modulus(E, "2*gen:1,1"), minimal_conductor(E).d);
  EXPECT_EQ(parse_modulus(E, "p:5:1"), factor_prime(E, 5).primes[1]);
  EXPECT_EQ(parse_modulus(E, "p:5^2*p:3"),
            ideal_mul(E, ideal_pow(E, factor_prime(E, 5).primes[0], 2), rational_ideal(Rat(3))));
  QIdeal P = factor_prime(E, 5).primes[0];
  std::string hnf = "hnf:" + P.a.get_str() + "," + P.b.get_str() + ",1";
  EXPECT_EQ(parse_modulus(E, hnf), P);
}

TEST(ParseModulus, Rejects) {
  FieldE E(-4);
  for (const char* bad : {"", "x", "p:4", "p:3:1", "gen:0,0", "3^-1", "0", "-2", "hnf:0,0,1", "gen:1"})
    EXPECT_THROW(parse_modulus(E, bad), std::invalid_argument) << bad;
}

TEST(Json, IdealRoundTrip) {
  FieldE E(-23);
  for (long p : {2L, 3L, 13L}) {
    QIdeal P = factor_prime(E, p).primes[0];
    EXPECT_EQ(ideal_from_json(to_json(P)), P);
    QIdeal inv = ideal_inv(E, P);
    EXPECT_EQ(ideal_from_json(to_json(inv)), inv);
  }
}

TEST(Json, NumericNoiseFlushedToZero) {
  Complex z(Real(1e-60), Real(2.5));
  Json j = to_json(z);
  EXPECT_EQ(j[0], "0");
  EXPECT_EQ(j[1].get<std::string>().substr(0, 3), "2.5");
}

TEST(Json, DeterministicCharacterDump) {
  auto make = [] {
    FieldE E(-23);
    EtaQuery q;
    q.weight = 1;
    QIdeal m = minimal_conductor(E).d;
    return build(E, m, 1, enumerate_eta(E, m, q).at(0));
  };
  EXPECT_EQ(to_json(make()).dump(), to_json(make()).dump());
  Json f = to_json(q_expansion(make(), 30));
  EXPECT_EQ(f["header"]["level"], "529");
  EXPECT_EQ(f["coeffs"].size(), 30u);
  EXPECT_EQ(f["coeffs"][0]["value"][0], "1");
}
