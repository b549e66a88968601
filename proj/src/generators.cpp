#include "redform/generators.hpp"

#include <random>
#include <string>

namespace redform {

std::array<Rational, 4> independent_to_correlated(const Rational& q1A,
                                                  const Rational& q1B) {
  if (q1A < 0 || q1A > 1 || q1B < 0 || q1B > 1)
    throw OutOfRange("item lottery outside [0,1]");
  Rational q2A = 1 - q1A, q2B = 1 - q1B;
  return {q1A * q1B, q1A * q2B, q1B * q2A, q2A * q2B};
}

std::optional<std::pair<Rational, Rational>> product_form_decomposition(
    const std::array<Rational, 4>& p) {
  // If p is a product lottery, marginalizing over the other item forces
  // q1A = p0 + p1 and q1B = p0 + p2.
  Rational q1A = p[0] + p[1], q1B = p[0] + p[2];
  if (q1A < 0 || q1A > 1 || q1B < 0 || q1B > 1) return std::nullopt;
  auto back = independent_to_correlated(q1A, q1B);
  if (back != p) return std::nullopt;
  return std::make_pair(q1A, q1B);
}

namespace {

std::vector<Rational> uniform_prior(int n) {
  return std::vector<Rational>(n, Rational(1, n));
}

std::vector<std::string> labels(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

}  // namespace

Instance gen_package_exchange(int t2_size) {
  if (t2_size < 2) throw OutOfRange("package exchange needs |T2| >= 2");
  Instance inst;
  inst.alternatives = {"AB|-", "A|B", "B|A", "-|AB"};
  inst.k0 = 1;  // no trade
  inst.t1 = labels("s", 2);
  inst.t2 = labels("t", t2_size);
  inst.lambda1 = uniform_prior(2);
  inst.lambda2 = uniform_prior(t2_size);
  return inst;
}

Instance gen_compromise() {
  Instance inst;
  inst.alternatives = {"k0", "k1", "k2"};
  inst.k0 = 0;
  inst.t1 = {"strong1", "weak1"};
  inst.t2 = {"strong2", "weak2"};
  inst.lambda1 = uniform_prior(2);
  inst.lambda2 = uniform_prior(2);
  return inst;
}

namespace {

// Engine outputs only; distribution helpers are hand-rolled so that the
// stream is identical across standard library implementations.
int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % (hi - lo + 1));
}

std::vector<Rational> random_prior(int n, std::mt19937_64& rng) {
  std::vector<int> w(n);
  Rational total(0);
  for (auto& x : w) {
    x = draw(rng, 1, 9);
    total += x;
  }
  std::vector<Rational> out;
  for (int x : w) out.push_back(Rational(x) / total);
  return out;
}

}  // namespace

Instance gen_random_instance(int t2_size, int n_alts, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.alternatives = labels("k", n_alts);
  inst.alternatives[0] = "k0";
  inst.k0 = 0;
  inst.t1 = labels("u", 2);
  inst.t2 = labels("v", t2_size);
  inst.lambda1 = random_prior(2, rng);
  inst.lambda2 = random_prior(t2_size, rng);
  return inst;
}

ExPostRule gen_random_expost(const Instance& inst, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ExPostRule q(inst.nk(), inst.n1(), inst.n2());
  for (int i1 = 0; i1 < inst.n1(); ++i1)
    for (int i2 = 0; i2 < inst.n2(); ++i2) {
      std::vector<int> w(inst.nk());
      Rational total(0);
      for (auto& x : w) {
        x = draw(rng, 0, 9);
        total += x;
      }
      if (total == 0) {
        w[0] = 1;
        total = 1;
      }
      for (int k = 0; k < inst.nk(); ++k)
        q.at(k, i1, i2) = Rational(w[k]) / total;
    }
  return q;
}

InterimRule gen_random_interim(const Instance& inst, std::uint64_t seed,
                               InterimMode mode) {
  std::mt19937_64 rng(seed);
  InterimRule q(inst.nk(), inst.n1(), inst.n2(), true);
  for (int i1 = 0; i1 < inst.n1(); ++i1) {
    std::vector<int> w(inst.nk());
    Rational total(0);
    for (auto& x : w) {
      x = draw(rng, 0, 9);
      total += x;
    }
    if (total == 0) {
      w[inst.k0] = 1;
      total = 1;
    }
    for (int k = 0; k < inst.nk(); ++k) q.at1(k, i1) = Rational(w[k]) / total;
  }
  for (int i2 = 0; i2 < inst.n2(); ++i2) {
    std::vector<int> w(inst.nk());
    Rational total(0);
    for (auto& x : w) {
      x = draw(rng, 0, 9);
      total += x;
    }
    if (total == 0) {
      w[inst.k0] = 1;
      total = 1;
    }
    for (int k = 0; k < inst.nk(); ++k) q.at2(k, i2) = Rational(w[k]) / total;
  }
  if (mode == InterimMode::Cone) {
    for (int k : inst.kstar()) {
      Rational s1(0), s2(0);
      for (int i1 = 0; i1 < inst.n1(); ++i1)
        s1 += q.at1(k, i1) * inst.lambda1[i1];
      for (int i2 = 0; i2 < inst.n2(); ++i2)
        s2 += q.at2(k, i2) * inst.lambda2[i2];
      if (s2 == 0) {
        if (s1 != 0) {
          // push the mismatch onto player 2's first type
          q.at2(k, 0) = s1 / inst.lambda2[0];
        }
        continue;
      }
      Rational scale = s1 / s2;
      for (int i2 = 0; i2 < inst.n2(); ++i2) q.at2(k, i2) *= scale;
    }
    q = complete_with_slack(inst, q);
  }
  return q;
}

}  // namespace redform
