// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "siegelchar/character.hpp"
#include "siegelchar/characteristic.hpp"
#include "siegelchar/symplectic.hpp"
#include "siegelchar/theta.hpp"

using namespace siegelchar;

namespace {

struct Outcome {
  bool passed = true;
  std::string summary;
  std::vector<std::string> notes;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

SymplecticMatrix random_level2(std::size_t g, std::size_t max_len, Engine& engine) {
  return word_to_matrix(random_word(g, 1 + draw_below(engine, max_len), engine));
}

Outcome generator_table() {
  const auto start = Clock::now();
  std::size_t checked = 0, mismatches = 0;
  for (std::size_t g = 1; g <= 3; ++g) {
    const auto all = enumerate_all_mod2(g);
    for (const auto& l : generator_alphabet(g)) {
      const auto gen = generator(l.kind, l.i, l.j, g);
      for (const auto& m : all) {
        ++checked;
        if (chi(m, gen) != chi_generator(m, l.kind, l.i, l.j)) ++mismatches;
      }
    }
  }
  const double t = seconds_since(start);
  return {mismatches == 0 && t < 10.0,
          fmt("%zu generator values, %zu mismatches, %.2fs (limit 10s)", checked, mismatches, t)};
}

Outcome homomorphism() {
  const auto start = Clock::now();
  std::size_t checked = 0, failures = 0;
  for (std::size_t g = 1; g <= 3; ++g) {
    Engine engine(2000 + g);
    const auto all = enumerate_all_mod2(g);
    for (int trial = 0; trial < 200; ++trial) {
      const auto m1 = random_level2(g, 8, engine);
      const auto m2 = random_level2(g, 8, engine);
      const auto prod = m1 * m2;
      for (const auto& m : all) {
        ++checked;
        if (chi(m, prod) != chi(m, m1) * chi(m, m2)) ++failures;
      }
    }
  }
  const double t = seconds_since(start);
  return {failures == 0 && t < 60.0,
          fmt("%zu (pair, m) checks, %zu failures, %.2fs (limit 60s)", checked, failures, t)};
}

Outcome triviality() {
  std::size_t elements = 0, not_member = 0, nontrivial = 0;
  for (std::size_t g = 1; g <= 3; ++g) {
    Engine engine(3000 + g);
    const auto all = enumerate_all_mod2(g);
    for (int trial = 0; trial < 200; ++trial) {
      const auto mm = random_igusa48(g, engine);
      ++elements;
      if (!is_igusa48(mm)) ++not_member;
      for (const auto& m : all)
        if (!chi(m, mm).is_one()) ++nontrivial;
    }
  }
  return {not_member == 0 && nontrivial == 0,
          fmt("%zu elements, %zu outside Gamma(4,8), %zu nontrivial values", elements, not_member,
              nontrivial)};
}

Outcome exponent_formula() {
  std::size_t words = 0, word_mismatch = 0, eval_mismatch = 0;
  for (std::size_t g = 1; g <= 3; ++g) {
    Engine engine(4000 + g);
    const auto all = enumerate_all_mod2(g);
    for (int trial = 0; trial < 100; ++trial) {
      const auto w = random_word(g, draw_below(engine, 17), engine);
      const auto mm = word_to_matrix(w);
      const auto e = extract_abelian_exponents(mm);
      ++words;
      for (const auto& m : all) {
        const auto value = chi(m, mm);
        if (chi_word(m, w) != value) ++word_mismatch;
        if (theorem34_eval(m, e) != value) ++eval_mismatch;
      }
    }
  }
  return {word_mismatch == 0 && eval_mismatch == 0,
          fmt("%zu words, chi_word mismatches %zu, exponent-formula mismatches %zu", words,
              word_mismatch, eval_mismatch)};
}

Outcome lemmas() {
  std::size_t samples = 0, shift = 0, orbit = 0, forms = 0;
  for (std::size_t g = 1; g <= 3; ++g) {
    Engine engine(5000 + g);
    for (int trial = 0; trial < 500; ++trial) {
      const auto mm = random_level2(g, 8, engine);
      const auto other = random_level2(g, 8, engine);
      IntVector flat(2 * g), moved(2 * g);
      for (std::size_t k = 0; k < 2 * g; ++k) {
        flat[k] = static_cast<long>(draw_below(engine, 9)) - 4;
        moved[k] = flat[k] + 2 * (static_cast<long>(draw_below(engine, 7)) - 3);
      }
      const auto m = Characteristic::from_flat(flat);
      const auto n = Characteristic::from_flat(moved);
      ++samples;
      const auto base = phi_level2(m, mm);
      if (phi_level2(n, mm) != base) ++shift;
      if (phi_level2(act(other, m), mm) != base) ++orbit;
      if (phi_full(m, mm) != base) ++forms;
    }
  }
  return {shift == 0 && orbit == 0 && forms == 0,
          fmt("%zu samples; shift failures %zu, orbit failures %zu, full/level-2 disagreements %zu",
              samples, shift, orbit, forms)};
}

Outcome equivalence() {
  Outcome out;
  std::size_t pool = 0, discrepancies = 0, sign_twists = 0, signed_mismatch = 0;
  std::vector<std::size_t> per_g;
  for (std::size_t g = 1; g <= 2; ++g) {
    Engine engine(6000 + g);
    std::vector<SymplecticMatrix> elements;
    for (int k = 0; k < 120; ++k) elements.push_back(random_level2(g, 8, engine));
    for (int k = 0; k < 100; ++k) elements.push_back(random_igusa48(g, engine));
    // Near misses: congruent to I mod 4 with one diagonal entry of (a b^t)_0
    // or (c d^t)_0 equal to 4 mod 8.
    for (int k = 0; k < 100; ++k) {
      const int i = 1 + static_cast<int>(draw_below(engine, g));
      const auto kind = (engine() & 1U) ? GeneratorKind::B : GeneratorKind::C;
      const long e = (engine() & 1U) ? 2 : -2;
      elements.push_back(power(generator(kind, i, i, g), e) * random_igusa48(g, engine));
    }
    std::size_t here = 0;
    for (const auto& mm : elements) {
      ++pool;
      const bool constant = is_chi_constant_over_even(mm);
      if (constant != is_igusa48_up_to_sign(mm)) ++signed_mismatch;
      if (constant == is_igusa48(mm)) continue;
      ++discrepancies;
      ++here;
      const auto neg = make_matrix(-mm.entries());
      if (is_igusa48(neg)) ++sign_twists;
      if (out.notes.size() < 3) {
        std::ostringstream os;
        os << "g=" << g << " constant=" << constant << " igusa48=" << is_igusa48(mm)
           << " -M in Gamma(4,8)=" << is_igusa48(neg) << " M=" << mm.entries();
        std::string line = os.str();
        for (auto& c : line)
          if (c == '\n') c = ' ';
        out.notes.push_back(line);
      }
    }
    per_g.push_back(here);
  }
  out.passed = discrepancies == 0;
  out.summary = fmt("pool %zu, discrepancies %zu (g=1: %zu, g=2: %zu), of which -M in Gamma(4,8): %zu",
                    pool, discrepancies, per_g[0], per_g[1], sign_twists);
  out.notes.push_back(fmt("info: constancy <=> M or -M in Gamma(4,8) disagrees on %zu of %zu",
                          signed_mismatch, pool));
  return out;
}

Outcome numeric() {
  const auto start = Clock::now();
  Outcome out;
  std::size_t samples = 0, failures = 0;
  double worst_dev = 0.0, worst_mod = 0.0, worst_pow = 0.0;
  auto run = [&](std::size_t g, int count, double tol) {
    Engine engine(7000 + g);
    for (int trial = 0; trial < count; ++trial) {
      const auto mm = random_level2(g, 4, engine);
      const auto tau = random_siegel_point(g, engine);
      ++samples;
      bool ok = false;
      try {
        const auto r = verify_character(mm, tau, tol, 1e-12);
        const double pow_err = std::abs(std::pow(r.estimated_unit, 8) - 1.0);
        worst_dev = std::max(worst_dev, r.max_deviation);
        worst_mod = std::max(worst_mod, r.modulus_error);
        worst_pow = std::max(worst_pow, pow_err);
        ok = r.max_deviation < tol && r.modulus_error < tol && pow_err < 10 * tol;
      } catch (const std::exception& e) {
        out.notes.push_back(fmt("g=%zu sample %d: %s", g, trial, e.what()));
      }
      if (!ok) ++failures;
    }
  };
  run(1, 50, 1e-6);
  run(2, 50, 1e-6);
  run(3, 5, 1e-5);
  const double t = seconds_since(start);
  out.passed = failures == 0 && t < 300.0;
  out.summary = fmt("%zu samples, %zu failures, max dev %.2e, max ||s|-1| %.2e, max |s^8-1| %.2e, %.1fs (limit 300s)",
                    samples, failures, worst_dev, worst_mod, worst_pow, t);
  return out;
}

Outcome classical() {
  double oracle = 0.0;
  for (int p = -30; p <= 30; ++p) oracle += std::exp(-std::numbers::pi * p * p);
  const auto tau = SiegelPoint::imaginary_identity(1);
  const Complex t00 = theta_constant(Characteristic::from_flat({0, 0}), tau, 1e-12);
  const Complex t11 = theta_constant(Characteristic::from_flat({1, 1}), tau, 1e-12);
  const double err = std::abs(t00 - oracle);
  return {err < 1e-9 && std::abs(t11) < 1e-10,
          fmt("theta_00(i) = %.12f, oracle %.12f, error %.1e; |theta_11(i)| = %.1e", t00.real(),
              oracle, err, std::abs(t11))};
}

Outcome igusa_product() {
  Engine engine(9001);
  const auto tau = SiegelPoint::imaginary_identity(1);
  const auto evens = enumerate_even_mod2(1);
  std::size_t failures = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto mm = random_level2(1, 8, engine);
    const auto& m = evens[draw_below(engine, evens.size())];
    const auto& n = evens[draw_below(engine, evens.size())];
    const auto r = verify_igusa_product(m, n, mm, tau, 1e-6, 1e-12);
    worst = std::max(worst, r.max_deviation);
    if (!r.passed || r.max_deviation >= 1e-6) ++failures;
  }
  return {failures == 0, fmt("20 samples, %zu failures, max deviation %.2e", failures, worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"generator value table", generator_table},
      {"character property", homomorphism},
      {"triviality on Gamma(4,8)", triviality},
      {"exponent formula end to end", exponent_formula},
      {"phase congruences", lemmas},
      {"constancy over even m <=> Gamma(4,8)", equivalence},
      {"numeric transformation", numeric},
      {"classical theta values", classical},
      {"Igusa product character", igusa_product},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %zu (%s): %s\n", o.passed ? "PASS" : "FAIL", k + 1,
                criteria[k].first, o.summary.c_str());
    for (const auto& note : o.notes) std::printf("       %s\n", note.c_str());
    std::fflush(stdout);
    failed += o.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
