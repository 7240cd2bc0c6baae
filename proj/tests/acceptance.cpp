// Acceptance suite: every contract the library ships with, run at its
// standing bounds, one pass/fail line per criterion. Exits nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "bwf2/element.hpp"
#include "bwf2/endo.hpp"
#include "bwf2/verify.hpp"

using namespace bwf2;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] %2d. %s: %s\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  if (!pass) ++g_failures;
}

bool within(double elapsed, double budget) { return elapsed <= budget; }

std::string timing(double elapsed, double budget) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f s <= %.0f s", elapsed, budget);
  return buffer;
}

void criterion_associativity() {
  const auto start = std::chrono::steady_clock::now();
  const auto r = check_associativity(6, Family::f2());
  const double elapsed = seconds_since(start);
  const bool pass =
      r.ok() && r.checked == 941192 && within(elapsed, 10.0);
  report(1, "exhaustive associativity, window 6",
         pass,
         std::to_string(r.checked) + " triples, " +
             std::to_string(r.violation_total) + " violations, " +
             timing(elapsed, 10.0));
}

void criterion_pi_endomorphism() {
  const auto start = std::chrono::steady_clock::now();
  const auto r = check_pi_window(6);
  const double elapsed = seconds_since(start);
  // 98^2 homomorphism pairs plus the injectivity sweep
  const bool pass = r.ok() && r.checked == 9605 && within(elapsed, 1.0);
  report(2, "pi is an injective endomorphism on the window", pass,
         std::to_string(r.checked) + " checks, " +
             std::to_string(r.violation_total) + " violations, " +
             timing(elapsed, 1.0));
}

void criterion_pi_powers() {
  const auto r = check_pi_power_closed_form(6, 12);
  report(3, "closed-form powers of pi equal iteration up to 12", r.ok(),
         std::to_string(r.checked) + " checks, " +
             std::to_string(r.violation_total) + " violations");
}

void criterion_corners() {
  const auto r = check_corner_subsemigroups(4, 10);
  const Element probe(0, 0, 1);
  const bool counterexample =
      in_pi_power_image(probe, 1) &&
      !corner_membership(CornerDescriptor{1, 1}, probe);
  report(4, "corners match pi^(2s+p) images; exponent 2s-1 refuted at s=1",
         r.ok() && counterexample,
         std::to_string(r.checked) + " checks, " +
             std::to_string(r.violation_total) + " violations, " +
             std::string(counterexample ? "counterexample holds"
                                        : "counterexample missing"));
}

void criterion_factorization() {
  const auto start = std::chrono::steady_clock::now();
  const SweepRanges sweep{4, 5, 10};
  const auto r = check_factorization_uniqueness(sweep, 8);
  const double elapsed = seconds_since(start);
  const bool pass = r.ok() && within(elapsed, 30.0);
  report(5, "unique factorization over the sweep", pass,
         std::to_string(enumerate_normal_forms(sweep).size()) + " forms, " +
             std::to_string(r.violation_total) + " violations, " +
             timing(elapsed, 30.0));
}

void criterion_classification() {
  const auto r = check_classification(SweepRanges{4, 5, 10}, 8);
  report(6, "every sweep window classifies to its unique form", r.ok(),
         std::to_string(r.checked) + " windows, " +
             std::to_string(r.violation_total) + " violations");
}

void criterion_right_zero() {
  const auto r = check_minimal_ideal(SweepRanges{4, 5, 10});
  report(7, "annihilating forms are right zeros and the minimal ideal",
         r.ok(),
         std::to_string(r.checked) + " checks, " +
             std::to_string(r.violation_total) + " violations");
}

void criterion_family_oracle() {
  const auto start = std::chrono::steady_clock::now();
  const auto r = oracle_family_interval(8);
  const double elapsed = seconds_since(start);
  const bool pass = r.ok() && r.checked == 511 && within(elapsed, 1.0);
  report(8, "omega-closure oracle over all subsets of {0..8}", pass,
         std::to_string(r.checked) + " subsets, " +
             std::to_string(r.violation_total) + " violations, " +
             timing(elapsed, 1.0));
}

void criterion_inverse_structure() {
  const auto u = check_inverse_uniqueness(6);
  const auto i = check_idempotent_characterization(6);
  const auto n = check_natural_order(6);
  const auto g = check_green_relations(6);
  const bool pass = u.ok() && i.ok() && n.ok() && g.ok();
  report(9, "inverse-semigroup structure on the window", pass,
         std::to_string(u.checked + i.checked + n.checked + g.checked) +
             " checks, " +
             std::to_string(u.violation_total + i.violation_total +
                            n.violation_total + g.violation_total) +
             " violations");
}

EndoNormalForm random_form(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<Nat> power(0, 9);
  std::uniform_int_distribution<Nat> small(1, 9);
  const Nat n = power(rng);
  switch (kind(rng)) {
    case 0: {
      const Nat k = small(rng);
      return EndoNormalForm(
          Alpha{k, std::uniform_int_distribution<Nat>(0, k - 1)(rng)}, n);
    }
    case 1: {
      const Nat k = std::uniform_int_distribution<Nat>(2, 9)(rng);
      return EndoNormalForm(
          Beta{k, std::uniform_int_distribution<Nat>(1, k - 1)(rng)}, n);
    }
    case 2:
      return EndoNormalForm(Gamma{small(rng)}, n);
    case 3:
      return EndoNormalForm(Delta{small(rng)}, n);
    default:
      return EndoNormalForm(AnnUnit{}, n);
  }
}

void criterion_cli_round_trips() {
  std::mt19937_64 rng(20250811);
  std::uniform_int_distribution<Nat> coord(0, 1000000);
  std::uniform_int_distribution<Nat> tail(0, 1);
  bool pass = true;
  std::string detail;

  for (int c = 0; c < 100 && pass; ++c) {
    const Element x(coord(rng), coord(rng), tail(rng));
    const std::string text = format_element(x);
    if (parse_element(text) != x || format_element(parse_element(text)) != text) {
      pass = false;
      detail = "element round trip failed on " + text;
    }
  }

  for (int c = 0; c < 100 && pass; ++c) {
    const EndoNormalForm e = random_form(rng);
    const std::string text = format_endo(e);
    if (parse_endo_expression(text) != e ||
        format_endo(parse_endo_expression(text)) != text) {
      pass = false;
      detail = "normal form round trip failed on " + text;
    }
  }

  int verify_status = -1;
  if (pass) {
    const std::string command = std::string(BWF2_CLI_PATH) + " verify > /dev/null 2>&1";
    const int raw = std::system(command.c_str());
    verify_status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    if (verify_status != 0) {
      pass = false;
      detail = "CLI verify exited with " + std::to_string(verify_status);
    }
  }

  if (pass) detail = "200 round trips, CLI verify exit 0";
  report(10, "text round trips and the shipped verify gate", pass, detail);
}

}  // namespace

int main() {
  criterion_associativity();
  criterion_pi_endomorphism();
  criterion_pi_powers();
  criterion_corners();
  criterion_factorization();
  criterion_classification();
  criterion_right_zero();
  criterion_family_oracle();
  criterion_inverse_structure();
  criterion_cli_round_trips();

  if (g_failures == 0) {
    std::printf("all %d acceptance criteria hold\n", 10);
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
