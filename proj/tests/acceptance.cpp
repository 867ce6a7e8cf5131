// Runs each acceptance criterion once and prints one PASS/FAIL line for it.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "golden.hpp"
#include "unbias/dsl.hpp"
#include "unbias/generators.hpp"
#include "unbias/laws.hpp"

using namespace unbias;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome from_report(const LawReport& r) {
  std::ostringstream s;
  s << r.cases << " checks, " << r.failed << " failed";
  for (const std::string& v : r.violations) s << "\n    " << v;
  return {r.ok() && r.cases > 0, s.str()};
}

Outcome merged(std::initializer_list<LawReport> reports) {
  LawReport all("merged");
  for (const LawReport& r : reports) all.merge(r);
  return from_report(all);
}

Outcome cli_criterion() {
  std::size_t golden_failed = 0;
  std::ostringstream s;
  const auto cases = golden::load(GOLDEN_DIR);
  for (const auto& c : cases)
    if (golden::run(c) != c.expected) {
      ++golden_failed;
      s << "\n    golden " << c.name << " differs";
    }
  Rng rng(kSeed);
  const auto names = generator_names(5);
  std::size_t trip_failed = 0;
  for (int i = 0; i < 1000; ++i) {
    const MorTerm t = random_mor_term(rng, names, 4);
    try {
      if (!(parse_mor(render(t)) == t)) ++trip_failed;
    } catch (const Error& e) {
      ++trip_failed;
      s << "\n    " << e.what();
    }
  }
  std::ostringstream head;
  head << cases.size() << " golden cases (" << golden_failed << " differ), 1000 round trips (" << trip_failed
       << " failed)";
  return {!cases.empty() && golden_failed == 0 && trip_failed == 0, head.str() + s.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Coxeter suite (S_n exhaustive n<=6, 1000 random n<=8, exchange n<=6)",
       [] { return merged({coxeter_suite(6, 8, 1000, kSeed), exchange_suite(6)}); }},
      {"Faithfulness suite (1000 GenWords per list length <= 8)",
       [] { return from_report(faithfulness_suite(8, 1000, kSeed)); }},
      {"Coherence suite (1000 terms over 5 generators)", [] { return from_report(coherence_suite(1000, 5, kSeed)); }},
      {"Braiding oracle (|x|+|y| <= 8)", [] { return from_report(braiding_suite(8, kSeed)); }},
      {"Span bicategory suite (adjunction, triangle, interchange exhaustive over sets <= 3; pentagon over sets <= 2, "
       "and sets <= 3 with apex <= 1; 1000 random size <= 5)",
       [] { return from_report(span_suite(3, 5, 1000, kSeed)); }},
      {"Kleisli suite (duality exhaustive |I|,|K| <= 3 lists <= 3; composite multiset exhaustive through sets <= 2, "
       "and |I| <= 1 through sets <= 3; 1000 random size <= 5)",
       [] { return from_report(kleisli_suite(3, 5, 1000, kSeed)); }},
      {"PBC suite (laws and linearity exhaustive over squares with sets <= 3; pseudofunctor laws on single "
       "spans over sets <= 3, pairs with apex <= 2, triples over sets <= 2 with apex <= 1; 1000 random size <= 5)",
       [] { return from_report(pbc_suite(3, 5, 1000, kSeed)); }},
      {"Main theorem suite (fibers and unit laws exhaustive over sets <= 3, pairs over sets <= 3 with apex <= 2, "
       "triples over sets <= 2 with apex <= 1; 1000 random pairs and triples)",
       [] { return from_report(main_theorem_suite(3, 1000, kSeed)); }},
      {"CLI (golden files, 1000 parse/render round trips)", cli_criterion},
  };

  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, {}};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("uncaught: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << name << ": " << o.detail << " [" << ms << " ms]" << std::endl;
  }
  const auto total =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (all ? "all criteria pass" : "some criteria fail") << " in " << total << " ms" << std::endl;
  return all ? 0 : 1;
}
