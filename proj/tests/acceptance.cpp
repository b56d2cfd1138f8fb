// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "transemi/closure.hpp"
#include "transemi/generators.hpp"
#include "transemi/representation.hpp"
#include "transemi/trans_system.hpp"

using namespace transemi;

namespace {

// Pinned thresholds.
constexpr std::uint64_t kFirstSeed = 1000;
constexpr std::size_t kGenerated = 100;
constexpr std::size_t kMaxPoints = 4;
constexpr std::size_t kMaxMaps = 4;
constexpr std::size_t kCap = 64;
constexpr double kNecessitySeconds = 60.0;
constexpr double kRoundTripSeconds = 120.0;
constexpr std::size_t kRoundTripMaxSize = 12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void line(int n, bool pass, const std::string& what, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << "  " << what << "  (" << detail << ")"
            << std::endl;
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return c.id + (c.witnesses.empty() ? "" : " " + c.witnesses[0].to_string());
  return {};
}

std::string run(const std::string& cmd) {
  std::array<char, 4096> buf;
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

std::vector<Bitset> nonempty_subsets(std::size_t m) {
  std::vector<Bitset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) out.push_back(Bitset::from_mask(m, mask));
  return out;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const auto generated = generate_corpus(kFirstSeed, kGenerated, kMaxPoints, kMaxMaps, kCap);
  std::vector<AbstractSystem> encoded;
  for (const auto& g : generated) encoded.push_back(to_abstract(g.system));

  // Abstract corpus: encoded systems plus every valid system on at most three
  // elements, one per isomorphism class.
  std::vector<AbstractSystem> corpus = encoded;
  std::size_t enumerated = 0;
  for (std::size_t m = 1; m <= 3; ++m)
    for (auto& s : up_to_isomorphism(enumerate_systems(m, true))) {
      corpus.push_back(std::move(s));
      ++enumerated;
    }
  std::cout << "corpus: " << generated.size() << " generated transformation systems, " << enumerated
            << " enumerated abstract systems (setup " << seconds_since(start) << " s)" << std::endl;

  {
    auto t0 = Clock::now();
    std::size_t bad = 0;
    std::string example;
    for (std::size_t i = 0; i < generated.size(); ++i) {
      Report r = validate(encoded[i]);
      r.append(derived_props(encoded[i]));
      r.append(check_axiom_schemes(encoded[i]));
      r.append(check_lemma1(generated[i].system));
      if (!r.ok()) {
        ++bad;
        if (example.empty()) example = "seed " + std::to_string(generated[i].seed) + ": " + first_failure(r);
      }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << bad << " failing of " << generated.size() << ", " << secs << " s, limit " << kNecessitySeconds << " s";
    if (!example.empty()) d << "; " << example;
    line(1, bad == 0 && secs < kNecessitySeconds, "necessity on generated systems", d.str());
  }

  {
    auto t0 = Clock::now();
    std::size_t bad = 0, checked = 0;
    std::string example;
    for (std::size_t i = 0; i < generated.size(); ++i) {
      if (encoded[i].size() > kRoundTripMaxSize) continue;
      ++checked;
      Report r = verify_theorem(encoded[i]);
      if (!r.ok()) {
        ++bad;
        if (example.empty()) example = "seed " + std::to_string(generated[i].seed) + ": " + first_failure(r);
      }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << bad << " failing of " << checked << " with |G| <= " << kRoundTripMaxSize << ", " << secs << " s, limit "
      << kRoundTripSeconds << " s";
    if (!example.empty()) d << "; " << example;
    line(2, bad == 0 && checked > 0 && secs < kRoundTripSeconds, "round trip through the representation", d.str());
  }

  {
    auto t0 = Clock::now();
    std::size_t disagree = 0, systems = 0, sets = 0;
    for (const auto& sys : corpus) {
      if (sys.size() > 4) continue;
      ++systems;
      ClosureEngine engine(sys);
      for (const auto& h : nonempty_subsets(sys.size())) {
        ++sets;
        if (f_closure(engine, h, false).closed_set != least_closed_oracle(sys, h)) ++disagree;
        if (is_closed(sys, h, ClosedMethod::implication) != is_closed(sys, h, ClosedMethod::four_conditions))
          ++disagree;
      }
    }
    std::ostringstream d;
    d << disagree << " disagreements over " << systems << " systems, " << sets << " sets, " << seconds_since(t0)
      << " s";
    line(3, disagree == 0 && systems > 0, "closure equals the least closed superset", d.str());
  }

  {
    auto t0 = Clock::now();
    std::size_t disagree = 0, systems = 0, queries = 0;
    for (const auto& sys : corpus) {
      if (sys.size() > 3) continue;
      ++systems;
      ClosureEngine engine(sys);
      for (const auto& h : nonempty_subsets(sys.size())) {
        Bitset iter = h;
        for (std::size_t n = 1; n <= 2; ++n) {
          iter = engine.step(iter);
          for (Elem z = 0; z < sys.size(); ++z) {
            ++queries;
            if (xn_member_direct(sys, z, h, n).member != iter.test(z)) ++disagree;
          }
        }
      }
    }
    std::ostringstream d;
    d << disagree << " disagreements over " << systems << " systems, " << queries << " queries, "
      << seconds_since(t0) << " s";
    line(4, disagree == 0 && systems > 0, "witness trees for one and two steps", d.str());
  }

  {
    auto t0 = Clock::now();
    std::size_t disagree = 0, tables = 0, pairs = 0, both_false = 0;
    for (std::size_t m = 1; m <= 3; ++m)
      for (const auto& base : enumerate_distributive_tables(m)) {
        ++tables;
        for (const auto& dp : enumerate_determining_pairs(base)) {
          ++pairs;
          auto sides = meet_sides(base, dp);
          if (sides.meet_preserved != sides.class_conditions) ++disagree;
          if (!sides.meet_preserved && !sides.class_conditions) ++both_false;
        }
      }
    std::ostringstream d;
    d << disagree << " disagreements over " << tables << " tables, " << pairs << " pairs (" << both_false
      << " with both sides false), " << seconds_since(t0) << " s";
    line(5, disagree == 0 && both_false > 0, "meet preservation iff class conditions", d.str());
  }

  {
    auto t0 = Clock::now();
    std::size_t bad = 0, pairs = 0, systems = 0;
    for (const auto& sys : corpus) {
      if (sys.size() > kRoundTripMaxSize) continue;
      PairClosures pc(sys);
      if (!check_axiom_schemes(pc).ok()) continue;
      ++systems;
      for (Elem a = 0; a < sys.size(); ++a)
        for (Elem b = 0; b < sys.size(); ++b) {
          ++pairs;
          if (!check_prop1(sys, eps_pair(pc, a, b)).ok()) ++bad;
        }
    }
    std::ostringstream d;
    d << bad << " mismatching of " << pairs << " pairs on " << systems << " systems, " << seconds_since(t0) << " s";
    line(6, bad == 0 && pairs > 0, "simplest representation relations", d.str());
  }

  {
    auto t0 = Clock::now();
    std::size_t violations = 0;
    for (std::size_t i = 0; i < generated.size(); ++i) {
      PairClosures pc(encoded[i]);
      for (const auto& c : check_domain_meet_small(generated[i].system, pc).checks) violations += c.violations;
    }
    std::ostringstream d;
    d << violations << " violations over " << generated.size() << " systems, " << seconds_since(t0) << " s";
    line(7, violations == 0, "domains of closure members", d.str());
  }

  {
    auto t0 = Clock::now();
    std::size_t violations = 0;
    for (const auto& sys : corpus) {
      const auto m = static_cast<Elem>(sys.size());
      PairClosures pc(sys);
      for (Elem x = 0; x < m; ++x)
        for (Elem y = x; y < m; ++y) {
          const Bitset& f = pc.of(x, y);
          if (pc.rounds(x, y) > m) ++violations;
          auto chain = f_closure(pc.engine(), Bitset::of(m, {x, y}), false).chain;
          for (std::size_t k = 1; k < chain.size(); ++k)
            if (!chain[k - 1].is_subset_of(chain[k])) ++violations;
          for (Elem g = 0; g < m; ++g)
            for (Elem u = 0; u < m; ++u) {
              if (!f.test(g) && f.test(sys.mul(g, u))) ++violations;
              if (f.test(g) && sys.leq(g, u) && !f.test(u)) ++violations;
              if (f.test(g) && f.test(u) && sys.xi(g, u) && !f.test(sys.meet(g, u))) ++violations;
            }
        }
    }
    std::ostringstream d;
    d << violations << " violations over " << corpus.size() << " systems, " << seconds_since(t0) << " s";
    line(8, violations == 0, "structure of pair closures", d.str());
  }

  {
    auto t0 = Clock::now();
    const std::string cli = TRANSEMI_CLI;
    const std::string data = TRANSEMI_TEST_DATA;
    std::vector<std::string> commands{
        cli + " generate --seed 7 --points 3 --maps 2",
        cli + " generate --seed 11 --kind abstract --size 3 --format machine",
        cli + " roundtrip --seed 5 --points 4 --maps 3 --format machine",
    };
    for (const char* file : {"s1.json", "s1_no_delta.json", "compat_fail.json", "delta0_id.json"})
      for (const char* cmd : {"analyze", "check", "represent"})
        for (const char* fmt : {"text", "machine"})
          commands.push_back(cli + " " + cmd + " --input " + data + "/" + file + " --format " + fmt +
                             " --oracle on --pairs-parallel on");
    std::size_t differ = 0;
    std::string example;
    for (const auto& c : commands) {
      auto a = run(c + " 2>&1"), b = run(c + " 2>&1");
      if (a != b || a.empty()) {
        ++differ;
        if (example.empty()) example = c;
      }
    }
    std::ostringstream d;
    d << differ << " of " << commands.size() << " commands differ, " << seconds_since(t0) << " s";
    if (!example.empty()) d << "; " << example;
    line(9, differ == 0, "byte-identical reruns", d.str());
  }

  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << " (" << seconds_since(start)
            << " s)" << std::endl;
  return failures == 0 ? 0 : 1;
}
