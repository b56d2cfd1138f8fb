#include "transemi/commands.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "transemi/closure.hpp"
#include "transemi/error.hpp"
#include "transemi/generators.hpp"
#include "transemi/representation.hpp"
#include "transemi/trans_system.hpp"

namespace transemi {

namespace {

struct Resolved {
  std::optional<TransSystem> concrete;
  AbstractSystem abstract;
};

Resolved resolve(const InstanceFile& inst, const CommandOptions& opts) {
  if (const auto* sys = std::get_if<AbstractSystem>(&inst.body)) return Resolved{std::nullopt, *sys};
  const auto& t = std::get<TransformationsInstance>(inst.body);
  if (t.maps.empty()) throw InputError("transformations instance has no maps");
  TransSystem concrete = TransSystem::generate(t.maps, opts.cap);
  AbstractSystem abs = to_abstract(concrete);
  return Resolved{std::move(concrete), std::move(abs)};
}

// Runs fn and, when timings are on, stamps every check it added.
void timed(Report& into, const CommandOptions& opts, const std::function<Report()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Report r = fn();
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (opts.timings)
    for (auto& c : r.checks) c.millis = ms;
  into.append(r);
}

Report oracle_checks(const AbstractSystem& sys) {
  Report r;
  r.title = "oracle cross-checks";
  const auto m = static_cast<Elem>(sys.size());
  auto& closure = r.add("oracle-least-closed");
  auto& methods = r.add("oracle-closed-methods");
  auto& tree = r.add("oracle-witness-tree");
  if (m > oracle_budget() || m > 20) {
    closure.detail = methods.detail = "skipped: |G| exceeds oracle budget " + std::to_string(oracle_budget());
  } else {
    const ClosureEngine engine(sys);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      const Bitset h = Bitset::from_mask(m, mask);
      const Bitset fast = f_closure(engine, h, false).closed_set;
      const Bitset slow = least_closed_oracle(sys, h);
      if (fast != slow)
        closure.fail(Witness{{{"H", h.to_string()}}, "fixpoint " + fast.to_string() + " vs oracle " + slow.to_string()});
      const bool a = is_closed(sys, h, ClosedMethod::implication);
      const bool b = is_closed(sys, h, ClosedMethod::four_conditions);
      if (a != b) methods.fail(Witness{{{"H", h.to_string()}}, a ? "closed by implication only" : "closed by conditions only"});
    }
  }
  if (m > 3) {
    tree.detail = "skipped: direct witness-tree search limited to |G| <= 3 here";
  } else {
    const ClosureEngine engine(sys);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      const Bitset h = Bitset::from_mask(m, mask);
      Bitset iter = h;
      for (std::size_t n = 1; n <= 2; ++n) {
        iter = engine.step(iter);
        for (Elem z = 0; z < m; ++z)
          if (xn_member_direct(sys, z, h, n).member != iter.test(z))
            tree.fail(Witness{{{"z", elem_name(sys, z)}, {"H", h.to_string()}, {"n", std::to_string(n)}}, {}});
      }
    }
  }
  return r;
}

std::string describe_system(const AbstractSystem& sys, const PairClosures& closures) {
  const auto m = static_cast<Elem>(sys.size());
  std::size_t max_rounds = 0;
  for (Elem x = 0; x < m; ++x)
    for (Elem y = x; y < m; ++y) max_rounds = std::max(max_rounds, closures.rounds(x, y));
  std::string s;
  s += "elements: " + std::to_string(m) + "\n";
  s += "order pairs: " + std::to_string(natural_order(sys).count()) + "\n";
  s += "xi pairs: " + std::to_string(sys.xi_matrix().count()) + "\n";
  s += "delta pairs: " + std::to_string(sys.delta_matrix().count()) + "\n";
  s += "max closure rounds (pairs): " + std::to_string(max_rounds) + "\n";
  for (Elem x = 0; x < m; ++x) s += "closure {" + elem_name(sys, x) + "}: " + closures.of(x).to_string() + "\n";
  return s;
}

nlohmann::json representation_json(const AbstractSystem& sys, const Representation& rep) {
  nlohmann::json j;
  auto& carrier = j["carrier"] = nlohmann::json::array();
  for (const auto& p : rep.carrier) carrier.push_back(p.to_string(sys));
  auto& maps = j["maps"] = nlohmann::json::array();
  for (const auto& f : rep.maps) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : f.pairs()) pairs.push_back({a, b});
    maps.push_back(std::move(pairs));
  }
  return j;
}

}  // namespace

CommandResult cmd_analyze(const InstanceFile& inst, const CommandOptions& opts) {
  const Resolved r = resolve(inst, opts);
  CommandResult out;
  out.report.title = "analyze";
  if (r.concrete) {
    out.body += "base size: " + std::to_string(r.concrete->base_size()) + "\n";
    for (std::size_t i = 0; i < r.concrete->size(); ++i)
      out.body += "map " + std::to_string(i) + ": " + (*r.concrete)[i].to_string() + "\n";
  }
  Report hyp = validate(r.abstract);
  out.report.append(hyp);
  if (hyp.ok()) {
    const PairClosures closures(r.abstract, opts.pairs_parallel);
    out.body += describe_system(r.abstract, closures);
    auto& chain = out.report.add("closure-stabilization");
    for (Elem x = 0; x < r.abstract.size(); ++x)
      for (Elem y = x; y < r.abstract.size(); ++y)
        if (closures.rounds(x, y) > r.abstract.size())
          chain.fail(Witness{{{"x", elem_name(r.abstract, x)}, {"y", elem_name(r.abstract, y)}},
                             std::to_string(closures.rounds(x, y)) + " rounds"});
  }
  out.body_json["summary"] = out.body;
  return out;
}

CommandResult cmd_check(const InstanceFile& inst, const CommandOptions& opts) {
  const Resolved r = resolve(inst, opts);
  CommandResult out;
  out.report.title = "check";
  Report hyp;
  timed(out.report, opts, [&] {
    hyp = validate(r.abstract);
    return hyp;
  });
  if (hyp.ok()) {
    timed(out.report, opts, [&] { return derived_props(r.abstract); });
    const PairClosures closures(r.abstract, opts.pairs_parallel);
    timed(out.report, opts, [&] { return check_axiom_schemes(closures); });
    if (r.concrete) {
      timed(out.report, opts, [&] { return check_lemma1(*r.concrete); });
      timed(out.report, opts, [&] { return check_domain_meet_small(*r.concrete, closures); });
    }
    if (opts.oracle) timed(out.report, opts, [&] { return oracle_checks(r.abstract); });
  } else if (r.concrete) {
    timed(out.report, opts, [&] { return check_lemma1(*r.concrete); });
  }
  return out;
}

CommandResult cmd_represent(const InstanceFile& inst, const CommandOptions& opts) {
  const Resolved r = resolve(inst, opts);
  CommandResult out;
  timed(out.report, opts, [&] { return verify_theorem(r.abstract, TheoremOptions{opts.pairs_parallel}); });
  out.report.title = "represent";
  if (!out.report.ok()) return out;
  const Representation rep = sum_reps(r.abstract, opts.pairs_parallel);
  out.body += "carrier points: " + std::to_string(rep.carrier.size()) + "\n";
  for (std::size_t i = 0; i < rep.carrier.size(); ++i)
    out.body += "  " + std::to_string(i) + ": " + rep.carrier[i].to_string(r.abstract) + "\n";
  for (std::size_t g = 0; g < rep.maps.size(); ++g)
    out.body += "P(" + std::to_string(g) + ") = " + rep.maps[g].to_string() + "\n";
  out.body_json["representation"] = representation_json(r.abstract, rep);
  return out;
}

CommandResult cmd_roundtrip(const InstanceFile& inst, const CommandOptions& opts) {
  if (inst.is_abstract()) throw InputError("roundtrip needs a transformations instance");
  const Resolved r = resolve(inst, opts);
  CommandResult out;
  out.body = "closure size: " + std::to_string(r.concrete->size()) + "\n";
  timed(out.report, opts, [&] { return verify_theorem(r.abstract, TheoremOptions{opts.pairs_parallel}); });
  out.report.title = "roundtrip";
  out.body_json["closure_size"] = r.concrete->size();
  return out;
}

CommandResult cmd_generate(const CommandOptions& opts) {
  InstanceFile inst;
  inst.seed = opts.seed;
  if (opts.kind == "transformations") {
    inst.name = "random-" + std::to_string(opts.points) + "x" + std::to_string(opts.maps) + "-" + std::to_string(opts.seed);
    inst.body = random_maps(opts.seed, opts.points, opts.maps);
    // Fail early when the closure would not fit the cap.
    TransSystem::generate(std::get<TransformationsInstance>(inst.body).maps, opts.cap);
  } else if (opts.kind == "abstract") {
    if (opts.size == 0 || opts.size > 3) throw InputError("abstract generation supports --size 1..3");
    const auto systems = enumerate_systems(opts.size, true);
    if (systems.empty()) throw InputError("no valid systems of that size");
    inst.name = "abstract-" + std::to_string(opts.size) + "-" + std::to_string(opts.seed);
    inst.body = systems[opts.seed % systems.size()];
  } else {
    throw InputError("unknown --kind " + opts.kind + " (expected transformations or abstract)");
  }
  CommandResult out;
  out.report.title = "generate";
  out.body = write_instance_text(inst);
  out.body_json["instance"] = nlohmann::json::parse(out.body);
  return out;
}

std::string render(const std::string& command, const CommandResult& result, OutputFormat format) {
  if (format == OutputFormat::machine) {
    nlohmann::json j;
    j["command"] = command;
    j["exit_code"] = result.exit_code();
    j["report"] = result.report.to_json();
    if (!result.body_json.is_null()) j["output"] = result.body_json;
    return j.dump(2) + "\n";
  }
  if (command == "generate") return result.body;
  return result.body + result.report.to_text();
}

}  // namespace transemi
