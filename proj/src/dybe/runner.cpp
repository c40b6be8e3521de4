#include "runner.hpp"

#include <set>
#include <utility>

#include "errors.hpp"
#include "exchange.hpp"
#include "intertwine.hpp"
#include "jsonio.hpp"
#include "modspec.hpp"
#include "rng.hpp"
#include "trace.hpp"

namespace dybe {
namespace {

struct Config {
  std::string command;
  std::string target;
  int rank = 1;
  std::vector<std::string> module_specs;
  std::string mode = "symbolic";
  uint64_t seed = 0;
  bool have_seed = false;
  long depth = 4;
  long order = 10;
  int samples = 1;
  bool weighted = false;
};

const std::set<std::string>& known_fields() {
  static const std::set<std::string> k = {"command", "target", "algebra", "modules", "mode",
                                          "seed",    "samples", "depth",   "order",   "weighted"};
  return k;
}

Config parse_config(const Json& req) {
  if (!req.is_object()) throw BadRequest("request must be a JSON object");
  for (auto it = req.begin(); it != req.end(); ++it)
    if (!known_fields().count(it.key()))
      throw BadRequest("unknown request field \"" + it.key() + "\"");

  auto str_field = [&](const char* key, bool required) -> std::string {
    if (!req.contains(key)) {
      if (required) throw BadRequest(std::string("missing request field \"") + key + "\"");
      return "";
    }
    if (!req.at(key).is_string())
      throw BadRequest(std::string("request field \"") + key + "\" must be a string");
    return req.at(key).get<std::string>();
  };
  auto int_field = [&](const char* key, long dflt, long lo, long hi) -> long {
    if (!req.contains(key)) return dflt;
    if (!req.at(key).is_number_integer() && !req.at(key).is_number_unsigned())
      throw BadRequest(std::string("request field \"") + key + "\" must be an integer");
    long v = req.at(key).get<long>();
    if (v < lo || v > hi)
      throw BadRequest(std::string("request field \"") + key + "\" must lie in [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
  };

  Config cfg;
  cfg.command = str_field("command", true);
  cfg.target = str_field("target", true);
  cfg.rank = parse_algebra(str_field("algebra", true));
  if (!req.contains("modules"))
    throw BadRequest("request needs a \"modules\" array or comma-joined string");
  if (req.at("modules").is_string()) {
    cfg.module_specs = split_specs(req.at("modules").get<std::string>());
  } else if (req.at("modules").is_array() && !req.at("modules").empty()) {
    for (const auto& m : req.at("modules")) {
      if (!m.is_string()) throw BadRequest("\"modules\" entries must be strings");
      cfg.module_specs.push_back(m.get<std::string>());
    }
  } else {
    throw BadRequest("request needs a nonempty \"modules\" array or comma-joined string");
  }
  std::string mode = str_field("mode", false);
  if (!mode.empty()) cfg.mode = mode;
  if (cfg.mode != "symbolic" && cfg.mode != "numeric")
    throw BadRequest("mode must be \"symbolic\" or \"numeric\"");
  if (req.contains("seed")) {
    if (!req.at("seed").is_number_unsigned() && !req.at("seed").is_number_integer())
      throw BadRequest("seed must be an unsigned integer");
    cfg.seed = req.at("seed").get<uint64_t>();
    cfg.have_seed = true;
  }
  if (cfg.mode == "numeric" && !cfg.have_seed) throw BadRequest("numeric mode requires a seed");
  cfg.depth = int_field("depth", 4, 0, 64);
  cfg.order = int_field("order", 10, 0, 64);
  cfg.samples = (int)int_field("samples", 1, 1, 64);
  if (req.contains("weighted")) {
    if (!req.at("weighted").is_boolean()) throw BadRequest("\"weighted\" must be a boolean");
    cfg.weighted = req.at("weighted").get<bool>();
  }
  return cfg;
}

std::string operand_names(const std::vector<ModPtr>& ms) {
  std::string s;
  for (size_t i = 0; i < ms.size(); ++i) s += (i ? "," : "") + ms[i]->name;
  return s;
}

std::string point_str(const std::vector<Rat>& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].str();
  return s + ")";
}

// pad a short operand list by repeating its last module
std::vector<ModPtr> take_roles(const std::vector<ModPtr>& pool, size_t n) {
  std::vector<ModPtr> out(pool.begin(), pool.begin() + std::min(n, pool.size()));
  while (out.size() < n) out.push_back(out.back());
  return out;
}

size_t verify_arity(const std::string& t) {
  if (t == "cocycle" || t == "qdybe" || t == "fusion-exchange" || t == "diffop-commute") return 3;
  if (t == "q-identities" || t == "eta" || t == "mr") return 2;
  throw BadRequest("unknown verify target \"" + t + "\"");
}

size_t compute_arity(const std::string& t) {
  if (t == "fusion" || t == "exchange" || t == "diffop") return 2;
  if (t == "qmatrix" || t == "trace") return 1;
  throw BadRequest("unknown compute target \"" + t + "\"");
}

template <Scalar S>
VerificationReport run_one_verify(const Config& cfg, const RootSystem& rs, const std::string& t,
                                  const std::vector<ModPtr>& ops, const Param<S>& p) {
  if (t == "cocycle") return verify_cocycle<S>(rs, ops[0], ops[1], ops[2], p, "x");
  if (t == "qdybe") return verify_qdybe<S>(rs, ops[0], ops[1], ops[2], p, "x");
  if (t == "fusion-exchange") return verify_fusion_exchange<S>(rs, ops[0], ops[1], ops[2], p, "x");
  if (t == "q-identities") return verify_q_identities<S>(rs, ops[0], ops[1], p, "x");
  if (t == "eta") return verify_eta_relation<S>(rs, ops[0], ops[1], p, cfg.depth, "m");
  throw BadRequest("unknown verify target \"" + t + "\"");
}

// run `samples` numeric evaluations; a degenerate draw (lost rank, singular Q,
// pole) is redrawn up to kMaxResamples times before genericity is declared
// exhausted
template <class Fn>
VerificationReport sampled_run(const RootSystem& rs, uint64_t seed, int samples, Fn&& fn) {
  SplitMix64 gen(seed);
  VerificationReport merged;
  for (int s = 0; s < samples; ++s) {
    bool done = false;
    for (int attempt = 0; attempt < kMaxResamples && !done; ++attempt) {
      Param<Rat> lam = sample_point(gen, rs.rank());
      try {
        VerificationReport rep = fn(lam);
        if (s == 0) {
          merged = rep;
        } else if (rep.status == "fail") {
          merged.status = "fail";
          for (const FailItem& f : rep.failures)
            if (merged.failures.size() < 32) merged.failures.push_back(f);
        }
        merged.sample.push_back(point_str(lam));
        done = true;
      } catch (const SingularSystem&) {
      } catch (const SingularQ&) {
      } catch (const PoleAtPoint&) {
      } catch (const NonGenericWeight&) {
      }
    }
    if (!done)
      throw NonGenericWeight("no generic sample found after " + std::to_string(kMaxResamples) +
                             " attempts");
  }
  merged.mode = "numeric";
  merged.seed = seed;
  return merged;
}

// diffop-commute and mr have no sampled parameter; they always run over RatFun
VerificationReport run_symbolic_only(const Config& cfg, const RootSystem& rs, const std::string& t,
                                     const std::vector<ModPtr>& ops) {
  VerificationReport rep;
  if (t == "diffop-commute")
    rep = verify_commutativity(rs, ops[0], ops[1], ops[2]);
  else
    rep = verify_mr_equation(rs, ops[0], ops[1], cfg.order);
  rep.mode = "symbolic";
  rep.operands = operand_names(ops);
  if (cfg.mode == "numeric" && rep.note.empty())
    rep.note = "checked symbolically; the identity has no sampled parameter";
  return rep;
}

VerificationReport run_verify_target(const Config& cfg, const RootSystem& rs, const std::string& t,
                                     const std::vector<ModPtr>& ops) {
  if (t == "diffop-commute" || t == "mr") return run_symbolic_only(cfg, rs, t, ops);
  VerificationReport rep;
  if (cfg.mode == "numeric") {
    rep = sampled_run(rs, cfg.seed, cfg.samples, [&](const Param<Rat>& p) {
      return run_one_verify<Rat>(cfg, rs, t, ops, p);
    });
  } else {
    rep = run_one_verify<RatFun>(cfg, rs, t, ops, symbolic_param(rs.rank()));
    rep.mode = "symbolic";
  }
  rep.operands = operand_names(ops);
  return rep;
}

std::vector<VerificationReport> run_verify_all(const Config& cfg, const RootSystem& rs,
                                               const std::vector<ModPtr>& pool) {
  std::vector<VerificationReport> reps;
  SplitMix64 master(cfg.seed);
  auto run = [&](const std::string& t, const std::vector<ModPtr>& ops) {
    Config sub = cfg;
    if (cfg.mode == "numeric") sub.seed = master.next();
    reps.push_back(run_verify_target(sub, rs, t, ops));
  };
  run("cocycle", take_roles(pool, 3));
  run("qdybe", take_roles(pool, 3));
  run("fusion-exchange", take_roles(pool, 3));
  run("q-identities", take_roles(pool, 2));
  run("eta", take_roles(pool, 2));

  ModPtr zmod;  // diffop-commute and mr need a module with U[0] != 0
  for (const ModPtr& m : pool)
    if (!m->weight_space(rs.zero()).empty()) {
      zmod = m;
      break;
    }
  if (zmod) {
    std::vector<ModPtr> vw = take_roles(pool, 2);
    run("diffop-commute", {vw[0], vw[1], zmod});
    run("mr", {zmod, pool[0]});
  } else {
    for (const char* t : {"diffop-commute", "mr"}) {
      VerificationReport sk;
      sk.identity = t;
      sk.operands = operand_names(pool);
      sk.mode = "symbolic";
      sk.status = "skipped";
      sk.note = "no listed module has a nonzero zero weight space";
      reps.push_back(sk);
    }
  }
  return reps;
}

template <Scalar S>
Json compute_matrix_payload(const Config& cfg, const RootSystem& rs,
                            const std::vector<ModPtr>& ops, const Param<S>& p) {
  if (cfg.target == "fusion") {
    Fusion<S> f = fusion_matrix<S>(rs, ops[0], ops[1], p);
    return matrix_json(f.space, f.m, "x");
  }
  if (cfg.target == "exchange") {
    Exchange<S> e = exchange_matrix<S>(rs, ops[0], ops[1], p);
    return matrix_json(e.space, e.m, "x");
  }
  TensorSpace sp({ops[0]});  // qmatrix
  return matrix_json(sp, q_matrix<S>(rs, ops[0], p), "x");
}

RunResult finish_verify(const Config& cfg, const std::vector<VerificationReport>& reps) {
  RunResult res;
  Json jreps = Json::array();
  bool failed = false;
  std::string text;
  for (const VerificationReport& rep : reps) {
    jreps.push_back(report_json(rep));
    if (rep.status == "fail") failed = true;
    std::string tag = rep.status == "fail" ? "[FAIL]" : (rep.status == "skipped" ? "[SKIP]" : "[PASS]");
    text += tag + " " + rep.identity + "  " + rep.operands + "  (" + rep.mode + ")";
    if (!rep.sample.empty()) {
      text += "  sample";
      for (const std::string& s : rep.sample) text += " " + s;
    }
    text += "\n";
    if (!rep.note.empty()) text += "       " + rep.note + "\n";
    size_t shown = 0;
    for (const FailItem& f : rep.failures) {
      if (shown++ == 5) {
        text += "       ... " + std::to_string(rep.failures.size() - 5) + " more\n";
        break;
      }
      text += "       " + f.where + ": " + f.lhs + " != " + f.rhs + "\n";
    }
  }
  Json out{{"command", "verify"},
           {"target", cfg.target},
           {"algebra", "A" + std::to_string(cfg.rank)},
           {"mode", cfg.mode},
           {"status", failed ? "fail" : "pass"},
           {"reports", jreps}};
  res.output_json = dump_json(out);
  res.report_text = text;
  res.exit_code = failed ? 1 : 0;
  return res;
}

RunResult dispatch(const Config& cfg) {
  RootSystem rs(cfg.rank);
  std::vector<ModPtr> pool;
  for (const std::string& spec : cfg.module_specs) pool.push_back(parse_module(rs, spec));

  std::string warn;
  if (cfg.mode == "symbolic" && cfg.rank >= 2)
    warn = "warning: symbolic mode on A" + std::to_string(cfg.rank) +
           " can be slow; consider --mode numeric with a seed\n";

  if (cfg.command == "verify") {
    std::vector<VerificationReport> reps;
    if (cfg.target == "all") {
      reps = run_verify_all(cfg, rs, pool);
    } else {
      size_t n = verify_arity(cfg.target);
      if (pool.size() > n)
        throw BadRequest("verify " + cfg.target + " takes at most " + std::to_string(n) +
                         " modules");
      reps.push_back(run_verify_target(cfg, rs, cfg.target, take_roles(pool, n)));
    }
    RunResult res = finish_verify(cfg, reps);
    res.report_text = warn + res.report_text;
    return res;
  }

  if (cfg.command != "compute") throw BadRequest("unknown command \"" + cfg.command + "\"");
  size_t n = compute_arity(cfg.target);
  if (pool.size() > n)
    throw BadRequest("compute " + cfg.target + " takes at most " + std::to_string(n) + " modules");
  std::vector<ModPtr> ops = take_roles(pool, n);

  Json out{{"command", "compute"},
           {"target", cfg.target},
           {"algebra", "A" + std::to_string(cfg.rank)},
           {"operands", operand_names(ops)},
           {"mode", cfg.mode}};

  if (cfg.target == "diffop") {
    // always symbolic: the coefficients are rational functions of the parameter
    out["mode"] = "symbolic";
    out["result"] = diffop_json(difference_operator(rs, ops[0], ops[1]), "x");
  } else if (cfg.target == "trace") {
    out["mode"] = "symbolic";
    TraceFunction f = cfg.weighted ? weighted_trace(rs, ops[0], cfg.order)
                                   : trace_function(rs, ops[0], cfg.order);
    out["weighted"] = cfg.weighted;
    out["result"] = trace_json(f);
  } else if (cfg.mode == "numeric") {
    SplitMix64 gen(cfg.seed);
    bool done = false;
    for (int attempt = 0; attempt < kMaxResamples && !done; ++attempt) {
      Param<Rat> lam = sample_point(gen, rs.rank());
      try {
        out["result"] = compute_matrix_payload<Rat>(cfg, rs, ops, lam);
        out["sample"] = point_str(lam);
        out["seed"] = cfg.seed;
        done = true;
      } catch (const SingularSystem&) {
      } catch (const SingularQ&) {
      } catch (const PoleAtPoint&) {
      } catch (const NonGenericWeight&) {
      }
    }
    if (!done)
      throw NonGenericWeight("no generic sample found after " + std::to_string(kMaxResamples) +
                             " attempts");
  } else {
    out["result"] = compute_matrix_payload<RatFun>(cfg, rs, ops, symbolic_param(rs.rank()));
  }

  RunResult res;
  res.output_json = dump_json(out);
  res.report_text = warn + "computed " + cfg.target + " for " + operand_names(ops) + "\n";
  res.exit_code = 0;
  return res;
}

}  // namespace

RunResult run_request(const std::string& request_json) {
  RunResult res;
  try {
    Json req = Json::parse(request_json);
    return dispatch(parse_config(req));
  } catch (const Json::parse_error& e) {
    res.exit_code = 2;
    res.report_text = std::string("error: request is not valid JSON: ") + e.what() + "\n";
  } catch (const NonGenericWeight& e) {
    res.exit_code = 3;
    res.report_text = std::string("error: genericity exhausted: ") + e.what() + "\n";
  } catch (const Error& e) {
    res.exit_code = 2;
    res.report_text = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.exit_code = 2;
    res.report_text = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace dybe
