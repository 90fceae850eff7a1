#include "qtorus/cli.hpp"

#include <functional>

#include "qtorus/report.hpp"
#include "qtorus/samples.hpp"

namespace qtorus::cli {

using report::Json;
using report::ParseError;
using report::to_json;

namespace {

constexpr long default_twist_bound = 3;
constexpr std::size_t max_twist_entries = 100000;

// Raised when a computed invariant fails its own consistency check.
class InternalError : public Error {
 public:
  using Error::Error;
};

std::string finish(const Json& j, const std::string& format) {
  if (format == "text") return report::render_text(j);
  return j.dump(2) + "\n";
}

Json surface_json(const LatticeLocalSystem& rho) {
  Json out;
  out["genus"] = rho.genus();
  out["rank"] = rho.rank();
  Json mats = Json::array();
  for (const IntMatrix& m : rho.monodromy()) mats.push_back(to_json(m));
  out["monodromy"] = std::move(mats);
  return out;
}

Json level_json(const BilinearData& data, const QuadraticForm& q) {
  Json out;
  out["c_matrix"] = to_json(data.c);
  out["zeta"] = to_json(data.zeta);
  out["form"] = to_json(q);
  out["symmetric_form"] = to_json(polarize(q));
  return out;
}

// Runs fn and re-raises plain Errors as ParseErrors located at path.
template <typename F>
auto at_path(const std::string& path, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const InternalError&) {
    throw;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::OracleDisagreement) throw;
    throw ParseError(e.code(), e.what(), path);
  }
}

void check(bool ok, const std::string& what) {
  if (!ok) throw InternalError(ErrorCode::OracleDisagreement, "consistency check failed: " + what);
}

Json parse_spec(std::string_view task, std::string_view input) {
  Json spec;
  try {
    spec = Json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ErrorCode::BadSpec, std::string("input is not valid JSON: ") + e.what(), "");
  }
  if (!spec.is_object()) throw ParseError(ErrorCode::BadSpec, "job spec must be a JSON object", "");
  if (spec.contains("task") && spec["task"] != std::string(task))
    throw ParseError(ErrorCode::BadSpec, "spec task does not match the requested command", "/task");
  return spec;
}

const Json& require(const Json& spec, const std::string& key) {
  if (!spec.contains(key)) throw ParseError(ErrorCode::BadSpec, "missing field \"" + key + "\"", "/" + key);
  return spec[key];
}

long read_bound(const Json& spec, const std::string& key, long fallback) {
  if (!spec.contains(key)) return fallback;
  const Json& j = spec[key];
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(ErrorCode::BadSpec, "expected a non-negative integer", "/" + key);
  return j.get<long>();
}

std::vector<IntVector> all_vectors(std::size_t rank, long bound) {
  std::vector<IntVector> out;
  IntVector v(rank, Integer(-bound));
  while (true) {
    out.push_back(v);
    std::size_t k = rank;
    while (k > 0) {
      --k;
      if (v[k] < bound) {
        v[k] += 1;
        break;
      }
      v[k] = -bound;
      if (k == 0) return out;
    }
    if (rank == 0) return out;
  }
}

// Unit vectors, their negatives and pairwise sums.
std::vector<IntVector> probe_vectors(std::size_t rank) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rank; ++i) {
    IntVector e(rank), f(rank);
    e[i] = 1;
    f[i] = -1;
    out.push_back(e);
    out.push_back(f);
    for (std::size_t j = i + 1; j < rank; ++j) {
      IntVector s(rank);
      s[i] = 1;
      s[j] = 1;
      out.push_back(s);
    }
  }
  return out;
}

struct LevelSpec {
  BilinearData data;
  LatticeLocalSystem rho;
  QuadraticForm q;
};

LevelSpec read_level_spec(const Json& spec) {
  LatticeLocalSystem rho = report::local_system_from_json(require(spec, "surface"), "/surface");
  BilinearData data = report::bilinear_from_json(require(spec, "level"), "/level");
  if (data.c.rows() != rho.rank())
    throw ParseError(ErrorCode::DimensionMismatch, "level rank differs from the surface rank", "/level/c_matrix");
  QuadraticForm q = at_path("/level", [&] { return level_form(LevelInput{data, rho}); });
  return {std::move(data), std::move(rho), std::move(q)};
}

ComponentRequest read_components(const Json& spec) {
  ComponentRequest req;
  if (spec.contains("components")) {
    const Json& cj = spec["components"];
    if (!cj.is_array()) throw ParseError(ErrorCode::BadSpec, "expected a list of integer vectors", "/components");
    for (std::size_t i = 0; i < cj.size(); ++i)
      req.explicit_reps.push_back(report::vector_from_json(cj[i], "/components/" + std::to_string(i)));
  }
  if (spec.contains("component_bound")) req.bound = read_bound(spec, "component_bound", 0);
  return req;
}

Json conventions_json() {
  Json out;
  out["orientation_sign"] = orientation_sign;
  out["refinement"] = "upper-triangular";
  out["gerbe_data"] = "omega and pi2_character only; no per-component quadratic refinement is reported";
  return out;
}

// ---------------------------------------------------------------------------

Json task_local(const Json& spec) {
  const BilinearData data = report::bilinear_from_json(require(spec, "level"), "/level");
  const std::size_t r = data.c.rows();
  const QuadraticForm q = quad_from_bilinear(data);
  const BraidedData braided = standard_refinement(q);
  const SymmetricForm b = polarize(q);
  const long bound = read_bound(spec, "bound", default_twist_bound);

  std::size_t entries = 1;
  for (std::size_t i = 0; i < r; ++i) {
    entries *= static_cast<std::size_t>(2 * bound + 1);
    if (entries > max_twist_entries)
      throw ParseError(ErrorCode::BadSpec, "twist table would exceed " + std::to_string(max_twist_entries) + " entries",
                       "/bound");
  }

  Json out;
  out["task"] = "local";
  out["level"] = level_json(data, q);
  const LevelClassReport cls = level_classify(q);
  out["classification"] = {{"pi2_layer", cls.pi2_layer()}, {"e_infinity", cls.e_infinity}, {"is_linear", is_linear(q)}};
  out["refinement"] = {{"convention", "upper-triangular"}, {"beta", to_json(braided.beta())}};

  Json table = Json::array();
  for (const IntVector& lambda : all_vectors(r, bound)) {
    const Frac1 theta = twist(braided, lambda);
    check(theta == evaluate(q, lambda), "twist equals Q");
    table.push_back({{"lambda", to_json(lambda)}, {"theta", to_json(theta)}});
  }
  out["twist_bound"] = bound;
  out["twist_table"] = std::move(table);

  const std::vector<IntVector> probes = probe_vectors(r);
  bool balancing = true, double_braiding_ok = true, hexagon = true;
  for (const IntVector& x : probes)
    for (const IntVector& y : probes) {
      balancing = balancing && balancing_check(braided, x, y);
      double_braiding_ok = double_braiding_ok && double_braiding(braided, x, y) == b(x, y);
    }
  for (std::size_t i = 0; i < r && hexagon; ++i)
    for (std::size_t j = 0; j < r && hexagon; ++j)
      for (std::size_t k = 0; k < r && hexagon; ++k) {
        IntVector ei(r), ej(r), ek(r);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        hexagon = hexagon_check(braided, ei, ej, ek) && hexagon_check(braided, ei + ej, ek, ek);
      }
  check(balancing, "balancing");
  check(double_braiding_ok, "double braiding equals b");
  check(hexagon, "hexagon");
  out["checks"] = {{"balancing", balancing}, {"double_braiding_equals_b", double_braiding_ok}, {"hexagon", hexagon}};

  if (spec.contains("objects")) {
    const Json& oj = spec["objects"];
    if (!oj.is_array() || oj.empty())
      throw ParseError(ErrorCode::BadSpec, "expected a non-empty list of objects", "/objects");
    GradedObject product = GradedObject::unit(r);
    Json inputs = Json::array();
    for (std::size_t i = 0; i < oj.size(); ++i) {
      const GradedObject v = report::graded_from_json(oj[i], r, "/objects/" + std::to_string(i));
      inputs.push_back(to_json(v));
      product = fuse(product, v);
    }
    out["fusion"] = {{"objects", std::move(inputs)}, {"product", to_json(product)}};
  }
  return out;
}

Json task_surface(const Json& spec) {
  const LatticeLocalSystem rho = report::local_system_from_json(require(spec, "surface"), "/surface");
  const CochainComplexSurface cx = at_path("/surface", [&] { return build_complex(rho); });
  const TwistedCohomology h = twisted_cohomology(rho);

  const long expected = (2 - 2 * static_cast<long>(rho.genus())) * static_cast<long>(rho.rank());
  const long computed = static_cast<long>(h.h0.free_rank()) - static_cast<long>(h.h1.free_rank()) +
                        static_cast<long>(h.h2.free_rank());
  const bool inv = invariants_coinvariants_check(rho);
  check(expected == computed, "Euler characteristic");
  check(inv, "H^0 and H^2 against invariants and coinvariants");

  Json out;
  out["task"] = "surface";
  out["surface"] = surface_json(rho);
  out["cohomology"] = {{"h0", to_json(h.h0)}, {"h1", to_json(h.h1)}, {"h2", to_json(h.h2)}};
  out["h1_generators"] = to_json(h.h1_gens.generators.transpose());
  out["euler_characteristic"] = {{"expected", expected}, {"computed", computed}};
  out["checks"] = {{"d1_d0_zero", (cx.d1 * cx.d0).is_zero()}, {"euler", true}, {"invariants_coinvariants", inv}};
  out["complex"] = {{"d0", to_json(cx.d0)}, {"d1", to_json(cx.d1)}};
  return out;
}

Json blocks_json(const std::vector<GerbeBlock>& blocks) {
  Json out = Json::array();
  for (const GerbeBlock& blk : blocks) out.push_back(to_json(blk));
  return out;
}

void oracle_check(const QuadraticForm& q, const LatticeLocalSystem& rho, const FracMatrix& omega) {
  if (commutator_pairing_oracle(q, rho) != omega)
    throw InternalError(ErrorCode::OracleDisagreement, "closed-form pairing disagrees with the cochain oracle");
}

std::vector<GerbeBlock> run_blocks(const LevelSpec& ls, const ComponentRequest& req, unsigned threads) {
  return at_path("/components", [&] { return block_report(LevelInput{ls.data, ls.rho}, req, threads); });
}

Json task_global(const Json& spec, unsigned threads) {
  const LevelSpec ls = read_level_spec(spec);
  const ComponentRequest req = read_components(spec);
  const SectionSpaceInvariants s = section_space(ls.rho);
  const std::vector<GerbeBlock> blocks = run_blocks(ls, req, threads);
  const FracMatrix omega = commutator_pairing(ls.q, ls.rho);
  oracle_check(ls.q, ls.rho, omega);

  Json out;
  out["task"] = "global";
  out["surface"] = surface_json(ls.rho);
  out["level"] = level_json(ls.data, ls.q);
  out["section_space"] = to_json(s);
  out["h1_generators"] = to_json(twisted_cohomology(ls.rho).h1_gens.generators.transpose());
  out["blocks"] = blocks_json(blocks);
  out["checks"] = {{"oracle_agreement", true}};
  out["conventions"] = conventions_json();
  return out;
}

Json task_bunt(const Json& spec, unsigned threads) {
  const LevelSpec ls = read_level_spec(spec);
  const ComponentRequest req = read_components(spec);
  const BuntReport br = at_path("/components", [&] { return bunt_report(LevelInput{ls.data, ls.rho}, req, threads); });
  const SectionSpaceInvariants s = section_space(ls.rho);
  check(br.as_section_space() == s, "Bun_T labels agree with the section space");
  check(br.blocks == run_blocks(ls, req, threads), "Bun_T blocks agree with the block report");
  oracle_check(ls.q, ls.rho, commutator_pairing(ls.q, ls.rho));

  Json out;
  out["task"] = "bunt";
  out["surface"] = surface_json(ls.rho);
  out["level"] = level_json(ls.data, ls.q);
  out["bun_t"] = {{"pi0", to_json(br.pi0_bun_t)}, {"pi1_identity_component", to_json(br.pi1_bun_t0)},
                  {"pi2_identity_component", to_json(br.pi2_bun_t0)}};
  out["section_space"] = to_json(s);
  Json comps = Json::array();
  for (std::size_t i = 0; i < br.blocks.size(); ++i)
    comps.push_back({{"chern_class", to_json(br.chern_classes[i])}, {"block", to_json(br.blocks[i])}});
  out["components"] = std::move(comps);
  out["checks"] = {{"section_space_agreement", true}, {"oracle_agreement", true}};
  out["conventions"] = conventions_json();
  return out;
}

// ---------------------------------------------------------------------------

struct SelfCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

Json task_selfcheck(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SelfCheck> results;

  SelfCheck snf{"smith_normal_form"};
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = uniform(rng, 1, 6), cols = uniform(rng, 1, 6);
    const IntMatrix a = random_matrix(rng, rows, cols, -20, 20);
    const SnfResult s = smith_normal_form(a);
    bool ok = s.U * a * s.V == s.D && is_unimodular(s.U) && is_unimodular(s.V);
    const auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] != 0 && d[i + 1] % d[i] != 0) ok = false;
    ++snf.cases;
    if (!ok) ++snf.failures;
  }
  results.push_back(snf);

  SelfCheck local{"twist_and_double_braiding"};
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = uniform(rng, 1, 4);
    const QuadraticForm q = random_form(rng, r, 12);
    const BraidedData b = standard_refinement(q);
    const SymmetricForm p = polarize(q);
    for (int k = 0; k < 10; ++k) {
      const IntVector x = random_matrix(rng, r, 1, -5, 5).column(0), y = random_matrix(rng, r, 1, -5, 5).column(0);
      ++local.cases;
      if (twist(b, x) != evaluate(q, x) || double_braiding(b, x, y) != p(x, y)) ++local.failures;
    }
  }
  results.push_back(local);

  SelfCheck cohom{"cohomology"};
  for (int t = 0; t < 20; ++t) {
    const std::size_t g = uniform(rng, 1, 2), r = uniform(rng, 1, 2);
    const LatticeLocalSystem rho = random_local_system(rng, g, r);
    const TwistedCohomology h = twisted_cohomology(rho);
    const long euler = static_cast<long>(h.h0.free_rank()) - static_cast<long>(h.h1.free_rank()) +
                       static_cast<long>(h.h2.free_rank());
    ++cohom.cases;
    if (euler != (2 - 2 * static_cast<long>(g)) * static_cast<long>(r) || !invariants_coinvariants_check(rho))
      ++cohom.failures;
  }
  results.push_back(cohom);

  SelfCheck oracle{"oracle_equivalence"};
  for (MonodromyFamily family : {MonodromyFamily::Trivial, MonodromyFamily::Sign, MonodromyFamily::Unipotent})
    for (std::size_t g = 1; g <= 2; ++g)
      for (std::size_t r = 1; r <= 2; ++r) {
        const LatticeLocalSystem rho = family_system(family, g, r);
        for (int t = 0; t < 3; ++t) {
          const QuadraticForm q = random_invariant_form(rng, rho, 6);
          ++oracle.cases;
          if (commutator_pairing(q, rho) != commutator_pairing_oracle(q, rho)) ++oracle.failures;
        }
      }
  results.push_back(oracle);

  Json checks = Json::array();
  bool ok = true;
  for (const SelfCheck& c : results) {
    ok = ok && c.failures == 0;
    checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}});
  }
  Json out;
  out["task"] = "selfcheck";
  out["seed"] = seed;
  out["checks"] = std::move(checks);
  out["status"] = ok ? "pass" : "fail";
  return out;
}

Json error_json(std::string_view code, const std::string& message, const std::string& path) {
  Json inner;
  inner["code"] = code;
  inner["message"] = message;
  inner["path"] = path;
  Json out;
  out["error"] = std::move(inner);
  return out;
}

}  // namespace

RunResult run(std::string_view task, std::string_view input, const RunOptions& options) {
  const unsigned threads = options.threads == 0 ? 1 : options.threads;
  try {
    if (options.format != "json" && options.format != "text")
      throw ParseError(ErrorCode::BadSpec, "unknown output format \"" + options.format + "\"", "");
    if (task == "selfcheck") {
      const Json out = task_selfcheck(options.seed);
      return {finish(out, options.format), out["status"] == "pass" ? Ok : InternalFailure};
    }
    std::function<Json(const Json&)> handler;
    if (task == "local")
      handler = task_local;
    else if (task == "surface")
      handler = task_surface;
    else if (task == "global")
      handler = [threads](const Json& s) { return task_global(s, threads); };
    else if (task == "bunt")
      handler = [threads](const Json& s) { return task_bunt(s, threads); };
    else
      throw ParseError(ErrorCode::BadSpec, "unknown task \"" + std::string(task) + "\"", "");
    const Json spec = parse_spec(task, input);
    return {finish(handler(spec), options.format), Ok};
  } catch (const ParseError& e) {
    return {finish(error_json(to_string(e.code()), e.what(), e.path()), options.format), ValidationFailure};
  } catch (const InternalError& e) {
    return {finish(error_json(to_string(e.code()), e.what(), ""), options.format), InternalFailure};
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::OracleDisagreement ? InternalFailure : ValidationFailure;
    return {finish(error_json(to_string(e.code()), e.what(), ""), options.format), code};
  } catch (const std::exception& e) {
    return {finish(error_json("Internal", e.what(), ""), options.format), InternalFailure};
  }
}

}  // namespace qtorus::cli
