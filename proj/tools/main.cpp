#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wittalg/autos.hpp"
#include "wittalg/dpalg.hpp"
#include "wittalg/io/ring_spec.hpp"
#include "wittalg/lie.hpp"
#include "wittalg/scalars.hpp"
#include "wittalg/wittree.hpp"

using namespace wittalg;
using json = nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNotDerivationAuto = 3;
constexpr int kExitInconclusive = 4;

struct CommandConfig {
  std::string subcommand;
  std::uint32_t p = 5;
  int m = 0;
  std::vector<int> n{1};
  std::string ring = "Fp";
  std::uint64_t seed = 1;
  std::string morphism_file;
  std::string form = "witt";
  std::string output;
  std::string format = "json";
};

struct ExitWith {
  int code;
  std::string message;
};

struct Outcome {
  json data;
  std::string text;
  int code = kExitOk;
};

/// Resolves n against m and checks the parameters before any computation.
void validate_params(CommandConfig& cfg) {
  if (!is_prime(cfg.p)) throw ExitWith{kExitBadInput, std::to_string(cfg.p) + " is not prime"};
  if (cfg.p <= 3) throw ExitWith{kExitBadInput, "characteristic must exceed 3"};
  if (cfg.n.empty()) throw ExitWith{kExitBadInput, "n must be nonempty"};
  for (int ni : cfg.n)
    if (ni < 1) throw ExitWith{kExitBadInput, "entries of n must be positive"};
  if (cfg.m < 0) throw ExitWith{kExitBadInput, "m must be positive"};
  if (cfg.m > 0 && cfg.n.size() == 1 && cfg.m > 1) cfg.n.assign(static_cast<std::size_t>(cfg.m), cfg.n[0]);
  if (cfg.m == 0) cfg.m = static_cast<int>(cfg.n.size());
  if (static_cast<std::size_t>(cfg.m) != cfg.n.size())
    throw ExitWith{kExitBadInput, "n must have m entries or a single entry"};
  std::uint64_t dim = 1;
  for (int ni : cfg.n)
    for (int k = 0; k < ni; ++k) {
      dim *= cfg.p;
      if (dim > 4096) throw ExitWith{kExitBadInput, "algebra dimension exceeds 4096"};
    }
}

io::AnyRing resolve_ring(const CommandConfig& cfg) {
  auto spec = io::parse_ring_spec(cfg.ring, cfg.p);
  if (spec.p != cfg.p)
    throw ExitWith{kExitBadInput, "ring characteristic " + std::to_string(spec.p) + " differs from p"};
  return io::make_ring(spec);
}

json params_json(const CommandConfig& cfg) {
  return {{"p", cfg.p}, {"m", cfg.m}, {"n", cfg.n}, {"ring", io::parse_ring_spec(cfg.ring, cfg.p).to_string()}};
}

json envelope(const CommandConfig& cfg, json body) {
  body["schema_version"] = kSchemaVersion;
  body["command"] = cfg.subcommand;
  return body;
}

template <class R>
constexpr bool is_finite_field_v = std::is_same_v<R, PrimeField> || std::is_same_v<R, ExtField>;

Outcome cmd_bracket_table(const CommandConfig& cfg) {
  return std::visit(
      [&](const auto& ring) {
        auto L = witt_algebra(cfg.p, cfg.n, ring);
        auto j = L.to_json();
        std::string ring_name = io::parse_ring_spec(cfg.ring, cfg.p).to_string();
        j["ring"] = ring_name;
        std::ostringstream t;
        t << "W(" << cfg.m << ";" << json(cfg.n).dump() << ") over " << ring_name << ": dim "
          << L.dim() << ", " << j["brackets"].size() << " nonzero brackets\n";
        return Outcome{envelope(cfg, std::move(j)), t.str()};
      },
      resolve_ring(cfg));
}

Outcome cmd_simplicity(const CommandConfig& cfg) {
  return std::visit(
      [&](const auto& ring) -> Outcome {
        using R = std::decay_t<decltype(ring)>;
        if constexpr (!is_finite_field_v<R>) {
          throw ExitWith{kExitBadInput, "simplicity requires a finite field"};
        } else {
          auto L = witt_algebra(cfg.p, cfg.n, ring);
          auto res = is_simple(L, cfg.seed);
          json j = {{"params", params_json(cfg)},
                    {"dim", L.dim()},
                    {"simple", res.simple()},
                    {"verdict", to_string(res.verdict)},
                    {"certificate", res.certificate}};
          std::string t = "simplicity: " + to_string(res.verdict) + " (dim " + std::to_string(L.dim()) + ")\n";
          int code = res.verdict == SimplicityVerdict::inconclusive ? kExitInconclusive : kExitOk;
          return Outcome{envelope(cfg, std::move(j)), t, code};
        }
      },
      resolve_ring(cfg));
}

Outcome cmd_derivation_dim(const CommandConfig& cfg) {
  return std::visit(
      [&](const auto& ring) -> Outcome {
        using R = std::decay_t<decltype(ring)>;
        if constexpr (!is_finite_field_v<R>) {
          throw ExitWith{kExitBadInput, "derivation-dim requires a finite field"};
        } else {
          auto L = witt_algebra(cfg.p, cfg.n, ring);
          auto der = derivation_algebra(L);
          std::size_t d = der.algebra.dim();
          json j = {{"params", params_json(cfg)},
                    {"witt_dim", L.dim()},
                    {"derivation_dim", d},
                    {"outer_dim", d - L.dim()},
                    {"method", der.method}};
          std::string t = "dim Der = " + std::to_string(d) + " (dim W = " + std::to_string(L.dim()) + ")\n";
          return Outcome{envelope(cfg, std::move(j)), t};
        }
      },
      resolve_ring(cfg));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ExitWith{kExitBadInput, "cannot open " + path};
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ExitWith{kExitBadInput, std::string("malformed JSON in ") + path + ": " + e.what()};
  }
}

Outcome cmd_decompose(const CommandConfig& cfg) {
  return std::visit(
      [&](const auto& ring) -> Outcome {
        using R = std::decay_t<decltype(ring)>;
        if constexpr (std::is_same_v<R, RatFuncField>) {
          throw ExitWith{kExitBadInput, "decompose requires a finite scalar ring"};
        } else {
          DPAlgebra<R> a(cfg.p, cfg.n, ring);
          std::optional<AlgebraMorphism<R>> phi;
          json source;
          if (!cfg.morphism_file.empty()) {
            auto doc = read_json_file(cfg.morphism_file);
            const json& images = doc.is_object() && doc.contains("images") ? doc["images"] : doc;
            try {
              phi = AlgebraMorphism<R>::from_json(a, images);
            } catch (const relation_violated& e) {
              throw ExitWith{kExitNotDerivationAuto, e.what()};
            } catch (const not_invertible& e) {
              throw ExitWith{kExitNotDerivationAuto, e.what()};
            } catch (const json::exception& e) {
              throw ExitWith{kExitBadInput, std::string("malformed morphism: ") + e.what()};
            }
            source = {{"morphism_file", std::filesystem::path(cfg.morphism_file).filename().string()}};
          } else {
            phi = random_derivation_automorphism(a, cfg.seed);
            source = {{"seed", cfg.seed}};
          }
          auto dec = triangulate(*phi);
          auto back = dec.reassemble();
          bool verified = back.equal(*phi) && triangulate(back).same_as(dec);
          json j = {{"params", params_json(cfg)},
                    {"source", source},
                    {"decomposition", dec.to_json()},
                    {"verified", verified}};
          std::string t = std::string("decomposition ") + (verified ? "verified" : "NOT verified") + "\n";
          return Outcome{envelope(cfg, std::move(j)), t, verified ? kExitOk : kExitInternal};
        }
      },
      resolve_ring(cfg));
}

template <ScalarRing F>
json recognition_json(const WittReeCandidate<F>& c) {
  if (c.rank() != 1 || c.algebra.dim() != c.field().characteristic()) return {{"split", nullptr}, {"reason", "not_applicable"}};
  auto r = recognize_w1n(c);
  return {{"split", r.split}, {"certificate", r.certificate}};
}

template <ScalarRing F>
Outcome wittree_outcome(const CommandConfig& cfg, const WittReeCandidate<F>& c, json extra) {
  auto rep = verify_witt_ree(c, cfg.seed);
  auto rec = recognition_json(c);
  json j = {{"form", cfg.form},
            {"name", c.name},
            {"lie_dim", c.lie.dim()},
            {"pass", rep.verdict()},
            {"report", rep.to_json()},
            {"split", rec["split"]},
            {"recognition", rec}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  std::string t = "witt-ree " + cfg.form + ": " + (rep.verdict() ? "pass" : "fail") + ", split: " + rec["split"].dump() + "\n";
  return Outcome{envelope(cfg, std::move(j)), t};
}

Outcome cmd_wittree_verify(const CommandConfig& cfg) {
  if (cfg.form == "ree") {
    if (cfg.n.size() != 1 || cfg.n[0] != 1) throw ExitWith{kExitBadInput, "ree form is available for n = 1 only"};
    auto c = ree_form(cfg.p, 1);
    auto t = trivialize_insep(c);
    json extra = {{"params", {{"p", cfg.p}, {"n", 1}, {"ring", "F" + std::to_string(cfg.p) + "(t)"}}},
                  {"trivialized", {{"root", c.field().to_string(c.field().variable_element()) + "^(1/p)"},
                                   {"split", t.iso.split}}}};
    return wittree_outcome(cfg, c, extra);
  }
  if (cfg.form != "witt" && cfg.form != "mult") throw ExitWith{kExitBadInput, "unknown form '" + cfg.form + "'"};
  return std::visit(
      [&](const auto& ring) -> Outcome {
        using R = std::decay_t<decltype(ring)>;
        if constexpr (!is_finite_field_v<R>) {
          throw ExitWith{kExitBadInput, "wittree-verify requires a finite field"};
        } else {
          json extra = {{"params", params_json(cfg)}};
          if (cfg.form == "witt") return wittree_outcome(cfg, witt_candidate(DPAlgebra<R>(cfg.p, cfg.n, ring)), extra);
          for (int ni : cfg.n)
            if (ni != 1) throw ExitWith{kExitBadInput, "multiplicative form requires n = (1,..,1)"};
          std::vector<typename R::value_type> lambda;
          auto w = ring.one();
          for (int i = 0; i < cfg.m; ++i) {
            lambda.push_back(w);
            if constexpr (std::is_same_v<R, ExtField>) w = ring.mul(w, ring.generator());
          }
          try {
            return wittree_outcome(cfg, multiplicative_form(ring, lambda), extra);
          } catch (const dependent_eigenvalues& e) {
            throw ExitWith{kExitBadInput, e.what()};
          }
        }
      },
      resolve_ring(cfg));
}

Outcome cmd_selftest(const CommandConfig& cfg) {
  json checks = json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"pass", ok}});
    all = all && ok;
  };
  PrimeField F(5);
  auto W = witt_algebra(5, {1}, F);
  record("witt_dim", W.dim() == 5);
  record("jacobi", W.satisfies_jacobi());
  record("simple", is_simple(W).simple());
  record("derivation_dim", derivation_algebra(witt_algebra(5, {2}, F)).algebra.dim() == 26);
  TestRing<PrimeField> eps(F, 1);
  DPAlgebra<TestRing<PrimeField>> a(5, {1}, eps);
  bool round_trip = true;
  for (std::uint64_t s = 1; s <= 5; ++s) {
    auto dec = random_decomposition(a, s);
    auto phi = dec.reassemble();
    round_trip = round_trip && triangulate(phi).same_as(dec);
  }
  record("triangulation", round_trip);
  record("witt_ree", verify_witt_ree(witt_candidate(DPAlgebra<PrimeField>(5, {1}, F))).verdict());
  std::string t;
  for (const auto& c : checks) t += std::string(c["pass"].get<bool>() ? "pass " : "FAIL ") + c["name"].get<std::string>() + "\n";
  return Outcome{envelope(cfg, {{"checks", checks}, {"pass", all}}), t, all ? kExitOk : kExitInternal};
}

void add_param_flags(CLI::App* sub, CommandConfig& cfg, bool with_ring = true) {
  sub->add_option("-p", cfg.p, "characteristic");
  sub->add_option("-m", cfg.m, "number of variables");
  sub->add_option("-n", cfg.n, "exponent bounds, comma separated")->delimiter(',');
  if (with_ring) sub->add_option("--ring", cfg.ring, "Fp, Fp^k, Fp(t) or Fp[e;r]");
  sub->add_option("--seed", cfg.seed, "random seed");
}

int emit(const CommandConfig& cfg, const Outcome& out) {
  std::string payload = cfg.format == "text" ? out.text : out.data.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.output << "\n";
      return kExitBadInput;
    }
    f << payload;
  }
  return out.code;
}

}  // namespace

int main(int argc, char** argv) {
  CommandConfig cfg;
  CLI::App app{"Exact computations with Witt algebras and divided-power algebras"};
  app.require_subcommand(1);
  app.add_option("-o,--output", cfg.output, "write data to this file instead of stdout");
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* bracket = app.add_subcommand("bracket-table", "structure constants of W(m;n)");
  auto* decompose = app.add_subcommand("decompose", "triangular decomposition of a derivation-automorphism");
  auto* simplicity = app.add_subcommand("simplicity", "simplicity test for W(m;n)");
  auto* derdim = app.add_subcommand("derivation-dim", "dimension of Der W(m;n)");
  auto* wittree = app.add_subcommand("wittree-verify", "Witt-Ree axioms and W(1;1) recognition");
  auto* selftest = app.add_subcommand("selftest", "quick internal consistency checks");
  for (auto* sub : {bracket, decompose, simplicity, derdim, wittree}) add_param_flags(sub, cfg);
  decompose->add_option("--morphism", cfg.morphism_file, "JSON file with generator images");
  wittree->add_option("--form", cfg.form, "witt, ree or mult");
  for (auto* sub : {bracket, decompose, simplicity, derdim, wittree, selftest}) {
    sub->add_option("-o,--output", cfg.output, "write data to this file instead of stdout");
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.subcommand == "selftest") return emit(cfg, cmd_selftest(cfg));
    validate_params(cfg);
    Outcome out;
    if (cfg.subcommand == "bracket-table")
      out = cmd_bracket_table(cfg);
    else if (cfg.subcommand == "decompose")
      out = cmd_decompose(cfg);
    else if (cfg.subcommand == "simplicity")
      out = cmd_simplicity(cfg);
    else if (cfg.subcommand == "derivation-dim")
      out = cmd_derivation_dim(cfg);
    else
      out = cmd_wittree_verify(cfg);
    if (out.code == kExitInconclusive) std::cerr << "inconclusive: retry cap reached\n";
    return emit(cfg, out);
  } catch (const ExitWith& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const not_derivation_automorphism& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotDerivationAuto;
  } catch (const iteration_cap_exceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
