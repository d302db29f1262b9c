// Command-line front end. Exit status: 0 positive answer, 1 negative answer,
// 2 error or usage.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circsign/circsign.hpp"

using namespace circsign;
using io::json;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Globals {
  std::uint64_t seed = 1;
  std::int64_t den_cap = 0;
  int max_n = 8;
  int max_p = 0;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <class T>
T load(const std::string& path) {
  return io::parse_as<T>(slurp(path));
}

BalanceRule rule_named(const std::string& name) {
  if (name == "anti-even") return BalanceRule::anti_even();
  if (name == "even-signable") return BalanceRule::even_signable();
  if (name == "odd-signable") return BalanceRule::odd_signable();
  throw ValidationError("unknown rule \"" + name + "\"");
}

json vertices_json(const std::vector<Vertex>& vs) { return json(vs); }

std::vector<RationalAngle> parse_angles(const std::vector<std::string>& texts) {
  std::vector<RationalAngle> out;
  for (const auto& t : texts) out.push_back(RationalAngle::parse(t));
  return out;
}

int print(const json& j, int status) {
  std::cout << j.dump() << "\n";
  return status;
}

int balance_find(const std::string& file, const std::string& rule) {
  const Graph g = load<Graph>(file);
  const auto l = find_balancing(g, rule_named(rule));
  if (!l) {
    std::cout << "NOT BALANCEABLE\n";
    return kNo;
  }
  return print(io::to_json(SignedGraph(g, *l)), kYes);
}

int balance_check(const std::string& file, const std::string& rule) {
  const bool ok = is_balancing(load<SignedGraph>(file), rule_named(rule));
  std::cout << (ok ? "BALANCING" : "NOT BALANCING") << "\n";
  return ok ? kYes : kNo;
}

int truemper_check(const std::string& file, const std::string& rule) {
  const bool ok = truemper_balanceable(load<Graph>(file), rule_named(rule));
  std::cout << (ok ? "BALANCEABLE" : "NOT BALANCEABLE") << "\n";
  return ok ? kYes : kNo;
}

int truemper_witnesses(const std::string& file) {
  const Graph g = load<Graph>(file);
  json wheels = json::array();
  for (const auto& w : find_wheels(g)) {
    wheels.push_back({{"cycle", vertices_json(w.cycle.vertices())},
                      {"hub", w.hub},
                      {"spokes", vertices_json(w.spokes)}});
  }
  json configs = json::array();
  for (const auto& c : find_3pcs(g)) {
    json paths = json::array();
    for (const auto& p : c.paths) paths.push_back(vertices_json(p));
    configs.push_back({{"kind", c.kind}, {"paths", paths}});
  }
  const bool any = !wheels.empty() || !configs.empty();
  return print({{"wheels", wheels}, {"three_path_configurations", configs}}, any ? kYes : kNo);
}

int c3_test(const std::string& file) {
  const auto v = embeds_in_c3(load<Graph>(file));
  if (v.embeds) {
    std::cout << "EMBEDS\n";
    return kYes;
  }
  return print({{"obstruction", to_string(*v.obstruction)}, {"vertices", vertices_json(v.witness)}},
               kNo);
}

int c3_embed(const std::string& file, const Globals& opts) {
  const auto pts = find_c3_embedding(load<Graph>(file), {opts.den_cap, false});
  if (!pts) {
    std::cout << "NO EMBEDDING\n";
    return kNo;
  }
  return print(io::angles_json(*pts), kYes);
}

int sigma_label(const std::vector<std::string>& angles) {
  return print(io::to_json(sigma_model(parse_angles(angles))), kYes);
}

int sigma_embed(const std::string& file, const Globals& opts) {
  try {
    return print(io::angles_json(universal_embed(load<SignedGraph>(file), {opts.den_cap})), kYes);
  } catch (const NotBalanceable& e) {
    std::cout << "NOT EMBEDDABLE: " << e.what() << "\n";
  } catch (const NotIndependenceTwo& e) {
    std::cout << "NOT EMBEDDABLE: " << e.what() << "\n";
  }
  return kNo;
}

int sigma_extend(const std::string& file, const std::vector<std::string>& host_angles) {
  std::vector<CirclePoint> host;
  for (const auto& a : parse_angles(host_angles)) host.emplace_back(a);
  try {
    return print(json(extend_3(host, load<SignedGraph>(file)).str()), kYes);
  } catch (const IndependentTriple& e) {
    std::cout << "NO EXTENSION: " << e.what() << "\n";
  } catch (const InconsistentTriangle& e) {
    std::cout << "NO EXTENSION: " << e.what() << "\n";
  }
  return kNo;
}

int nsp_solve_cmd(const std::string& file) {
  const auto cert = nsp_solve(load<Network>(file));
  if (!cert) {
    std::cout << "UNSAT\n";
    return kNo;
  }
  return print(io::to_json(*cert), kYes);
}

int nsp_verify_cmd(const std::string& net_file, const std::string& cert_file) {
  const bool ok = verify_certificate(load<Network>(net_file), load<Certificate>(cert_file));
  std::cout << (ok ? "VALID" : "INVALID") << "\n";
  return ok ? kYes : kNo;
}

int nsp_pc_cmd(const std::string& file) {
  const auto net = path_consistency(ra_56_65(), load<Network>(file));
  if (!net) {
    std::cout << "INCONSISTENT\n";
    return kNo;
  }
  return print(io::to_json(*net), kYes);
}

int chic_value(const std::string& file, const Globals& opts) {
  std::cout << circular_chromatic_number(load<Graph>(file), {opts.max_p}).str() << "\n";
  return kYes;
}

int chic_lt3(const std::string& file, const Globals& opts) {
  const Graph g = load<Graph>(file);
  const auto v = chi_c_less_than_3(g, {opts.max_p});
  if (!v) {
    std::cout << "NOT BELOW 3\n";
    return kNo;
  }
  return print({{"p", v.hom->p},
                {"q", v.hom->q},
                {"map", vertices_json(v.hom->map)},
                {"points", io::angles_json(v.points)},
                {"supergraph", io::to_json(v.supergraph)}},
               kYes);
}

std::vector<RationalAngle> random_generic_points(std::mt19937_64& rng, int count) {
  std::vector<RationalAngle> pts;
  std::uniform_int_distribution<std::int64_t> den(1, 120);
  while (static_cast<int>(pts.size()) < count) {
    const std::int64_t d = den(rng);
    const RationalAngle a(std::uniform_int_distribution<std::int64_t>(0, d - 1)(rng), d);
    if (!is_generic(a)) continue;
    bool fresh = true;
    for (const auto& b : pts) fresh = fresh && b != a && circ_dist(a, b) != kThird;
    if (fresh) pts.push_back(a);
  }
  return pts;
}

int gen(const std::string& what, const Globals& opts) {
  if (opts.max_n < 1) throw ValidationError("--max-n must be positive");
  std::mt19937_64 rng(opts.seed);
  const int n = std::uniform_int_distribution<int>(1, opts.max_n)(rng);
  if (what == "graph") {
    std::bernoulli_distribution coin(0.5);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (coin(rng)) edges.emplace_back(a, b);
    return print(io::to_json(Graph(n, edges)), kYes);
  }
  if (what == "sigma") return print(io::to_json(sigma_model(random_generic_points(rng, n))), kYes);
  if (what == "network") {
    const auto& ra = ra_56_65();
    Network net(ra, n);
    std::uniform_int_distribution<std::uint32_t> atoms(1, 15);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (rng() % 4 != 0) net.restrict(ra, x, y, AtomSet(atoms(rng)));
    return print(io::to_json(net), kYes);
  }
  throw ValidationError("unknown generator \"" + what + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed graphs, the circular triangle-free graph and its universal labelling"};
  app.require_subcommand(1);
  Globals opts;
  app.add_option("--seed", opts.seed, "Seed for gen");
  app.add_option("--den-cap", opts.den_cap, "Largest grid denominator for embeddings (0: automatic)");
  app.add_option("--max-n", opts.max_n, "Largest order for gen");
  app.add_option("--max-p", opts.max_p, "Largest p for circular cliques (0: |V|)");

  std::string file;
  std::string second;
  std::string rule = "anti-even";
  std::vector<std::string> angles;
  std::function<int()> action;

  auto* balance = app.add_subcommand("balance", "Balancing labellings")->require_subcommand(1);
  auto* bfind = balance->add_subcommand("find", "Find a balancing labelling of a graph");
  bfind->add_option("file", file)->required();
  bfind->add_option("--rule", rule)->check(CLI::IsMember({"anti-even", "even-signable", "odd-signable"}));
  bfind->callback([&] { action = [&] { return balance_find(file, rule); }; });
  auto* bcheck = balance->add_subcommand("check", "Check a signed graph against a rule");
  bcheck->add_option("file", file)->required();
  bcheck->add_option("--rule", rule)->check(CLI::IsMember({"anti-even", "even-signable", "odd-signable"}));
  bcheck->callback([&] { action = [&] { return balance_check(file, rule); }; });

  auto* truemper = app.add_subcommand("truemper", "Wheels and three-path configurations")
                       ->require_subcommand(1);
  auto* tcheck = truemper->add_subcommand("check", "Balanceability from local obstructions");
  tcheck->add_option("file", file)->required();
  tcheck->add_option("--rule", rule)->check(CLI::IsMember({"anti-even", "even-signable", "odd-signable"}));
  tcheck->callback([&] { action = [&] { return truemper_check(file, rule); }; });
  auto* twit = truemper->add_subcommand("witnesses", "List wheels and three-path configurations");
  twit->add_option("file", file)->required();
  twit->callback([&] { action = [&] { return truemper_witnesses(file); }; });

  auto* c3 = app.add_subcommand("c3", "The circular triangle-free graph")->require_subcommand(1);
  auto* ctest = c3->add_subcommand("test", "Decide embeddability, report an obstruction");
  ctest->add_option("file", file)->required();
  ctest->callback([&] { action = [&] { return c3_test(file); }; });
  auto* cembed = c3->add_subcommand("embed", "Place a graph on the circle");
  cembed->add_option("file", file)->required();
  cembed->callback([&] { action = [&] { return c3_embed(file, opts); }; });

  auto* sigma = app.add_subcommand("sigma", "The universal labelling")->require_subcommand(1);
  auto* slabel = sigma->add_subcommand("label", "Signed graph induced by angles");
  slabel->add_option("angles", angles, "Angles as num/den")->required();
  slabel->callback([&] { action = [&] { return sigma_label(angles); }; });
  auto* sembed = sigma->add_subcommand("embed", "Label-preserving embedding of a signed graph");
  sembed->add_option("file", file)->required();
  sembed->callback([&] { action = [&] { return sigma_embed(file, opts); }; });
  auto* sext = sigma->add_subcommand("extend", "Place the last vertex of a pattern over host angles");
  sext->add_option("file", file)->required();
  sext->add_option("--host", angles, "Angles of the host vertices, in order");
  sext->callback([&] { action = [&] { return sigma_extend(file, angles); }; });

  auto* nsp = app.add_subcommand("nsp", "Network satisfaction")->require_subcommand(1);
  auto* nsolve = nsp->add_subcommand("solve", "Decide a network, print a certificate or UNSAT");
  nsolve->add_option("file", file)->required();
  nsolve->callback([&] { action = [&] { return nsp_solve_cmd(file); }; });
  auto* nverify = nsp->add_subcommand("verify", "Check a certificate against a network");
  nverify->add_option("network", file)->required();
  nverify->add_option("certificate", second)->required();
  nverify->callback([&] { action = [&] { return nsp_verify_cmd(file, second); }; });
  auto* npc = nsp->add_subcommand("pc", "Path consistency");
  npc->add_option("file", file)->required();
  npc->callback([&] { action = [&] { return nsp_pc_cmd(file); }; });

  auto* chic = app.add_subcommand("chic", "Circular chromatic number")->require_subcommand(1);
  auto* cvalue = chic->add_subcommand("value", "Exact circular chromatic number");
  cvalue->add_option("file", file)->required();
  cvalue->callback([&] { action = [&] { return chic_value(file, opts); }; });
  auto* clt3 = chic->add_subcommand("lt3", "Decide a value below 3, with witnesses");
  clt3->add_option("file", file)->required();
  clt3->callback([&] { action = [&] { return chic_lt3(file, opts); }; });

  auto* gen_cmd = app.add_subcommand("gen", "Seeded random documents");
  gen_cmd->add_option("what", second, "graph, sigma or network")
      ->required()
      ->check(CLI::IsMember({"graph", "sigma", "network"}));
  gen_cmd->callback([&] { action = [&] { return gen(second, opts); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
