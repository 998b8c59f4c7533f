#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nilrep/error.hpp"
#include "nilrep/finite_hom.hpp"
#include "nilrep/invariants.hpp"
#include "nilrep/parse.hpp"
#include "nilrep/report.hpp"

using namespace nilrep;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Parse:
  case ErrorKind::InvalidArgument:
    return kExitParse;
  case ErrorKind::UnsupportedType:
  case ErrorKind::UnsupportedQuotient:
  case ErrorKind::UnsupportedGroup:
  case ErrorKind::TooLarge:
    return kExitUnsupported;
  case ErrorKind::InexactDivision:
    break;
  }
  return kExitFailure;
}

struct Options {
  std::string group;
  std::string target;
  std::string finite = "Q8";
  bool json_output = false;
  std::optional<std::size_t> r_override;
  std::size_t r_max_guard = AnalyzeOptions{}.r_max_guard;
  unsigned m = 1;
};

void emit(const Options &o, const json &j, const std::string &text) {
  if (o.json_output)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::size_t exponent_for(const Options &o) {
  if (o.r_override)
    return *o.r_override;
  if (o.group.empty())
    throw Error(ErrorKind::InvalidArgument, "either --group or --r-override is required");
  return abelianize(parse_group_spec(o.group)).rank;
}

int cmd_analyze(const Options &o) {
  AnalyzeOptions a;
  a.r_override = o.r_override;
  a.r_max_guard = o.r_max_guard;
  const auto report = analyze(parse_group_spec(o.group), parse_reductive_spec(o.target), a);
  emit(o, to_json(report), to_text(report));
  return kExitOk;
}

int cmd_poincare(const Options &o) {
  const auto spec = parse_reductive_spec(o.target);
  const std::size_t r = exponent_for(o);
  if (r > o.r_max_guard)
    throw Error(ErrorKind::TooLarge, "r = " + std::to_string(r) + " exceeds the guard " +
                                         std::to_string(o.r_max_guard));
  const auto rd = build_root_datum(spec);
  const auto hom = poincare_hom_component(rd, r);
  const auto chr = poincare_char_variety(rd, r);
  const json j{{"target", render_reductive_spec(spec)},
               {"r", r},
               {"poincare_hom", to_json(hom)},
               {"poincare_char", to_json(chr)}};
  emit(o, j,
       "target           " + render_reductive_spec(spec) + "\nr                " +
           std::to_string(r) + "\nPoincare Hom_1   " + hom.to_string() +
           "\nPoincare char_1  " + chr.to_string() + "\n");
  return kExitOk;
}

int cmd_pi1(const Options &o) {
  const auto spec = parse_reductive_spec(o.target);
  const auto rd = build_root_datum(spec);
  const auto g = pi1_G(rd);
  json j{{"target", render_reductive_spec(spec)}, {"pi1_target", to_json(g)}};
  std::string text = "target           " + render_reductive_spec(spec) + "\npi1(G)           " +
                     g.to_string() + "\n";
  if (o.r_override || !o.group.empty()) {
    const std::size_t r = exponent_for(o);
    const auto hom = power(g, r);
    const auto chr = AbelianInvariants::free(pi1_G_ab(rd) * r);
    j["r"] = r;
    j["pi1_hom"] = to_json(hom);
    j["pi1_char"] = to_json(chr);
    text += "r                " + std::to_string(r) + "\npi1 Hom_1        " + hom.to_string() +
            "\npi1 char_1       " + chr.to_string() + "\n";
  }
  emit(o, j, text);
  return kExitOk;
}

int cmd_connectivity(const Options &o) {
  const auto g = parse_group_spec(o.group);
  const auto spec = parse_reductive_spec(o.target);
  const auto v = connectivity_verdict(g, spec);
  json j{{"group", render_group_spec(g)},
         {"target", render_reductive_spec(spec)},
         {"verdict", to_json(v)}};
  std::string text = std::string(to_string(v.status)) + " (" + std::string(to_string(v.rule)) +
                     ")\n" + v.reason + "\n";
  emit(o, j, text);
  return kExitOk;
}

int cmd_homcount(const Options &o) {
  const auto g = parse_group_spec(o.group);
  const auto f = parse_finite_group(o.finite);
  const auto result = enumerate_homs(g, f);
  json j{{"group", render_group_spec(g)},
         {"finite", o.finite},
         {"order", f.order()},
         {"total", result.total},
         {"surjective", result.surjective}};
  std::string text = "homomorphisms    " + std::to_string(result.total) +
                     "\nsurjective       " + std::to_string(result.surjective) + "\n";
  if (result.witness) {
    json labels = json::array();
    std::string shown;
    for (Element e : *result.witness) {
      labels.push_back(f.label(e));
      shown += (shown.empty() ? "" : ", ") + f.label(e);
    }
    j["witness"] = labels;
    text += "witness          " + shown + "\n";
  }
  emit(o, j, text);
  return kExitOk;
}

int cmd_bound(const Options &o) {
  const auto b = central_image_order_bound(o.m);
  emit(o, json{{"m", o.m}, {"bound", b.fits_slong_p() ? json(b.get_si()) : json(b.get_str())}},
       b.get_str() + "\n");
  return kExitOk;
}

int cmd_selftest(const Options &o) {
  struct Probe {
    const char *name;
    std::function<bool()> check;
  };
  const auto sl2 = build_root_datum(parse_reductive_spec("SL2"));
  const std::vector<Probe> probes{
      {"Hom(Z,SL2)_1 ~ S^3",
       [&] { return poincare_hom_component(sl2, 1) == GradedPoly{1, 0, 0, 1}; }},
      {"Molien identity",
       [&] { return poincare_hom_component(sl2, 0) == GradedPoly{1}; }},
      {"Hom(H3,Q8) = 64, 24 onto",
       [] {
         const auto r = enumerate_homs(GroupSpec::heisenberg(), q8());
         return r.total == 64 && r.surjective == 24;
       }},
      {"Hom(Z^2,Q8) = 40",
       [] { return enumerate_homs(GroupSpec::free_abelian(2), q8()).total == 40; }},
      {"H3 into SL2 is disconnected",
       [] {
         return connectivity_verdict(GroupSpec::heisenberg(), parse_reductive_spec("SL2"))
                    .status == Connectivity::Disconnected;
       }},
      {"central bound m=3 is 64", [] { return central_image_order_bound(3) == 64; }},
  };
  json results = json::array();
  std::string text;
  bool all = true;
  for (const auto &p : probes) {
    const bool ok = p.check();
    all = all && ok;
    results.push_back({{"name", p.name}, {"passed", ok}});
    text += std::string(ok ? "PASS  " : "FAIL  ") + p.name + "\n";
  }
  emit(o, json{{"passed", all}, {"checks", results}}, text);
  return all ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Representation varieties of nilpotent groups in reductive groups"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options &)> command;

  auto add_json = [&](CLI::App *sub) {
    sub->add_flag("--json", o.json_output, "Emit JSON instead of text");
  };
  auto add_group = [&](CLI::App *sub, bool required) {
    auto *opt = sub->add_option("-g,--group", o.group, "Nilpotent group, e.g. \"H3\"");
    if (required)
      opt->required();
  };
  auto add_target = [&](CLI::App *sub) {
    sub->add_option("-t,--target", o.target, "Reductive group, e.g. \"SL2 x T1\"")->required();
  };
  auto add_override = [&](CLI::App *sub) {
    sub->add_option("--r-override", o.r_override,
                    "Use Hom(Z^N, G) instead of the abelianization rank");
  };

  auto *analyze_cmd = app.add_subcommand("analyze", "Full report for a group and a target");
  add_group(analyze_cmd, true);
  add_target(analyze_cmd);
  add_override(analyze_cmd);
  analyze_cmd->add_option("--r-max", o.r_max_guard, "Skip Poincare polynomials above this r");
  add_json(analyze_cmd);
  analyze_cmd->callback([&] { command = cmd_analyze; });

  auto *poincare_cmd = app.add_subcommand("poincare", "Poincare polynomials of identity components");
  add_group(poincare_cmd, false);
  add_target(poincare_cmd);
  add_override(poincare_cmd);
  poincare_cmd->add_option("--r-max", o.r_max_guard, "Refuse exponents above this value");
  add_json(poincare_cmd);
  poincare_cmd->callback([&] { command = cmd_poincare; });

  auto *pi1_cmd = app.add_subcommand("pi1", "Fundamental groups of the target and components");
  add_group(pi1_cmd, false);
  add_target(pi1_cmd);
  add_override(pi1_cmd);
  add_json(pi1_cmd);
  pi1_cmd->callback([&] { command = cmd_pi1; });

  auto *conn_cmd = app.add_subcommand("connectivity", "Connectivity verdict");
  add_group(conn_cmd, true);
  add_target(conn_cmd);
  add_json(conn_cmd);
  conn_cmd->callback([&] { command = cmd_connectivity; });

  auto *hom_cmd = app.add_subcommand("homcount", "Count homomorphisms into a finite group");
  add_group(hom_cmd, true);
  hom_cmd->add_option("-f,--finite", o.finite, "Finite group: Q8, Cn, Dn, Sn joined by x")
      ->capture_default_str();
  add_json(hom_cmd);
  hom_cmd->callback([&] { command = cmd_homcount; });

  auto *bound_cmd = app.add_subcommand("bound", "Order bound for central images");
  bound_cmd->add_option("-m,--m", o.m, "Matrix size")->required()->check(CLI::PositiveNumber);
  add_json(bound_cmd);
  bound_cmd->callback([&] { command = cmd_bound; });

  auto *self_cmd = app.add_subcommand("selftest", "Run built-in sanity checks");
  add_json(self_cmd);
  self_cmd->callback([&] { command = cmd_selftest; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    return command(o);
  } catch (const Error &e) {
    if (o.json_output)
      std::cout << error_to_json(e).dump(2) << '\n';
    else
      std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}
