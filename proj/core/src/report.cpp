#include "nilrep/report.hpp"

#include <sstream>

#include "nilrep/invariants.hpp"
#include "nilrep/parse.hpp"

namespace nilrep {

std::string reduction_statement(std::size_t r) {
  return "Hom(Γ,G)₁ ≃ Hom(ℤ^" + std::to_string(r) + ",G)₁";
}

AnalysisReport analyze(const GroupSpec &g, const ReductiveSpec &spec,
                       const AnalyzeOptions &options) {
  spec.validate();
  AnalysisReport report;
  report.group = render_group_spec(g);
  report.target = render_reductive_spec(spec);
  report.h1 = abelianize(g);
  report.r = options.r_override.value_or(report.h1.rank);
  report.reduction = reduction_statement(report.r);

  const RootDatum rd = build_root_datum(spec);
  report.weyl_order = rd.weyl_order();
  report.pi1_target = pi1_G(rd);
  report.pi1_hom = power(report.pi1_target, report.r);
  report.pi1_char = AbelianInvariants::free(pi1_G_ab(rd) * report.r);

  if (report.r > options.r_max_guard) {
    report.poincare_note = "Poincare polynomials skipped: r = " + std::to_string(report.r) +
                           " exceeds the guard " + std::to_string(options.r_max_guard);
  } else if (report.weyl_order > kMaxWeylOrder) {
    report.poincare_note = "Poincare polynomials skipped: |W| = " +
                           report.weyl_order.get_str() + " exceeds the enumeration bound";
  } else {
    report.poincare_hom = poincare_hom_component(rd, report.r);
    report.poincare_char = poincare_char_variety(rd, report.r);
  }

  report.verdict = connectivity_verdict(g, spec);

  report.caveats = {
      "Only the identity component (the component of the trivial representation) is "
      "described; other components can have different homotopy types.",
      "Cohomology is computed for connected G; every supported target family is connected.",
      "Betti numbers are rational; they are the same over any field of characteristic 0 or "
      "prime to |W| = " +
          report.weyl_order.get_str() + ".",
      "The connectivity verdict holds for both Hom(Gamma,G) and the character variety "
      "Hom(Gamma,G)//G.",
  };
  if (options.r_override)
    report.caveats.push_back("r was overridden to " + std::to_string(report.r) +
                             "; pi1 and cohomology describe Hom(Z^" +
                             std::to_string(report.r) + ",G)_1.");
  return report;
}

namespace {

nlohmann::json integer_json(const Integer &v) {
  if (v.fits_slong_p())
    return v.get_si();
  return v.get_str();
}

} // namespace

nlohmann::json to_json(const AbelianInvariants &a) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto &t : a.torsion)
    torsion.push_back(integer_json(t));
  return {{"rank", a.rank}, {"torsion", torsion}};
}

nlohmann::json to_json(const GradedPoly &p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &c : p.coefficients())
    out.push_back(integer_json(c));
  return out;
}

nlohmann::json to_json(const Verdict &v) {
  nlohmann::json out{{"status", std::string(to_string(v.status))},
                     {"reason", v.reason},
                     {"rule", std::string(to_string(v.rule))}};
  if (!v.witness.empty())
    out["witness"] = v.witness;
  if (v.embedding_factor)
    out["embedding_factor"] = *v.embedding_factor;
  return out;
}

nlohmann::json to_json(const AnalysisReport &report) {
  nlohmann::json out;
  out["group"] = report.group;
  out["target"] = report.target;
  out["rank_h1"] = report.h1.rank;
  out["torsion_h1"] = to_json(report.h1)["torsion"];
  out["r"] = report.r;
  out["reduction"] = report.reduction;
  out["weyl_order"] = integer_json(report.weyl_order);
  out["pi1_target"] = to_json(report.pi1_target);
  out["pi1_hom"] = to_json(report.pi1_hom);
  out["pi1_char"] = to_json(report.pi1_char);
  out["poincare_hom"] = report.poincare_hom ? to_json(*report.poincare_hom) : nlohmann::json(nullptr);
  out["poincare_char"] = report.poincare_char ? to_json(*report.poincare_char) : nlohmann::json(nullptr);
  if (report.poincare_note)
    out["poincare_note"] = *report.poincare_note;
  out["verdict"] = to_json(report.verdict);
  out["caveats"] = report.caveats;
  return out;
}

nlohmann::json error_to_json(const Error &e) {
  nlohmann::json err{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (const auto *pe = dynamic_cast<const ParseError *>(&e)) {
    err["position"] = pe->position();
    err["expected"] = pe->expected();
  }
  return {{"error", err}};
}

std::string to_text(const AnalysisReport &report) {
  std::ostringstream os;
  os << "group            " << report.group << '\n'
     << "target           " << report.target << '\n'
     << "H1(Gamma;Z)      " << report.h1.to_string() << "   (rank " << report.h1.rank << ")\n"
     << "reduction        " << report.reduction << '\n'
     << "pi1(G)           " << report.pi1_target.to_string() << '\n'
     << "pi1 Hom_1        " << report.pi1_hom.to_string() << '\n'
     << "pi1 char_1       " << report.pi1_char.to_string() << '\n';
  if (report.poincare_hom) {
    os << "Poincare Hom_1   " << report.poincare_hom->to_string() << '\n'
       << "Poincare char_1  " << report.poincare_char->to_string() << '\n';
  } else if (report.poincare_note) {
    os << "Poincare         " << *report.poincare_note << '\n';
  }
  os << "verdict          " << to_string(report.verdict.status) << " ("
     << to_string(report.verdict.rule) << ")\n"
     << "                 " << report.verdict.reason << '\n'
     << "caveats\n";
  for (const auto &c : report.caveats)
    os << "  - " << c << '\n';
  return os.str();
}

} // namespace nilrep
