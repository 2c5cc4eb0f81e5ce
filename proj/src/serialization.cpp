#include "quatlie/serialization.hpp"

namespace quatlie {

json blade_to_json(BladeMask m) {
  json a = json::array();
  for (int i = 1; m != 0; ++i, m >>= 1)
    if (m & 1) a.push_back(i);
  return a;
}

BladeMask blade_from_json(const json& j) {
  BladeMask m = 0;
  for (const auto& idx : j) m |= BladeMask(1) << (idx.get<int>() - 1);
  return m;
}

json multivector_to_json(const Multivector& u) {
  json terms = json::array();
  for (const auto& [m, c] : u.terms()) {
    terms.push_back({{"blade", blade_to_json(m)},
                     {"re", c.re.to_string()},
                     {"im", c.im.to_string()}});
  }
  return {{"p", u.sig().p()}, {"q", u.sig().q()}, {"terms", terms}};
}

Multivector multivector_from_json(const json& j) {
  Signature sig(j.at("p").get<int>(), j.at("q").get<int>());
  Multivector u(sig);
  for (const auto& t : j.at("terms")) {
    BladeMask m = blade_from_json(t.at("blade"));
    ExactComplex c(Rational::from_string(t.at("re").get<std::string>()),
                   Rational::from_string(t.at("im").get<std::string>()));
    u.add_term(m, c);
  }
  return u;
}

namespace {

json violations_to_json(const std::vector<std::pair<BladeMask, BladeMask>>& violations) {
  json a = json::array();
  for (const auto& [x, y] : violations)
    a.push_back({{"a", blade_to_json(x)}, {"b", blade_to_json(y)}});
  return a;
}

}  // namespace

json closure_report_to_json(const ClosureReport& r) {
  return {{"id", r.id},
          {"p", r.p},
          {"q", r.q},
          {"passed", r.passed},
          {"violations", violations_to_json(r.violations)}};
}

json spin_report_to_json(const SpinChecksReport& r) {
  return {{"id", 0},
          {"p", r.p},
          {"q", r.q},
          {"passed", r.passed()},
          {"violations", violations_to_json(r.violations)}};
}

json commutation_report_to_json(const CommutationTableReport& r) {
  json rels = json::array();
  for (const auto& rel : r.relations)
    rels.push_back({{"s", rel.s},
                    {"t", rel.t},
                    {"target", rel.target},
                    {"passed", rel.passed},
                    {"violations", violations_to_json(rel.violations)}});
  return {{"p", r.p}, {"q", r.q}, {"passed", r.passed()}, {"relations", rels}};
}

namespace {

json additional_signature_to_json(const AdditionalSignature& as) {
  return {{"k", as.k}, {"l", as.l}, {"kp", as.kp},
          {"lp", as.lp}, {"kq", as.kq}, {"lq", as.lq}};
}

}  // namespace

json representation_to_json(const Representation& rep, const AdditionalSignature& as) {
  json mats = json::array();
  for (const auto& g : rep.gens) {
    json rows = json::array();
    for (int i = 0; i < g.size(); ++i) {
      json row = json::array();
      for (int j = 0; j < g.size(); ++j) {
        const ExactComplex& c = g.at(i, j);
        if (c.re.den() != 1 || c.im.den() != 1)
          throw std::domain_error("representation_to_json: non-integer entry");
        row.push_back({c.re.num(), c.im.num()});
      }
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  return {{"p", rep.sig.p()},
          {"q", rep.sig.q()},
          {"kind", "beta"},
          {"matrices", mats},
          {"additional_signature", additional_signature_to_json(as)}};
}

json normal_formed_to_json(const NormalFormedRep& rep, const AdditionalSignature& as) {
  json mats = json::array();
  for (const auto& g : rep.gens) {
    json rows = json::array();
    for (int i = 0; i < g.size(); ++i) {
      json row = json::array();
      for (int j = 0; j < g.size(); ++j)
        row.push_back({g.at(i, j).real(), g.at(i, j).imag()});
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  const bool orth = rep.kind == NormalFormKind::OrthJ || rep.kind == NormalFormKind::OrthOmega;
  return {{"p", rep.sig.p()},
          {"q", rep.sig.q()},
          {"kind", orth ? "zeta" : "gamma"},
          {"matrices", mats},
          {"additional_signature", additional_signature_to_json(as)}};
}

json classification_to_json(int id, Signature sig, const ClassicalLieAlgebra& d) {
  json j = {{"id", id},
            {"p", sig.p()},
            {"q", sig.q()},
            {"family", family_name(d.family, false)},
            {"matrix_size", d.matrix_size},
            {"summands", d.summands},
            {"real_dim", real_dim(d)},
            {"paper_branch", d.branch}};
  if (d.family == Family::GL) j["base"] = base_name(d.base);
  if (d.family == Family::U) j["signature"] = {d.indef_pos, d.indef_neg};
  return j;
}

json verification_report_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"status", c.passed ? "pass" : "fail"},
                      {"residual", c.residual},
                      {"witness", c.witness}});
  return {{"id", r.id},
          {"p", r.p},
          {"q", r.q},
          {"passed", r.passed()},
          {"seed", r.seed},
          {"tolerances",
           {{"structural", r.tol_structural}, {"exponential", r.tol_exponential}}},
          {"checks", checks}};
}

json verification_reports_to_json(const std::vector<VerificationReport>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(verification_report_to_json(r));
  return a;
}

}  // namespace quatlie
