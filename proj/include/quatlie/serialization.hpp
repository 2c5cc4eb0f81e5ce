#pragma once

#include <json.hpp>

#include "quatlie/classifier.hpp"
#include "quatlie/normal_form.hpp"
#include "quatlie/quat_lie.hpp"
#include "quatlie/representation.hpp"
#include "quatlie/verifier.hpp"

namespace quatlie {

using json = nlohmann::json;

/// Blades serialize as ascending 1-based index arrays: e_13 -> [1,3].
json blade_to_json(BladeMask m);
BladeMask blade_from_json(const json& j);

/// {"p":..,"q":..,"terms":[{"blade":[...],"re":"num/den","im":"num/den"}]}
json multivector_to_json(const Multivector& u);
Multivector multivector_from_json(const json& j);

/// {"id":..,"p":..,"q":..,"passed":..,"violations":[{"a":[...],"b":[...]}]}
json closure_report_to_json(const ClosureReport& r);
json spin_report_to_json(const SpinChecksReport& r);
json commutation_report_to_json(const CommutationTableReport& r);

/// {"p":..,"q":..,"kind":"beta","matrices":[[[re,im],...],...],
///  "additional_signature":{"k":..,"l":..,"kp":..,"lp":..,"kq":..,"lq":..}}
/// Exact entries as integer pairs.
json representation_to_json(const Representation& rep, const AdditionalSignature& as);
/// Same schema with kind "gamma" or "zeta" and double entries.
json normal_formed_to_json(const NormalFormedRep& rep, const AdditionalSignature& as);

/// {"id":..,"p":..,"q":..,"family":..,"base":..,"matrix_size":..,
///  "summands":..,"real_dim":..,"paper_branch":..}
json classification_to_json(int id, Signature sig, const ClassicalLieAlgebra& d);

json verification_report_to_json(const VerificationReport& r);
json verification_reports_to_json(const std::vector<VerificationReport>& rs);

}  // namespace quatlie
