#include "qsym3/json_io.hpp"

namespace qsym3 {

using nlohmann::json;

namespace {

json matrix3_to_json(const Mat3d& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

json to_json(const PureState3& state) {
  json arr = json::array();
  for (int i = 0; i < 8; ++i) {
    const complexd v = state.amplitudes()[i];
    arr.push_back(json::array({v.real(), v.imag()}));
  }
  return arr;
}

PureState3 state_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8)
    throw DomainError("state JSON must be an array of 8 [re, im] pairs");
  Vec8c amp;
  for (int i = 0; i < 8; ++i) {
    const auto& pair = j[i];
    if (!pair.is_array() || pair.size() != 2)
      throw DomainError("state JSON entries must be [re, im] pairs");
    amp[i] = complexd(pair[0].get<double>(), pair[1].get<double>());
  }
  return PureState3::normalized(amp);
}

json to_json(const CorrelationDecomposition& d) {
  return json{{"s", {d.s[0], d.s[1], d.s[2]}}, {"T", matrix3_to_json(d.T)}};
}

json to_json(const ConditionalReport& r) {
  return json{{"p_plus", r.p_plus},
              {"p_minus", r.p_minus},
              {"T_plus", matrix3_to_json(r.T_plus)},
              {"T_minus", matrix3_to_json(r.T_minus)},
              {"eig_plus", r.eig_plus},
              {"eig_minus", r.eig_minus},
              {"chsh_c_opt", r.chsh_c_opt},
              {"chsh_con_opt", r.chsh_con_opt}};
}

json to_json(const ClassVerification& v) {
  json spinors = json::array();
  for (const auto& s : v.spinors)
    spinors.push_back(json::array({json::array({s[0].real(), s[0].imag()}),
                                   json::array({s[1].real(), s[1].imag()})}));
  json out{{"class", v.k},
           {"classical_bound", v.classical_bound},
           {"stated_bound", v.stated_bound},
           {"quantum_value", v.quantum_value},
           {"expected_max", v.expected_max},
           {"residuals",
            {{"fidelity", 1.0 - v.fidelity},
             {"symmetry", v.symmetry_residual},
             {"spinors", v.spinor_residual}}},
           {"spinors", spinors},
           {"pass", v.pass}};
  if (!v.notes.empty()) out["notes"] = v.notes;
  if (v.spinor_residual_printed)
    out["spinor_residual_printed"] = *v.spinor_residual_printed;
  if (v.printed_form_fidelity)
    out["printed_form_fidelity"] = *v.printed_form_fidelity;
  if (v.alternate_quantum_values)
    out["alternate_quantum_values"] = *v.alternate_quantum_values;
  return out;
}

json to_json(const InvariantSet& inv) {
  return json{{"tau", inv.tau}, {"concurrence", inv.concurrence}};
}

}  // namespace qsym3
