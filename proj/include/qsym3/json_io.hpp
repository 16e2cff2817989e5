#pragma once

#include <json.hpp>

#include "qsym3/bell322.hpp"
#include "qsym3/conditional.hpp"
#include "qsym3/correlations.hpp"
#include "qsym3/invariants.hpp"
#include "qsym3/state.hpp"

namespace qsym3 {

/// States serialize as length-8 arrays of [re, im] pairs, index 4a + 2b + c.
nlohmann::json to_json(const PureState3& state);
PureState3 state_from_json(const nlohmann::json& j);

/// {"s": [3], "T": [[3x3]]}
nlohmann::json to_json(const CorrelationDecomposition& d);

/// Fields p_plus, p_minus, T_plus, T_minus, eig_plus, eig_minus,
/// chsh_c_opt, chsh_con_opt.
nlohmann::json to_json(const ConditionalReport& r);

nlohmann::json to_json(const ClassVerification& v);

nlohmann::json to_json(const InvariantSet& inv);

}  // namespace qsym3
