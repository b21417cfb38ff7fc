// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rok/construct.hpp"
#include "rok/distribution.hpp"
#include "rok/orlicz.hpp"
#include "rok/report.hpp"
#include "rok/step.hpp"

namespace rok {

using json = nlohmann::json;

// {"plateaus": [[length, value], ...]}
json to_json(const DecreasingStep& f);
DecreasingStep step_from_json(const json& j);

// {"atoms": [[value, mass], ...]}
json to_json(const DiscreteDistribution& d);
DiscreteDistribution law_from_json(const json& j);

// {"family":"Mp","p":1.5} | {"family":"Nn","q":2,"n":8} | {"family":"Mny",...}
// | {"family":"NM",...} | {"family":"MaxP2",...} | {"family":"power",...}
// | {"family":"tabulated","points":[[t,M],...]}
OrliczFunction orlicz_from_json(const json& j);

// {"form":"power","theta":0.5} | {"form":"from_M","M":<spec>,"p":1.3}
// | {"form":"grid","points":[[t,phi],...]}
QuasiConcaveFn quasiconcave_from_json(const json& j);

json to_json(const VerificationReport& r);
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r);

void write_jsonl(const std::vector<VerificationReport>& rs, std::ostream& os);
void write_csv(const std::vector<VerificationReport>& rs, std::ostream& os);

}  // namespace rok
