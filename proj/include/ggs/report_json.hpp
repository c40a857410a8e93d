#ifndef GGS_REPORT_JSON_HPP
#define GGS_REPORT_JSON_HPP

#include <json.hpp>

#include "ggs/formulas.hpp"
#include "ggs/verify.hpp"

namespace ggs {

nlohmann::json to_json(const CheckRecord& record);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const IndexReport& report);

} // namespace ggs

#endif
