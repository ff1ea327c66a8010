#ifndef AMEN_JSON_IO_HPP
#define AMEN_JSON_IO_HPP

#include <json.hpp>

#include "amen/folner.hpp"
#include "amen/measure.hpp"
#include "amen/modrank.hpp"
#include "amen/paradox.hpp"

namespace amen {

nlohmann::json to_json(const AlgebraPresentation& pres, const FolnerCertificate& c);
FolnerCertificate folner_certificate_from_json(const AlgebraPresentation& pres,
                                               const nlohmann::json& j);

nlohmann::json to_json(const AlgebraPresentation& pres, const ParadoxCertificate& c);
ParadoxCertificate paradox_certificate_from_json(const AlgebraPresentation& pres,
                                                 const nlohmann::json& j);

nlohmann::json to_json(const AlgebraPresentation& pres, const ParadoxDeficiency& d);

nlohmann::json to_json(const DensityReport& rep);

}  // namespace amen

#endif
