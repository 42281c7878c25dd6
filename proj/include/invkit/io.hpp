#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "invkit/classical.hpp"
#include "invkit/embeddings.hpp"
#include "invkit/group_actions.hpp"
#include "invkit/pgg.hpp"

namespace invkit::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Matrix from nested arrays of integers or rational strings "p/q".
RationalMatrix matrix_from_json(const Json& j, const Field& field = {});
Json matrix_to_json(const RationalMatrix& m);
Json scalars_to_json(const std::vector<Scalar>& v);

/// {"kind":"finite","matrices":[...]} or {"kind":"Sl"|"Sp"|"O"|"SO","m":int,"form":[[...]]}.
/// A missing form selects the standard one.
GroupActionSpec group_from_json(const Json& j, const Field& field = {});
Json group_to_json(const GroupActionSpec& g);
Json classical_to_json(const ClassicalGroupSpec& g);

/// {"generators":[{"name","degree"}...],"relations":[string...],"t_bound"?:int};
/// extra keys (realizations, t_claimed) are ignored.
GradedPresentation presentation_from_json(const Json& j, const Field& field = {});
Json presentation_to_json(const GradedPresentation& p);

Json generator_table_to_json(const GeneratorTable& t);
Json classical_presentation_to_json(const ClassicalPresentation& p);
Json verification_to_json(const VerificationReport& r);
Json certificate_to_json(const PggCertificate& c);
Json chart_to_json(const EmbeddingChart& c);
Json veronese_to_json(const VeroneseReport& r);
Json semistability_to_json(const SemistabilityReport& r);

std::string route_name(PggRoute r);

/// Reads and parses a JSON file; throws std::invalid_argument on failure.
Json read_json_file(const std::string& path);

}  // namespace invkit::io
