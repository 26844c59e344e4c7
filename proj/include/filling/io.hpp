#pragma once

#include "filling/certify.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace filling::io {

using Json = nlohmann::json;

/// Malformed input; the message names the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json algebra_to_json(const GradedLieAlgebra& algebra);
/// Structural parse only; run validate() on the result before using it.
AlgebraPtr algebra_from_json(const Json& json);

Json form_to_json(const InvariantForm& form);
InvariantForm form_from_json(const Json& json, const AlgebraPtr& algebra);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& json);

Json kernel_to_json(const KernelBasis& basis, bool include_forms);

/// Stable text: two-space indentation, trailing newline.
std::string dump(const Json& json);

AlgebraPtr load_algebra_file(const std::string& path);

/// Human-readable form, e.g. "h_1*^K* - 2/1 i_1*^J*".
std::string format_form(const InvariantForm& form);

} // namespace filling::io
