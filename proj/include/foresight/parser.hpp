#pragma once

#include <string_view>

#include "foresight/ast.hpp"
#include "foresight/diagnostics.hpp"

namespace foresight::lang {

// Parsing is total: these never throw.  On failure `value` is empty and at
// least one Error diagnostic explains why; warnings may accompany a value.
//
// parse_domain additionally runs domain-local semantic checks (declaration
// consistency, arity/type agreement, variable binding, one cpf per state
// fluent).  Instance/domain cross-checks happen later, at grounding, because
// an instance file alone does not know the domain's schemas.
Result<DomainSpec> parse_domain(std::string_view text,
                                std::string filename = "<domain>");

Result<InstanceSpec> parse_instance(std::string_view text,
                                    std::string filename = "<instance>");

}  // namespace foresight::lang
