#pragma once

#include <string>

#include "foresight/ast.hpp"

namespace foresight::lang {

// Canonical pretty-printers.  Guarantee: re-parsing printed text yields a
// structurally equal spec (parse . print . parse == parse).
std::string print_domain(const DomainSpec& d);
std::string print_instance(const InstanceSpec& inst);
std::string print_expr(const Expr& e);

}  // namespace foresight::lang
