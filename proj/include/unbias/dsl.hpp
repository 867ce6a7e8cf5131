#pragma once

// Text syntax for object and morphism terms.
//
//   obj := "I" | ident | "(" obj "*" obj ")"
//   mor := "id" obj | "a" obj obj obj | "l" obj | "r" obj | "b" obj obj
//        | mor ";" mor | "(" mor "*" mor ")" | "(" mor ")" | "inv" "(" mor ")"
//
// ";" is diagram-order composition and associates to the left.

#include <string>

#include "unbias/free_smc.hpp"

namespace unbias {

std::string render(const ObjTerm& t);
std::string render(const MorTerm& t);

// Both throw SyntaxError with the line and column of the offending token.
ObjTerm parse_obj(const std::string& text);
MorTerm parse_mor(const std::string& text);

}  // namespace unbias
