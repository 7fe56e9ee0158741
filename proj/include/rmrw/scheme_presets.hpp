#ifndef RMRW_SCHEME_PRESETS_HPP
#define RMRW_SCHEME_PRESETS_HPP

#include <memory>
#include <string>

#include "rmrw/rm_codes.hpp"

namespace rmrw {

// Built-in preset names: "con1" (the q=3,z=2,r=1 table scheme),
// "con2-example3" (Construction 2 with the table ingredient, identical
// behavior), "uncoded-q3z2" (full enumerative code, cost unconstrained).
// Anything else is treated as a path to a scheme JSON file:
//   {"schema":1, "construction":"con1|con2|con3|con6|uncoded",
//    "q":..., "z":... or "z_w":..., "r":...,
//    "ingredient": {"id":"example3|hash|polar-weak", ...params...}}
std::unique_ptr<RmScheme> load_scheme(const std::string& name_or_path);

std::unique_ptr<RmScheme> scheme_from_json_text(const std::string& text);

}  // namespace rmrw

#endif
