#pragma once

#include <string>

#include "hmc/family.hpp"

// Output formats for coefficient tables. bfile is the OEIS convention:
// "n a(n)" per line, ascending n, nonzero entries only, newline-terminated.
// json carries every count as a decimal string (values pass 64 bits early).
namespace hmc::report_io {

std::string to_bfile(const CountReport& rep);
std::string to_csv(const CountReport& rep);
std::string to_plain(const CountReport& rep);
std::string to_json(const CountReport& rep);

CountReport from_json(const std::string& text);

Kind kind_from_string(const std::string& s);
Method method_from_string(const std::string& s);

} // namespace hmc::report_io
