#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "phik/menon.hpp"
#include "phik/summatory.hpp"

namespace phik::io {

using nlohmann::json;

/// Digits after the decimal point for enclosure endpoints.
inline constexpr unsigned kEnclosureDigits = 30;

/// Rational as "p" or "p/q".
std::string exact(const Rational& v);

json to_json(const IdentityReport& report);
json to_json(const PartialSum& sum);
/// {k, prime_bound, lo, hi, width}; lo rounded down, hi and width rounded up.
json to_json(const Enclosure& enclosure, unsigned k, u64 prime_bound);

/// Column order: x,sum,main_term_lo,main_term_hi,delta,normalized_ratio
inline constexpr const char* kErrorTableHeader =
    "x,sum,main_term_lo,main_term_hi,delta,normalized_ratio";
std::string error_table_csv(const std::vector<ErrorRow>& rows);
json to_json(const std::vector<ErrorRow>& rows, unsigned k);

/// Resolved `--f` argument.
struct FunctionSpec {
    ArithmeticFunction f;
    std::vector<std::pair<std::pair<unsigned, u64>, Rational>> rhs_override;
};

/// Table file: either a flat object {"d": value, ...} or
/// {"values": {"d": value, ...}, "rhs": {"k,n": value, ...}}. Values are
/// integers or decimal strings. `rhs` entries pin the right-hand side of
/// the general Menon identity for the given (k, n).
FunctionSpec parse_function_table(const std::string& name, const std::string& json_text);

/// `id`, `one`, `tau`, `mu`, `pow:j`, any registered name, or `table:<path>`.
FunctionSpec parse_function_spec(const std::string& spec);

}  // namespace phik::io
