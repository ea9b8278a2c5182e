#pragma once

#include "bergman/cpoly.hpp"
#include "bergman/symbol.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace bergman::io {

/// Shortest decimal text that round-trips to the same double.
std::string fmt(double x);

/// Parses "1.5", "-2i", "0.5+0.25i", "1e-3-2e-1i", "i".
cplx parse_complex(const std::string& text);
std::string fmt_complex(cplx z);

/// Polynomials and coefficient lists serialise as arrays of [re, im] pairs.
nlohmann::json to_json(std::span<const cplx> coeffs);
std::vector<cplx> coeffs_from_json(const nlohmann::json& j);
nlohmann::json to_json(cplx z);
cplx complex_from_json(const nlohmann::json& j);

/// {"m": int, "anti": [...], "ana": [...]} or {"family": {"m", "alpha", "beta", "gamma"}}.
Symbol symbol_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Symbol& sym);

/// Matrix entries as row-major little-endian complex doubles (re, im per entry).
void write_complex_binary(std::ostream& os, std::span<const cplx> row_major);

}  // namespace bergman::io
