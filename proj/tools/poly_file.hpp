/*
 Copyright 2026 The gpgcd Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

// Reading and writing polynomial documents for the command-line tool:
//   {"degree": 2, "coeffs": [[re, im], [re, im], [re, im]]}
// with coefficients in ascending degree order.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

struct gpgcd_poly;

namespace gpgcd::cli {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PolyData {
    std::vector<double> re;
    std::vector<double> im;

    std::size_t degree() const { return re.size() - 1; }
};

/// Throws ParseError on schema violations (missing fields, length mismatch,
/// non-numeric or non-finite entries).
PolyData parse_poly(const nlohmann::json& doc);
PolyData read_poly_file(const std::string& path);

nlohmann::ordered_json to_json(const PolyData& p);
/// Copies a library polynomial out through the C API.
PolyData from_handle(const gpgcd_poly* p);

}  // namespace gpgcd::cli
