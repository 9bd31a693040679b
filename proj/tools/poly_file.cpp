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

#include "poly_file.hpp"

#include <cmath>
#include <fstream>

#include "gpgcd/gpgcd.h"

namespace gpgcd::cli {

PolyData parse_poly(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("polynomial document must be an object");
    if (!doc.contains("degree") || !doc["degree"].is_number_integer())
        throw ParseError("field \"degree\" must be an integer");
    const auto degree = doc["degree"].get<long long>();
    if (degree < 0) throw ParseError("field \"degree\" must be non-negative");
    if (!doc.contains("coeffs") || !doc["coeffs"].is_array())
        throw ParseError("field \"coeffs\" must be an array");
    const auto& coeffs = doc["coeffs"];
    if (coeffs.size() != static_cast<std::size_t>(degree) + 1)
        throw ParseError("\"coeffs\" must hold degree+1 entries");

    PolyData out;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const auto& c = coeffs[j];
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
            throw ParseError("coefficient " + std::to_string(j) + " must be a [re, im] pair");
        const double re = c[0].get<double>();
        const double im = c[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw ParseError("coefficient " + std::to_string(j) + " is not finite");
        out.re.push_back(re);
        out.im.push_back(im);
    }
    return out;
}

PolyData read_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return parse_poly(doc);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

nlohmann::ordered_json to_json(const PolyData& p) {
    nlohmann::ordered_json j;
    j["degree"] = p.degree();
    auto coeffs = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < p.re.size(); ++k) coeffs.push_back({p.re[k], p.im[k]});
    j["coeffs"] = std::move(coeffs);
    return j;
}

PolyData from_handle(const gpgcd_poly* p) {
    const std::size_t n = gpgcd_poly_degree(p) + 1;
    PolyData out{std::vector<double>(n), std::vector<double>(n)};
    if (gpgcd_poly_coeffs(p, out.re.data(), out.im.data(), n) != GPGCD_OK)
        throw std::runtime_error(gpgcd_last_error());
    return out;
}

}  // namespace gpgcd::cli
