/* Copyright (C) 2026 The nfiso Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef NFISO_PARSE_HPP
#define NFISO_PARSE_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "nfiso/polyz.hpp"

namespace nfiso {

class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

  private:
    std::size_t pos_;
};

/// Reads "3*x^2 - x + 7" (the '*' is optional, any single-letter variable) or
/// a coefficient list from the constant term up, "[7, -1, 3]". Coefficients
/// are arbitrary-precision integers. The zero polynomial is rejected.
IntPoly parse_poly(std::string_view text);

}  // namespace nfiso

#endif  // NFISO_PARSE_HPP
