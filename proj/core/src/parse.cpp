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
#include "nfiso/parse.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace nfiso {

namespace {

constexpr unsigned long kMaxDegree = 1u << 20;

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    IntPoly run() {
        skip();
        if (at_end()) fail("empty input");
        IntPoly out = peek() == '[' ? list() : expression();
        skip();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
        if (out.is_zero()) throw ParseError("zero polynomial", 0);
        return out;
    }

  private:
    std::string_view s_;
    std::size_t i_ = 0;
    char var_ = 0;

    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[i_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    bool digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    Integer number() {
        const std::size_t start = i_;
        while (digit()) ++i_;
        if (start == i_) fail("expected a number");
        if (peek() == '.' || peek() == '/') fail("non-integer coefficient");
        return Integer(std::string(s_.substr(start, i_ - start)));
    }

    Integer signed_number() {
        skip();
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++i_;
            skip();
        }
        Integer v = number();
        return neg ? Integer(-v) : v;
    }

    IntPoly list() {
        ++i_;
        std::vector<Integer> coeffs;
        skip();
        if (peek() == ']') fail("empty coefficient list");
        while (true) {
            coeffs.push_back(signed_number());
            skip();
            if (peek() == ',') {
                ++i_;
                continue;
            }
            if (peek() == ']') {
                ++i_;
                break;
            }
            if (peek() == '.' || peek() == '/') fail("non-integer coefficient");
            fail("expected ',' or ']'");
        }
        return IntPoly(std::move(coeffs));
    }

    bool letter() const { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

    unsigned long power() {
        const char v = peek();
        if (var_ == 0) var_ = v;
        else if (v != var_) fail(std::string("second variable '") + v + "'");
        ++i_;
        skip();
        if (peek() != '^') return 1;
        ++i_;
        skip();
        const std::size_t at = i_;
        const Integer e = number();
        if (e > kMaxDegree) throw ParseError("exponent too large", at);
        return e.get_ui();
    }

    IntPoly expression() {
        std::map<unsigned long, Integer> terms;
        bool first = true;
        while (true) {
            skip();
            if (at_end()) {
                if (first) fail("empty input");
                fail("dangling operator");
            }
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = peek() == '-';
                ++i_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;

            Integer c(1);
            unsigned long e = 0;
            if (digit()) {
                c = number();
                skip();
                if (peek() == '*') {
                    ++i_;
                    skip();
                    if (!letter()) fail("expected variable after '*'");
                }
                if (letter()) e = power();
            } else if (letter()) {
                e = power();
            } else {
                fail(at_end() ? "dangling operator" : std::string("unexpected '") + peek() + "'");
            }
            if (neg) c = -c;
            terms[e] += c;

            skip();
            if (at_end()) break;
            if (peek() == '.' || peek() == '/') fail("non-integer coefficient");
            if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
        }
        std::vector<Integer> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, Integer(0));
        for (const auto& [e, c] : terms) coeffs[e] = c;
        return IntPoly(std::move(coeffs));
    }
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace nfiso
