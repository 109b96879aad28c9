// Copyright 2026 The amekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "amekit/ame/construct.hpp"
#include "amekit/core/state.hpp"
#include "amekit/errors.hpp"
#include "amekit/qss.hpp"
#include "amekit/teleport.hpp"
#include <nlohmann/json.hpp>

/// Text formats.
///
/// State file: line 1 is `n d`, followed by d^n lines `re im` in big-endian
/// index order. Reals are written in shortest round-trip form, so a write
/// followed by a read reproduces every amplitude bit for bit. Blank lines and
/// lines starting with '#' are ignored on input.
///
/// Generator file: `d n k`, then k rows of n integers in [0, d).
///
/// Scheme file: `qss m d`, then `players p_0 ... p_{2m-2}`, then
/// `dealer <index>` or `dealer none`, then d state-file blocks holding
/// |Phi_0>, ..., |Phi_{d-1}>.
namespace amekit::io {

inline std::string format_real(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

namespace detail {

/// Line reader that skips blanks and comments and tracks line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next significant line split into tokens; empty at end of input.
  std::vector<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      for (std::string t; ss >> t;) tokens.push_back(t);
      return tokens;
    }
    return {};
  }

  std::vector<std::string> expect(std::size_t count, const char* what) {
    auto t = next();
    if (t.empty()) throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + what);
    if (t.size() != count) {
      throw ParseError(line_, std::string("expected ") + std::to_string(count) +
                                  " fields for " + what + ", got " + std::to_string(t.size()));
    }
    return t;
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

template <class T>
T parse_number(const std::string& token, std::size_t line, const char* what) {
  T value{};
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && token[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("invalid ") + what + " '" + token + "'");
  }
  return value;
}

inline PureState read_state_body(LineReader& r) {
  const auto header = r.expect(2, "state header `n d`");
  const auto n = parse_number<std::size_t>(header[0], r.line(), "party count");
  const auto d = parse_number<int>(header[1], r.line(), "local dimension");
  const std::size_t header_line = r.line();
  std::size_t dim = 0;
  try {
    if (n == 0) throw DomainError("need at least one party");
    dim = state_dimension(n, d);
  } catch (const DomainError& e) {
    throw ParseError(header_line, e.what());
  }
  Vector v(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const auto t = r.expect(2, "amplitude `re im`");
    v[static_cast<Eigen::Index>(i)] = {parse_number<double>(t[0], r.line(), "real part"),
                                       parse_number<double>(t[1], r.line(), "imaginary part")};
  }
  try {
    return PureState(n, d, std::move(v));
  } catch (const DomainError& e) {
    throw ParseError(header_line, e.what());
  }
}

}  // namespace detail

inline void write_state(std::ostream& out, const PureState& s) {
  out << s.parties() << ' ' << s.local_dim() << '\n';
  for (const Complex& a : s.amplitudes()) {
    out << format_real(a.real()) << ' ' << format_real(a.imag()) << '\n';
  }
}

inline std::string state_to_string(const PureState& s) {
  std::ostringstream os;
  write_state(os, s);
  return os.str();
}

inline PureState read_state(std::istream& in) {
  detail::LineReader r(in);
  PureState s = detail::read_state_body(r);
  if (auto extra = r.next(); !extra.empty()) {
    throw ParseError(r.line(), "trailing data after " + std::to_string(s.size()) + " amplitudes");
  }
  return s;
}

inline PureState state_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_state(is);
}

inline void write_code(std::ostream& out, const MdsCode& code) {
  out << code.local_dim() << ' ' << code.length() << ' ' << code.dimension() << '\n';
  for (const auto& row : code.generator()) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
    out << '\n';
  }
}

inline MdsCode read_code(std::istream& in) {
  detail::LineReader r(in);
  const auto header = r.expect(3, "generator header `d n k`");
  const auto d = detail::parse_number<int>(header[0], r.line(), "field size");
  const auto n = detail::parse_number<std::size_t>(header[1], r.line(), "code length");
  const auto k = detail::parse_number<std::size_t>(header[2], r.line(), "code dimension");
  const std::size_t header_line = r.line();
  if (k == 0 || k > 64 || n > 64) throw ParseError(header_line, "unsupported code size");
  std::vector<std::vector<int>> g;
  for (std::size_t row = 0; row < k; ++row) {
    const auto t = r.expect(n, "generator row");
    std::vector<int> values;
    for (const auto& x : t) values.push_back(detail::parse_number<int>(x, r.line(), "generator entry"));
    g.push_back(std::move(values));
  }
  if (auto extra = r.next(); !extra.empty()) throw ParseError(r.line(), "trailing data after generator");
  try {
    return MdsCode(d, n, k, std::move(g));
  } catch (const DomainError& e) {
    throw ParseError(header_line, e.what());
  }
}

inline void write_scheme(std::ostream& out, const qss::QssScheme& s) {
  out << "qss " << s.m << ' ' << s.d << '\n' << "players";
  for (std::size_t p : s.players) out << ' ' << p;
  out << '\n' << "dealer ";
  if (s.dealer_origin) {
    out << s.dealer_origin->dealer << '\n';
  } else {
    out << "none\n";
  }
  for (const auto& b : s.basis_states) write_state(out, b);
}

/// Reads a scheme and validates it. The dealer index, when present, is kept
/// together with the AME state rebuilt from the basis states.
inline qss::QssScheme read_scheme(std::istream& in) {
  detail::LineReader r(in);
  const auto header = r.expect(3, "scheme header `qss m d`");
  if (header[0] != "qss") throw ParseError(r.line(), "expected keyword 'qss'");
  const auto m = detail::parse_number<std::size_t>(header[1], r.line(), "threshold");
  const auto d = detail::parse_number<int>(header[2], r.line(), "local dimension");
  const std::size_t header_line = r.line();
  if (m == 0 || m > 16) throw ParseError(header_line, "unsupported threshold");
  auto players_line = r.expect(2 * m, "players line");
  if (players_line[0] != "players") throw ParseError(r.line(), "expected keyword 'players'");
  Parties players;
  for (std::size_t i = 1; i < players_line.size(); ++i) {
    players.push_back(detail::parse_number<std::size_t>(players_line[i], r.line(), "player index"));
  }
  const auto dealer_line = r.expect(2, "dealer line");
  if (dealer_line[0] != "dealer") throw ParseError(r.line(), "expected keyword 'dealer'");
  std::optional<std::size_t> dealer;
  if (dealer_line[1] != "none") {
    dealer = detail::parse_number<std::size_t>(dealer_line[1], r.line(), "dealer index");
  }
  std::vector<PureState> basis;
  for (int i = 0; i < d; ++i) basis.push_back(detail::read_state_body(r));
  if (auto extra = r.next(); !extra.empty()) throw ParseError(r.line(), "trailing data after basis states");
  try {
    qss::QssScheme s = qss::make_scheme(m, d, std::move(basis));
    s.players = std::move(players);
    if (dealer) {
      const PureState ame = qss::ame_from_qss(s, *dealer);
      s.dealer_origin = qss::DealerOrigin{ame, *dealer};
    }
    return s;
  } catch (const DomainError& e) {
    throw ParseError(header_line, e.what());
  }
}

using Json = nlohmann::ordered_json;

inline Json to_json(const Bipartition& cut) {
  return Json{{"B", cut.b()}, {"A", cut.a()}};
}

inline Json to_json(const teleport::TeleportTranscript& t) {
  Json outcomes = Json::array();
  for (const auto& o : t.outcomes) outcomes.push_back({o.a, o.b});
  Json corrections = Json::array();
  for (const auto& c : t.corrections) corrections.push_back({c.shift(), c.phase()});
  return Json{{"direction", teleport::to_string(t.direction)},
              {"cut", to_json(t.cut)},
              {"outcomes", std::move(outcomes)},
              {"corrections", std::move(corrections)},
              {"dits_sent", t.dits()},
              {"probability", t.probability},
              {"fidelity", t.final_fidelity}};
}

}  // namespace amekit::io
