// Copyright 2026 The fockpath Authors
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

#include "fockpath/parser.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <system_error>

namespace fockpath {

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line, std::string_view text)
      : tokens_(std::move(tokens)), line_(line), text_(text) {}

  [[noreturn]] void fail(ParseCode code, int column, const std::string& msg) const {
    throw ParseError(code, line_, column, msg);
  }

  bool done() const { return pos_ >= tokens_.size(); }

  int column() const {
    return done() ? static_cast<int>(text_.size()) + 1 : tokens_[pos_].column;
  }

  const Token& next(const char* what) {
    if (done()) fail(ParseCode::kSyntax, column(), std::string("expected ") + what);
    return tokens_[pos_++];
  }

  bool peek_is(std::string_view text) const { return !done() && tokens_[pos_].text == text; }

  void expect(std::string_view literal) {
    const Token& t = next(std::string(literal).c_str());
    if (t.text != literal) fail(ParseCode::kSyntax, t.column, "expected '" + std::string(literal) + "'");
  }

  // "key=VALUE" as one token; returns VALUE.
  Token keyed(std::string_view key) {
    const std::string want = std::string(key) + "=";
    const Token& t = next(want.c_str());
    if (t.text.substr(0, want.size()) != want) {
      fail(ParseCode::kSyntax, t.column, "expected '" + want + "'");
    }
    return {t.text.substr(want.size()), t.column + static_cast<int>(want.size())};
  }

  void finish() {
    if (!done()) fail(ParseCode::kSyntax, tokens_[pos_].column, "unexpected '" + std::string(tokens_[pos_].text) + "'");
  }

  int line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
  std::string_view text_;
};

double parse_float(const Token& t, const LineParser& lp) {
  double v = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    lp.fail(ParseCode::kMalformedNumber, t.column, "malformed number '" + std::string(t.text) + "'");
  }
  return v;
}

int parse_count(const Token& t, const LineParser& lp) {
  int v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.text.empty() || ec != std::errc() || ptr != last || v < 0) {
    lp.fail(ParseCode::kMalformedNumber, t.column, "malformed photon number '" + std::string(t.text) + "'");
  }
  return v;
}

// RE(+|-)IMi, split at the last sign that is not an exponent sign.
Amplitude parse_complex(const Token& t, const LineParser& lp) {
  const std::string_view s = t.text;
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos || s.size() < split + 3 || s.back() != 'i') {
    lp.fail(ParseCode::kMalformedNumber, t.column, "malformed complex number '" + std::string(s) + "'");
  }
  const double re = parse_float({s.substr(0, split), t.column}, lp);
  const std::string_view im_text = s.substr(split + 1, s.size() - split - 2);
  if (im_text.empty() || im_text[0] == '+' || im_text[0] == '-') {
    lp.fail(ParseCode::kMalformedNumber, t.column, "malformed complex number '" + std::string(s) + "'");
  }
  const double im = parse_float({im_text, t.column + static_cast<int>(split) + 1}, lp);
  return {re, s[split] == '-' ? -im : im};
}

Axis parse_pol(LineParser& lp) {
  const Token& t = lp.next("x or y");
  if (t.text == "x") return Axis::kX;
  if (t.text == "y") return Axis::kY;
  lp.fail(ParseCode::kSyntax, t.column, "polarization must be x or y");
}

class CircuitBuilder {
 public:
  void port(LineParser& lp) {
    const Token& t = lp.next("port name");
    lp.finish();
    const std::string name(t.text);
    if (!declared_.insert(name).second) lp.fail(ParseCode::kDuplicatePort, t.column, "port '" + name + "' declared twice");
    c_.ports.push_back(name);
  }

  void source(LineParser& lp) {
    const Token& p = lp.next("port name");
    const std::string port = use(p, lp);
    const Token& kind = lp.next("source kind");
    SourceDecl d;
    d.port = port;
    d.span = {lp.line(), p.column};
    SourceSpec& s = d.spec;
    if (kind.text == "fock") {
      s.kind = SourceKind::kFock;
      s.n = parse_count(lp.next("photon number"), lp);
      if (!lp.done()) {
        lp.expect("pol");
        s.pol = parse_pol(lp);
      }
    } else if (kind.text == "linpol") {
      s.kind = SourceKind::kLinpol;
      s.angle_deg = parse_float(lp.keyed("angle"), lp);
      s.n = parse_count(lp.keyed("n"), lp);
    } else if (kind.text == "circpol") {
      s.kind = SourceKind::kCircpol;
      const Token& h = lp.next("rcp or lcp");
      if (h.text == "rcp") {
        s.hand = Handedness::kRight;
      } else if (h.text == "lcp") {
        s.hand = Handedness::kLeft;
      } else {
        lp.fail(ParseCode::kSyntax, h.column, "handedness must be rcp or lcp");
      }
      s.n = parse_count(lp.keyed("n"), lp);
    } else if (kind.text == "rcp_lcp_pair") {
      s.kind = SourceKind::kRcpLcpPair;
    } else if (kind.text == "coherent") {
      s.kind = SourceKind::kCoherent;
      const double re = parse_float(lp.keyed("re"), lp);
      const double im = parse_float(lp.keyed("im"), lp);
      s.gamma = {re, im};
      if (!lp.done()) {
        lp.expect("pol");
        s.pol = parse_pol(lp);
      }
      if (!coherent_line_) coherent_line_ = lp.line();
    } else {
      lp.fail(ParseCode::kUnknownKeyword, kind.column, "unknown source kind '" + std::string(kind.text) + "'");
    }
    lp.finish();
    if (!sourced_.insert(port).second) {
      lp.fail(ParseCode::kDuplicateSource, p.column, "port '" + port + "' already has a source");
    }
    c_.sources.push_back(d);
  }

  void rbs(LineParser& lp, int column) {
    ElementDecl e = start(ElementKind::kRbs, lp, column);
    const Token& first = lp.next("split=50 or r=");
    if (first.text == "split=50") {
      e.split50 = true;
    } else if (first.text.substr(0, 2) == "r=") {
      e.rho = parse_complex({first.text.substr(2), first.column + 2}, lp);
      e.tau = parse_complex(lp.keyed("t"), lp);
    } else {
      lp.fail(ParseCode::kSyntax, first.column, "expected split=50 or r=CPLX t=CPLX");
    }
    const std::string in1 = use(lp.next("input port"), lp);
    const std::string in2 = use(lp.next("input port"), lp);
    lp.expect("->");
    const Token& o1 = lp.next("output port");
    const Token& o2 = lp.next("output port");
    lp.finish();
    if (in1 == in2) lp.fail(ParseCode::kSyntax, column, "rbs inputs must differ");
    e.inputs = {in1, in2};
    e.outputs = {use(o1, lp), use(o2, lp)};
    if (e.outputs[0] == e.outputs[1]) lp.fail(ParseCode::kSyntax, o2.column, "rbs outputs must differ");
    if (!e.split50) {
      try {
        make_rbs(e.rho, e.tau);
      } catch (const Error& err) {
        const ParseCode code = err.code() == ErrorCode::kEnergyViolation ? ParseCode::kRbsEnergy : ParseCode::kRbsPhase;
        lp.fail(code, first.column, err.what());
      }
    }
    c_.elements.push_back(e);
  }

  void pbs(LineParser& lp, int column) {
    ElementDecl e = start(ElementKind::kPbs, lp, column);
    e.angle_deg = parse_float(lp.keyed("axis"), lp);
    e.inputs = {use(lp.next("input port"), lp)};
    lp.expect("->");
    const Token& t = lp.next("transmitted port");
    const Token& r = lp.next("reflected port");
    lp.finish();
    e.outputs = {use(t, lp), use(r, lp)};
    if (e.outputs[0] == e.outputs[1]) lp.fail(ParseCode::kSyntax, r.column, "pbs outputs must differ");
    incompatible(column, lp);
    c_.elements.push_back(e);
  }

  void waveplate(LineParser& lp, int column) {
    ElementDecl e = start(ElementKind::kWaveplate, lp, column);
    e.phase_deg = parse_float(lp.keyed("phase"), lp);
    e.angle_deg = parse_float(lp.keyed("axis"), lp);
    on_port(e, lp);
  }

  void rotpol(LineParser& lp, int column) {
    ElementDecl e = start(ElementKind::kRotation, lp, column);
    e.angle_deg = parse_float(lp.keyed("angle"), lp);
    incompatible(column, lp);
    on_port(e, lp);
  }

  void phase(LineParser& lp, int column) {
    ElementDecl e = start(ElementKind::kPhase, lp, column);
    e.phase_deg = parse_float(lp.keyed("deg"), lp);
    on_port(e, lp);
  }

  void header_comment(std::string_view line) { c_.header_comments.emplace_back(line); }

  bool has_statements() const { return !c_.ports.empty() || !c_.sources.empty() || !c_.elements.empty(); }

  Circuit finish(const std::string& name) {
    // A coherent source declared after a pbs or rotpol is reported at the source.
    if (coherent_line_ && first_incompatible_) {
      const int line = std::max(*coherent_line_, first_incompatible_->first);
      const int column = line == *coherent_line_ ? 1 : first_incompatible_->second;
      throw ParseError(ParseCode::kCoherentElement, line, column,
                       "coherent sources only pass through rbs, phase and waveplate elements");
    }
    c_.name = name;
    return std::move(c_);
  }

 private:
  std::string use(const Token& t, const LineParser& lp) {
    std::string name(t.text);
    if (name == "->") lp.fail(ParseCode::kSyntax, t.column, "expected a port name");
    if (!declared_.count(name)) lp.fail(ParseCode::kUndeclaredPort, t.column, "port '" + name + "' is not declared");
    return name;
  }

  ElementDecl start(ElementKind kind, const LineParser& lp, int column) const {
    ElementDecl e;
    e.kind = kind;
    e.span = {lp.line(), column};
    return e;
  }

  void on_port(ElementDecl& e, LineParser& lp) {
    lp.expect("on");
    e.inputs = {use(lp.next("port name"), lp)};
    lp.finish();
    c_.elements.push_back(e);
  }

  void incompatible(int column, const LineParser& lp) {
    if (!first_incompatible_) first_incompatible_ = std::make_pair(lp.line(), column);
  }

  Circuit c_;
  std::set<std::string> declared_;
  std::set<std::string> sourced_;
  std::optional<int> coherent_line_;
  std::optional<std::pair<int, int>> first_incompatible_;
};

void append_complex(std::string& out, Amplitude z) {
  out += format_number(z.real());
  out += std::signbit(z.imag()) ? '-' : '+';
  out += format_number(std::abs(z.imag()));
  out += 'i';
}

std::string serialize_source(const SourceDecl& d) {
  const SourceSpec& s = d.spec;
  std::string out = "source " + d.port + " ";
  auto pol = [&s](std::string& o) {
    if (s.pol) o += *s.pol == Axis::kX ? " pol x" : " pol y";
  };
  switch (s.kind) {
    case SourceKind::kFock:
      out += "fock " + std::to_string(s.n);
      pol(out);
      break;
    case SourceKind::kLinpol:
      out += "linpol angle=" + format_number(s.angle_deg) + " n=" + std::to_string(s.n);
      break;
    case SourceKind::kCircpol:
      out += std::string("circpol ") + (s.hand == Handedness::kRight ? "rcp" : "lcp") + " n=" + std::to_string(s.n);
      break;
    case SourceKind::kRcpLcpPair:
      out += "rcp_lcp_pair";
      break;
    case SourceKind::kCoherent:
      out += "coherent re=" + format_number(s.gamma.real()) + " im=" + format_number(s.gamma.imag());
      pol(out);
      break;
  }
  return out;
}

std::string serialize_element(const ElementDecl& e) {
  std::string out;
  switch (e.kind) {
    case ElementKind::kRbs:
      out = "rbs ";
      if (e.split50) {
        out += "split=50";
      } else {
        out += "r=";
        append_complex(out, e.rho);
        out += " t=";
        append_complex(out, e.tau);
      }
      out += " " + e.inputs[0] + " " + e.inputs[1] + " -> " + e.outputs[0] + " " + e.outputs[1];
      break;
    case ElementKind::kPbs:
      out = "pbs axis=" + format_number(e.angle_deg) + " " + e.inputs[0] + " -> " + e.outputs[0] + " " +
            e.outputs[1];
      break;
    case ElementKind::kWaveplate:
      out = "waveplate phase=" + format_number(e.phase_deg) + " axis=" + format_number(e.angle_deg) + " on " +
            e.inputs[0];
      break;
    case ElementKind::kRotation:
      out = "rotpol angle=" + format_number(e.angle_deg) + " on " + e.inputs[0];
      break;
    case ElementKind::kPhase:
      out = "phase deg=" + format_number(e.phase_deg) + " on " + e.inputs[0];
      break;
  }
  return out;
}

}  // namespace

std::string parse_code_name(ParseCode code) {
  const int n = static_cast<int>(code);
  return std::string("E0") + std::to_string(n);
}

ParseError::ParseError(ParseCode code, int line, int column, const std::string& message)
    : Error(ErrorCode::kParse, std::to_string(line) + ":" + std::to_string(column) + ": " +
                                   parse_code_name(code) + " " + message),
      parse_code_(code),
      line_(line),
      column_(column) {}

Circuit parse_circuit(std::string_view text, const std::string& name) {
  CircuitBuilder builder;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = tokenize(line);
    if (tokens.empty()) {
      const auto hash = line.find('#');
      if (hash != std::string_view::npos && !builder.has_statements()) builder.header_comment(line.substr(hash));
      continue;
    }
    const Token keyword = tokens.front();
    LineParser lp(std::vector<Token>(tokens.begin() + 1, tokens.end()), line_no, line);
    if (keyword.text == "port") {
      builder.port(lp);
    } else if (keyword.text == "source") {
      builder.source(lp);
    } else if (keyword.text == "rbs") {
      builder.rbs(lp, keyword.column);
    } else if (keyword.text == "pbs") {
      builder.pbs(lp, keyword.column);
    } else if (keyword.text == "waveplate") {
      builder.waveplate(lp, keyword.column);
    } else if (keyword.text == "rotpol") {
      builder.rotpol(lp, keyword.column);
    } else if (keyword.text == "phase") {
      builder.phase(lp, keyword.column);
    } else {
      lp.fail(ParseCode::kUnknownKeyword, keyword.column, "unknown keyword '" + std::string(keyword.text) + "'");
    }
  }
  return builder.finish(name);
}

std::optional<Amplitude> parse_complex_literal(std::string_view text) {
  try {
    const LineParser lp({}, 0, text);
    return parse_complex({text, 1}, lp);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string serialize_circuit(const Circuit& c) {
  std::vector<std::vector<std::string>> groups(4);
  groups[0] = c.header_comments;
  for (const auto& p : c.ports) groups[1].push_back("port " + p);
  for (const auto& s : c.sources) groups[2].push_back(serialize_source(s));
  for (const auto& e : c.elements) groups[3].push_back(serialize_element(e));
  std::string out;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    if (!out.empty()) out += '\n';
    for (const auto& line : g) out += line + '\n';
  }
  return out;
}

}  // namespace fockpath
