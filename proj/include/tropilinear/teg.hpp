#pragma once

// Timed event graphs and their dater equations.
//
//   transition NAME kind=input|internal|output
//   place FROM -> TO time=T tokens=K
//
// Internal transitions become states in declaration order, inputs and
// outputs likewise index u and y. Places carry 0 or 1 initial token.

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace tropilinear {

enum class TransitionKind { Input, Internal, Output };

inline const char* to_string(TransitionKind k) {
  switch (k) {
    case TransitionKind::Input: return "input";
    case TransitionKind::Internal: return "internal";
    default: return "output";
  }
}

struct Transition {
  std::string name;
  TransitionKind kind;
};

struct Place {
  std::string from, to;
  Integer time;
  int tokens;
};

struct TegModel {
  std::vector<Transition> transitions;
  std::vector<Place> places;

  const Transition* find(const std::string& name) const {
    for (const auto& t : transitions)
      if (t.name == name) return &t;
    return nullptr;
  }
};

namespace detail {

inline std::string key_value(const std::string& tok, const std::string& key, std::size_t lineno) {
  if (tok.rfind(key + "=", 0) != 0) throw ParseError(lineno, "expected " + key + "=...");
  return tok.substr(key.size() + 1);
}

inline Integer parse_integer(const std::string& s, std::size_t lineno) {
  ExtInt v;
  try {
    v = ExtInt::parse(s);
  } catch (const Error&) {
    throw ParseError(lineno, "bad integer '" + s + "'");
  }
  if (!v.is_finite()) throw ParseError(lineno, "value must be finite");
  return v.value();
}

}  // namespace detail

inline TegModel parse_teg(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  TegModel m;
  std::vector<std::size_t> place_lines;
  while (detail::next_content_line(in, line, lineno)) {
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok[0] == "transition") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'transition NAME kind=...'");
      std::string kind = detail::key_value(tok[2], "kind", lineno);
      TransitionKind k;
      if (kind == "input") k = TransitionKind::Input;
      else if (kind == "internal") k = TransitionKind::Internal;
      else if (kind == "output") k = TransitionKind::Output;
      else throw ParseError(lineno, "unknown transition kind '" + kind + "'");
      if (m.find(tok[1])) throw ParseError(lineno, "duplicate transition '" + tok[1] + "'");
      m.transitions.push_back({tok[1], k});
    } else if (tok[0] == "place") {
      if (tok.size() != 6 || tok[2] != "->")
        throw ParseError(lineno, "expected 'place FROM -> TO time=T tokens=K'");
      Integer time = detail::parse_integer(detail::key_value(tok[4], "time", lineno), lineno);
      Integer tokens = detail::parse_integer(detail::key_value(tok[5], "tokens", lineno), lineno);
      if (time < 0) throw ParseError(lineno, "holding time must be nonnegative");
      if (tokens < 0) throw ParseError(lineno, "token count must be nonnegative");
      if (tokens > 1) throw ParseError(lineno, "places with more than one initial token are not supported");
      m.places.push_back({tok[1], tok[3], time, static_cast<int>(tokens)});
      place_lines.push_back(lineno);
    } else {
      throw ParseError(lineno, "expected 'transition' or 'place'");
    }
  }
  for (std::size_t i = 0; i < m.places.size(); ++i) {
    const Place& p = m.places[i];
    const std::size_t ln = place_lines[i];
    const Transition* from = m.find(p.from);
    const Transition* to = m.find(p.to);
    if (!from) throw ParseError(ln, "unknown transition '" + p.from + "'");
    if (!to) throw ParseError(ln, "unknown transition '" + p.to + "'");
    if (from->kind == TransitionKind::Output) throw ParseError(ln, "output transitions have no outgoing places");
    if (to->kind == TransitionKind::Input) throw ParseError(ln, "input transitions have no incoming places");
    if (from->kind == TransitionKind::Input && to->kind == TransitionKind::Output)
      throw ParseError(ln, "direct input-to-output places are not supported");
    if (p.tokens == 1 && (from->kind != TransitionKind::Internal || to->kind != TransitionKind::Internal))
      throw ParseError(ln, "marked places must join internal transitions");
  }
  return m;
}

inline std::string render_teg(const TegModel& m) {
  std::string out;
  for (const auto& t : m.transitions) out += "transition " + t.name + " kind=" + to_string(t.kind) + "\n";
  for (const auto& p : m.places)
    out += "place " + p.from + " -> " + p.to + " time=" + p.time.str() +
           " tokens=" + std::to_string(p.tokens) + "\n";
  return out;
}

/// Dater matrices: with A0, A1 the internal places holding 0 and 1 token,
/// x = A0 x (+) A1 x(k-1) (+) B0 u resolves to A = A0* A1, B = A0* B0.
inline LtiSystem compile_teg(const TegModel& m) {
  std::map<std::string, std::size_t> idx;
  std::size_t n = 0, p = 0, q = 0;
  for (const auto& t : m.transitions) {
    switch (t.kind) {
      case TransitionKind::Internal: idx[t.name] = n++; break;
      case TransitionKind::Input: idx[t.name] = p++; break;
      case TransitionKind::Output: idx[t.name] = q++; break;
    }
  }
  TropMatrix a0(n, n), a1(n, n), b0(n, p), c0(q, n);
  auto raise = [](ExtInt& slot, const Integer& t) { slot = max_oplus(slot, ExtInt(t)); };
  for (const auto& pl : m.places) {
    const Transition& from = *m.find(pl.from);
    const Transition& to = *m.find(pl.to);
    const std::size_t i = idx[to.name], j = idx[from.name];
    if (from.kind == TransitionKind::Input) raise(b0(i, j), pl.time);
    else if (to.kind == TransitionKind::Output) raise(c0(i, j), pl.time);
    else raise((pl.tokens ? a1 : a0)(i, j), pl.time);
  }
  // A0* = I (+) A0 (+) ... (+) A0^{n-1}; A0^n != eps means a token-free circuit.
  TropMatrix star = TropMatrix::identity(n), power = TropMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = mat_mul(power, a0);
    star = mat_add(star, power);
  }
  if (n > 0) {
    power = mat_mul(power, a0);
    if (!std::all_of(power.entries().begin(), power.entries().end(),
                     [](const ExtInt& e) { return e.is_neg_inf(); }))
      throw Error("timed event graph has a circuit without tokens");
  }
  return LtiSystem(mat_mul(star, a1), mat_mul(star, b0), c0);
}

}  // namespace tropilinear
