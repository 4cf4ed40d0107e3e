#include "hsp/group_spec.hpp"

#include <algorithm>
#include <cctype>

namespace hsp {

namespace {

unsigned parse_number(const std::string& token, const std::string& spec) {
  if (token.empty() || token.size() > 9 || !std::all_of(token.begin(), token.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      }))
    throw GroupSpecError("bad group spec '" + spec + "': expected a number, got '" + token + "'");
  return static_cast<unsigned>(std::stoul(token));
}

FiniteGroup parse_spec(const std::string& raw) {
  std::string spec;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) spec += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (spec.empty()) throw GroupSpecError("empty group spec");

  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    // Short forms: s4, d8, z6, c6.
    std::size_t split = 0;
    while (split < spec.size() && std::isalpha(static_cast<unsigned char>(spec[split]))) ++split;
    const std::string name = spec.substr(0, split);
    const std::string rest = spec.substr(split);
    if (name == "s") return make_symmetric(parse_number(rest, raw));
    if (name == "d") return make_dihedral(parse_number(rest, raw));
    if (name == "z" || name == "c") return make_cyclic(parse_number(rest, raw));
    throw GroupSpecError("unknown group '" + (name.empty() ? spec : name) + "' in spec '" + raw + "'");
  }

  const std::string name = spec.substr(0, colon);
  const std::string param = spec.substr(colon + 1);
  if (name == "power") {
    const auto caret = param.rfind('^');
    if (caret == std::string::npos) throw GroupSpecError("power spec '" + raw + "' needs '^<k>'");
    const FiniteGroup base = parse_spec(param.substr(0, caret));
    return make_direct_power(base, parse_number(param.substr(caret + 1), raw));
  }
  const unsigned n = parse_number(param, raw);
  if (name == "symmetric" || name == "s") return make_symmetric(n);
  if (name == "wreath") return make_wreath_s2(n);
  if (name == "dihedral" || name == "d") return make_dihedral(n);
  if (name == "cyclic" || name == "z" || name == "c") return make_cyclic(n);
  if (name == "psl2") return make_psl2(n);
  if (name == "sl2") return make_sl2(n);
  throw GroupSpecError("unknown group '" + name + "' in spec '" + raw + "'");
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& raw) {
  try {
    return parse_spec(raw);
  } catch (const GroupSpecError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw GroupSpecError("bad group spec '" + raw + "': " + e.what());
  }
}

}  // namespace hsp
