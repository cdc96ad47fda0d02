#include "quartic_pd/input.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

namespace qpd {

namespace {

using nlohmann::json;

Rational parse_value(const json& v, const std::string& field) {
  if (v.is_number_integer()) {
    return Rational(mpz_class(v.dump(), 10));
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(field, e.what());
    }
  }
  if (v.is_number_float()) {
    throw InputError(field, "non-integer JSON number; write it as a string (\"-1.2\" or \"-6/5\")");
  }
  throw InputError(field, "expected a number or rational string");
}

Rational parse_token(const std::string& token, const std::string& field) {
  try {
    return parse_rational(token);
  } catch (const std::invalid_argument& e) {
    throw InputError(field, e.what());
  }
}

ParsedInput from_parameters(const std::string& kind, const std::vector<Rational>& p) {
  ParsedInput in;
  if (kind == "binary") {
    if (p.size() != 5) throw InputError("binary", "expected 5 coefficients t1111 t1112 t1122 t1222 t2222");
    in.kind = InputKind::Binary;
    in.binary = BinaryQuartic{p[0], p[1], p[2], p[3], p[4]};
    in.tensor = in.binary->to_tensor();
  } else if (kind == "cyclic") {
    if (p.size() != 5) throw InputError("cyclic", "expected 5 parameters a b c d e");
    in.kind = InputKind::Cyclic;
    in.cyclic = CyclicTernary{p[0], p[1], p[2], p[3], p[4]};
    in.tensor = embed(*in.cyclic);
  } else if (kind == "relaxed") {
    if (p.size() != 7) throw InputError("relaxed", "expected 7 parameters a b c d e123 e223 e233");
    in.kind = InputKind::Relaxed;
    in.relaxed = RelaxedCyclicTernary{p[0], p[1], p[2], p[3], p[4], p[5], p[6]};
    in.tensor = embed(*in.relaxed);
  } else {
    throw InputError("kind", "unknown shorthand '" + kind + "' (expected binary, cyclic or relaxed)");
  }
  return in;
}

ParsedInput parse_tensor_document(const json& doc) {
  if (!doc.contains("dim")) throw InputError("dim", "missing");
  if (!doc["dim"].is_number_integer()) throw InputError("dim", "expected an integer");
  const long long dim = doc["dim"].get<long long>();
  if (dim < 1 || dim > 16) throw InputError("dim", "must be between 1 and 16");
  const int n = static_cast<int>(dim);

  const json entries = doc.value("entries", json::array());
  if (!entries.is_array()) throw InputError("entries", "expected a list");
  const bool raw = doc.value("raw", false);

  std::vector<std::pair<Index4, Rational>> values;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string field = "entries[" + std::to_string(e) + "]";
    const json& item = entries[e];
    if (!item.is_object()) throw InputError(field, "expected {\"index\": [...], \"value\": ...}");
    if (!item.contains("index")) throw InputError(field + ".index", "missing");
    if (!item.contains("value")) throw InputError(field + ".value", "missing");
    const json& index = item["index"];
    if (!index.is_array() || index.size() != 4) {
      throw InputError(field + ".index", "expected four 1-based indices");
    }
    Index4 idx{};
    for (std::size_t p = 0; p < 4; ++p) {
      if (!index[p].is_number_integer()) throw InputError(field + ".index", "indices must be integers");
      const long long i = index[p].get<long long>();
      if (i < 1 || i > dim) {
        throw InputError(field + ".index", "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
      }
      idx[p] = static_cast<std::uint8_t>(i - 1);
    }
    values.emplace_back(idx, parse_value(item["value"], field + ".value"));
  }

  ParsedInput in;
  in.kind = InputKind::Tensor;
  if (raw) {
    const std::size_t un = static_cast<std::size_t>(n);
    std::vector<Rational> full(un * un * un * un, Rational(0));
    std::vector<bool> seen(full.size(), false);
    for (std::size_t e = 0; e < values.size(); ++e) {
      const auto& [idx, v] = values[e];
      const std::size_t flat = ((idx[0] * un + idx[1]) * un + idx[2]) * un + idx[3];
      if (seen[flat]) throw InputError("entries[" + std::to_string(e) + "].index", "raw position listed twice");
      seen[flat] = true;
      full[flat] = v;
    }
    Symmetrized s = symmetrize(n, full);
    in.tensor = std::move(s.tensor);
    in.max_asymmetry = s.max_asymmetry;
  } else {
    std::map<Index4, std::size_t> first;
    for (std::size_t e = 0; e < values.size(); ++e) {
      auto [it, inserted] = first.emplace(canonical(values[e].first), e);
      if (!inserted) {
        throw InputError("entries[" + std::to_string(e) + "].index",
                         "same canonical slot as entries[" + std::to_string(it->second) +
                             "]; set \"raw\": true to symmetrize an asymmetric array");
      }
    }
    in.tensor = SymmetricTensor4(n, values);
  }

  if (n == 2) in.binary = BinaryQuartic::from_tensor(in.tensor);
  if (n == 3) {
    in.cyclic = match_cyclic(in.tensor);
    if (!in.cyclic) in.relaxed = match_relaxed(in.tensor);
  }
  return in;
}

ParsedInput parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("document", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("document", "expected a JSON object");
  for (const char* kind : {"binary", "cyclic", "relaxed"}) {
    if (!doc.contains(kind)) continue;
    const json& list = doc[kind];
    if (!list.is_array()) throw InputError(kind, "expected a list of numbers");
    std::vector<Rational> p;
    for (std::size_t i = 0; i < list.size(); ++i) {
      p.push_back(parse_value(list[i], std::string(kind) + "[" + std::to_string(i) + "]"));
    }
    return from_parameters(kind, p);
  }
  return parse_tensor_document(doc);
}

ParsedInput parse_shorthand(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  std::vector<Rational> p;
  std::string token;
  while (in >> token) {
    p.push_back(parse_token(token, kind + "[" + std::to_string(p.size()) + "]"));
  }
  return from_parameters(kind, p);
}

}  // namespace

std::string_view to_string(InputKind kind) {
  switch (kind) {
    case InputKind::Tensor: return "tensor";
    case InputKind::Binary: return "binary";
    case InputKind::Cyclic: return "cyclic";
    case InputKind::Relaxed: return "relaxed";
  }
  return "tensor";
}

ParsedInput parse_input(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  if (start == text.size()) throw InputError("document", "empty input");
  if (text[start] == '{') return parse_json(text);
  return parse_shorthand(text.substr(start));
}

ParsedInput load_input(const std::string& path) {
  std::string content;
  if (path == "-") {
    content.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("path", "cannot open '" + path + "'");
    content.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return parse_input(content);
}

std::string canonical_text(const SymmetricTensor4& t) {
  std::string out = "dim=" + std::to_string(t.dim());
  for (const auto& [idx, value] : t.entries()) {
    out += ';';
    for (auto i : idx) out += std::to_string(i + 1);
    out += '=';
    out += to_string(value);
  }
  return out;
}

std::string digest(const SymmetricTensor4& t) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text(t)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qpd
