#include "matlog/io.hpp"

#include <fstream>
#include <sstream>

#include "matlog/registry.hpp"
#include "json.hpp"

namespace matlog {

namespace {

using json = nlohmann::ordered_json;

json algebra_json(const FiniteAlgebra& a, const std::string& name) {
  json j;
  j["name"] = name;
  j["universe"] = a.universe();
  json opsj = json::array();
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const auto& sym = a.signature().operations()[op];
    json table = json::array();
    for (auto e : a.table(op)) table.push_back(a.element_name(e));
    opsj.push_back({{"name", sym.name}, {"arity", sym.arity}, {"table", table}});
  }
  j["operations"] = opsj;
  return j;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(std::string("JSON is missing the field \"") + key + "\"");
  }
  return j.at(key);
}

FiniteAlgebra algebra_of(const json& j) {
  try {
    AlgebraSpec spec;
    spec.name = field(j, "name").get<std::string>();
    spec.universe = field(j, "universe").get<std::vector<std::string>>();
    for (const auto& o : field(j, "operations")) {
      OperationSpec op;
      op.name = field(o, "name").get<std::string>();
      op.arity = field(o, "arity").get<std::size_t>();
      for (const auto& cell : field(o, "table")) {
        const auto name = cell.get<std::string>();
        std::size_t idx = 0;
        while (idx < spec.universe.size() && spec.universe[idx] != name) ++idx;
        if (idx == spec.universe.size()) {
          throw Error("table of " + op.name + " names unknown element '" +
                      name + "'");
        }
        op.table.push_back(static_cast<Element>(idx));
      }
      spec.operations.push_back(std::move(op));
    }
    return make_algebra(std::move(spec));
  } catch (const json::exception& e) {
    throw Error(std::string("ill-typed algebra JSON: ") + e.what());
  }
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string to_json(const FiniteAlgebra& algebra) {
  return algebra_json(algebra, algebra.name()).dump(2) + "\n";
}

std::string to_json(const Matrix& matrix) {
  auto j = algebra_json(matrix.algebra(), matrix.name());
  json d = json::array();
  for (auto e : matrix.designated()) d.push_back(matrix.algebra().element_name(e));
  j["designated"] = d;
  return j.dump(2) + "\n";
}

FiniteAlgebra algebra_from_json(std::string_view text) {
  return algebra_of(parse_json(text));
}

Matrix matrix_from_json(std::string_view text) {
  const auto j = parse_json(text);
  auto a = algebra_of(j);
  std::vector<Element> designated;
  try {
    for (const auto& d : field(j, "designated")) {
      designated.push_back(a.element_or_throw(d.get<std::string>()));
    }
  } catch (const json::exception& e) {
    throw Error(std::string("ill-typed designated set: ") + e.what());
  }
  auto name = a.name();
  return Matrix(std::move(a), std::move(designated), std::move(name));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

Matrix load_matrix(const std::string& path) {
  return matrix_from_json(read_file(path));
}

void save_matrix(const Matrix& matrix, const std::string& path) {
  write_file(path, to_json(matrix));
}

CarrierFile carrier_from_json(std::string_view text) {
  const auto j = parse_json(text);
  try {
    const auto exponent = field(j, "exponent").get<std::size_t>();
    PowerAlgebra power(resolve_algebra(field(j, "algebra").get<std::string>()),
                       exponent);
    std::vector<Code> carrier;
    for (const auto& t : field(j, "carrier")) {
      carrier.push_back(power.parse(t.get<std::string>()));
    }
    CarrierFile out{SubalgebraOfPower(power, std::move(carrier)), std::nullopt};
    if (j.contains("sigma")) {
      std::vector<std::pair<Code, Code>> pairs;
      for (const auto& p : j.at("sigma")) {
        if (!p.is_array() || p.size() != 2) {
          throw Error("sigma entries must be [argument, value] pairs");
        }
        pairs.emplace_back(power.parse(p[0].get<std::string>()),
                           power.parse(p[1].get<std::string>()));
      }
      out.sigma = std::move(pairs);
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(std::string("ill-typed carrier JSON: ") + e.what());
  }
}

std::vector<NamedRule> parse_rule_corpus(std::string_view text,
                                         const Signature& signature) {
  std::vector<NamedRule> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto where = "line " + std::to_string(lineno) + ": ";
    const auto colon = t.find(':');
    const auto turnstile = t.find("|-");
    if (colon == std::string::npos || turnstile == std::string::npos ||
        turnstile < colon) {
      throw Error(where + "expected 'name: premises |- conclusion'");
    }
    const auto name = trim(std::string_view(t).substr(0, colon));
    std::vector<Formula> premises;
    const auto lhs = trim(std::string_view(t).substr(colon + 1, turnstile - colon - 1));
    try {
      if (!lhs.empty()) {
        std::size_t start = 0;
        while (true) {
          const auto comma = lhs.find(',', start);
          premises.push_back(
              parse(trim(std::string_view(lhs).substr(start, comma - start)),
                    signature));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      }
      auto conclusion =
          parse(trim(std::string_view(t).substr(turnstile + 2)), signature);
      out.push_back({name, Rule{std::move(premises), std::move(conclusion)}});
    } catch (const Error& e) {
      throw Error(where + e.what());
    }
  }
  return out;
}

std::vector<NamedRule> load_rule_corpus(const std::string& path,
                                        const Signature& signature) {
  return parse_rule_corpus(read_file(path), signature);
}

}  // namespace matlog
