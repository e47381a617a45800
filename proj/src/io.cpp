#include "drs/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "drs/error.hpp"

namespace drs::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

long long parse_integer(std::string_view text, std::string_view context) {
  long long v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    parse_error("bad " + std::string(context) + " '" + std::string(text) + "'");
  }
  return v;
}

template <typename T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    parse_error(std::string("field '") + key + "' has the wrong type");
  }
}

std::vector<std::vector<int>> int_rows(const json& j, const char* key) {
  return get<std::vector<std::vector<int>>>(j, key);
}

}  // namespace

std::string format_element(const Field& field, Element e, ElementFormat fmt) {
  if (fmt == ElementFormat::Integer || e.is_zero()) return std::to_string(e.value());
  const int log = field.discrete_log(e);
  if (log == 0) return "1";
  if (log == 1) return "a";
  return "a^" + std::to_string(log);
}

Element parse_element(const Field& field, std::string_view text) {
  constexpr std::string_view kAlpha = "\xce\xb1";  // UTF-8 alpha
  std::string_view rest;
  if (text.starts_with('a')) {
    rest = text.substr(1);
  } else if (text.starts_with(kAlpha)) {
    rest = text.substr(kAlpha.size());
  } else {
    const long long v = parse_integer(text, "field element");
    if (v < 0 || v >= static_cast<long long>(field.size())) {
      parse_error("field element " + std::string(text) + " is outside GF(" +
                  std::to_string(field.size()) + ")");
    }
    return Element(static_cast<std::uint32_t>(v));
  }
  if (rest.empty()) return field.alpha();
  if (!rest.starts_with('^')) parse_error("bad field element '" + std::string(text) + "'");
  return field.alpha_pow(parse_integer(rest.substr(1), "exponent"));
}

json element_to_json(const Field& field, Element e, ElementFormat fmt) {
  if (fmt == ElementFormat::Integer) return e.value();
  return format_element(field, e, fmt);
}

Element element_from_json(const Field& field, const json& j) {
  if (j.is_string()) return parse_element(field, j.get<std::string>());
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v < 0 || v >= static_cast<long long>(field.size())) {
      parse_error("field element " + std::to_string(v) + " is outside GF(" +
                  std::to_string(field.size()) + ")");
    }
    return Element(static_cast<std::uint32_t>(v));
  }
  parse_error("field element must be an integer or a string");
}

json matrix_to_json(const Field& field, const Matrix& m, ElementFormat fmt) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(field, m(r, c), fmt));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Field& field, const json& j) {
  if (!j.is_array()) parse_error("matrix must be an array of rows");
  std::vector<std::vector<Element>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) parse_error("matrix row must be an array");
    std::vector<Element> r;
    for (const auto& e : row) r.push_back(element_from_json(field, e));
    rows.push_back(std::move(r));
  }
  try {
    return Matrix::from_rows(rows);
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

json field_to_json(const Field& field) {
  return json{{"m", field.m()}, {"primitive_poly", field.primitive_poly()}};
}

Field field_from_json(const json& j) {
  const int m = get<int>(j, "m");
  try {
    if (j.contains("primitive_poly")) return Field(m, get<std::uint32_t>(j, "primitive_poly"));
    return Field(m);
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

Field TopologyFile::resolved_field() const {
  return field ? *field : Field::for_length(topology.relays());
}

TopologyFile topology_from_json(const json& j) {
  std::optional<Field> field;
  if (j.is_object() && j.contains("field")) field = field_from_json(j.at("field"));
  return TopologyFile{SmanTopology(get<int>(j, "z"), get<std::vector<int>>(j, "rates"),
                                   int_rows(j, "adjacency")),
                      field};
}

json topology_to_json(const SmanTopology& top, const std::optional<Field>& field) {
  json out;
  if (field) out["field"] = field_to_json(*field);
  out["z"] = top.z();
  out["rates"] = top.rates();
  out["adjacency"] = top.adjacency();
  return out;
}

json construction_to_json(const Construction& cons, ElementFormat fmt) {
  const Field& f = cons.code.field();
  json out;
  out["field"] = field_to_json(f);
  out["N"] = cons.code.length();
  out["k"] = cons.code.dimension();
  out["z"] = cons.code.z();
  out["case"] = std::string(to_string(cons.plan.label));
  out["column_order"] = cons.plan.column_order;
  out["T"] = matrix_to_json(f, cons.T, fmt);
  out["G"] = matrix_to_json(f, cons.G, fmt);
  json owners = json::array();
  for (int o : cons.row_owner) owners.push_back(o + 1);
  out["row_owner"] = owners;
  out["rates"] = cons.topology.rates();
  out["adjacency"] = cons.topology.adjacency();
  json perm = json::array();
  for (int p : cons.plan.source_perm) perm.push_back(p + 1);
  out["source_perm"] = perm;
  if (cons.case4) {
    const CaseFourPlan& c4 = *cons.case4;
    json poly_c = json::array(), poly_p = json::array();
    for (Element e : c4.c.coeffs()) poly_c.push_back(element_to_json(f, e, fmt));
    for (Element e : c4.p.coeffs()) poly_p.push_back(element_to_json(f, e, fmt));
    out["case4"] = json{{"c_roots", c4.c_roots}, {"c", poly_c},   {"p_roots", c4.p_roots},
                        {"p", poly_p},           {"J", c4.shifts}, {"rprime", c4.rprime}};
  }
  return out;
}

Construction construction_from_json(const json& j) {
  const Field field = field_from_json(j.contains("field") ? j.at("field") : json());
  const int n = get<int>(j, "N");
  const int z = get<int>(j, "z");
  try {
    SmanTopology top(z, get<std::vector<int>>(j, "rates"), int_rows(j, "adjacency"));
    if (top.relays() != n) parse_error("N differs from the adjacency width");
    RsCode code(field, n, z);
    if (get<int>(j, "k") != code.dimension()) parse_error("k differs from N - 2z");

    CasePlan plan;
    plan.label = parse_case_label(get<std::string>(j, "case"));
    plan.column_order = get<std::vector<int>>(j, "column_order");
    const auto perm = get<std::vector<int>>(j, "source_perm");
    if (perm.size() != 3) parse_error("source_perm must have three entries");
    for (std::size_t i = 0; i < 3; ++i) plan.source_perm[i] = perm[i] - 1;

    std::vector<int> owners;
    for (int o : get<std::vector<int>>(j, "row_owner")) owners.push_back(o - 1);
    Matrix t = matrix_from_json(field, j.at("T"));
    Matrix g = matrix_from_json(field, j.at("G"));
    return Construction{std::move(top), std::move(code), std::move(plan), std::move(t),
                        std::move(g),  std::move(owners), {}, {}, std::nullopt};
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
}

json messages_to_json(const Field& field, const SourceMessages& msgs, ElementFormat fmt) {
  json all = json::array();
  for (const auto& m : msgs.per_source) {
    json row = json::array();
    for (Element e : m) row.push_back(element_to_json(field, e, fmt));
    all.push_back(std::move(row));
  }
  return json{{"messages", all}};
}

SourceMessages messages_from_json(const Field& field, const json& j) {
  if (!j.is_object() || !j.contains("messages") || !j.at("messages").is_array()) {
    parse_error("message file needs a 'messages' array");
  }
  SourceMessages msgs;
  for (const auto& row : j.at("messages")) {
    if (!row.is_array()) parse_error("each message must be an array");
    std::vector<Element> m;
    for (const auto& e : row) m.push_back(element_from_json(field, e));
    msgs.per_source.push_back(std::move(m));
  }
  return msgs;
}

json stats_to_json(const SimulationStats& s) {
  return json{{"trials", s.trials},
              {"successes", s.successes},
              {"failures", s.failures},
              {"miscorrections", s.miscorrections},
              {"seed", s.seed}};
}

std::string format_word(const Field& field, std::span<const Element> word, ElementFormat fmt) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_element(field, word[i], fmt);
  }
  return out;
}

std::vector<Element> parse_word(const Field& field, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Element> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_element(field, tok));
  return out;
}

namespace {

void write_json(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      os << pad << json(key).dump() << ": ";
      write_json(os, value, indent + 2);
      os << (++i < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << '}';
    return;
  }
  const bool nested = j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) {
                        return e.is_structured();
                      });
  if (!nested) {
    os << j.dump();
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < j.size(); ++i) {
    os << pad;
    write_json(os, j[i], indent + 2);
    os << (i + 1 < j.size() ? ",\n" : "\n");
  }
  os << std::string(static_cast<std::size_t>(indent), ' ') << ']';
}

}  // namespace

std::string dump(const json& j) {
  std::ostringstream os;
  write_json(os, j, 0);
  os << '\n';
  return os.str();
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "failed writing " + path.string());
}

}  // namespace drs::io
