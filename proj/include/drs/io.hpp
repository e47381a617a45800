#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "drs/codec.hpp"
#include "drs/construct.hpp"
#include "drs/gf.hpp"
#include "drs/matrix.hpp"
#include "drs/sman.hpp"

namespace drs::io {

using json = nlohmann::ordered_json;

/// Integer is the polynomial-basis value; Power prints "0", "1", "a", "a^e".
enum class ElementFormat { Integer, Power };

std::string format_element(const Field& field, Element e, ElementFormat fmt);
/// Accepts a decimal integer, "a", "a^e" (e may be negative or >= q - 1) or
/// the same with the Greek letter. Throws Parse.
Element parse_element(const Field& field, std::string_view text);

json element_to_json(const Field& field, Element e, ElementFormat fmt);
/// Integer or string form.
Element element_from_json(const Field& field, const json& j);

json matrix_to_json(const Field& field, const Matrix& m, ElementFormat fmt);
Matrix matrix_from_json(const Field& field, const json& j);

json field_to_json(const Field& field);
Field field_from_json(const json& j);

struct TopologyFile {
  SmanTopology topology;
  std::optional<Field> field;  // absent: smallest field with q - 1 >= N
  Field resolved_field() const;
};

TopologyFile topology_from_json(const json& j);
json topology_to_json(const SmanTopology& top, const std::optional<Field>& field);

/// The bundle carries everything needed to encode, decode and re-verify:
/// T and G are taken verbatim, so an edited bundle fails verification rather
/// than being silently rebuilt.
json construction_to_json(const Construction& cons, ElementFormat fmt);
Construction construction_from_json(const json& j);

json messages_to_json(const Field& field, const SourceMessages& msgs, ElementFormat fmt);
SourceMessages messages_from_json(const Field& field, const json& j);

json stats_to_json(const SimulationStats& stats);

/// N space-separated elements.
std::string format_word(const Field& field, std::span<const Element> word, ElementFormat fmt);
std::vector<Element> parse_word(const Field& field, std::string_view text);

/// Two-space indented JSON with arrays of scalars kept on one line, plus a
/// trailing newline.
std::string dump(const json& j);

/// Throws Io when the file cannot be read, Parse on malformed JSON.
std::string read_text(const std::filesystem::path& path);
json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace drs::io
