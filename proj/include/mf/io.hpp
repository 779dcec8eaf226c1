#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mf/annotation.hpp"
#include "mf/frame.hpp"
#include "mf/morse_complex.hpp"

namespace mf {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

// Face-list format: one simplex per line, whitespace-separated non-negative
// vertex ids; '#' starts a comment; blank lines are ignored. The complex is
// the downward closure of the listed simplexes.
std::vector<Simplex> parse_face_list(std::istream& in);
std::vector<Simplex> parse_face_list(const std::string& text);
std::shared_ptr<const Complex> load_complex(const std::string& path);

// a chain file: same format, all simplexes of one dimension, no closure
Chain parse_chain(std::istream& in);
Chain load_chain(const std::string& path);

// text serialization (deterministic: dimensions ascending, lex within)
std::string to_text(const MorseSequence& W);
std::string to_text(const Frame& F);
std::string to_text(const MorseComplex& M);

nlohmann::json to_json(const MorseSequence& W);
MorseSequence sequence_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Frame& F);
Frame frame_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MorseComplex& M);

}  // namespace mf
