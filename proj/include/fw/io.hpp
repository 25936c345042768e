// Algebra spec files, the diagram expression language, and JSON output.
#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "fw/cyclo.hpp"
#include "fw/rep.hpp"

namespace fw {

using json = nlohmann::json;

struct AlgebraSpec {
    std::shared_ptr<Algebra> A;
    std::optional<CycDatum> cyc;
};

Algebra build_algebra(const json& j);  // builtin "kind" or an explicit table
AlgebraSpec load_algebra(const json& j);
AlgebraSpec load_algebra_file(const std::string& path);
std::string read_text_file(const std::string& path);

// "2*x - 1/3*\"a*\" + c1"
Elem parse_element(const Algebra& A, const std::string& text);
std::string element_text(const Algebra& A, const Elem& e);
// "i^(2) j^1"; the empty string is the empty word
Word parse_word(const Algebra& A, const std::string& text);
std::string word_text(const Algebra& A, const Word& w);

Morphism parse_expression(const Algebra& A, const std::string& text);
std::string print_morphism(const Algebra& A, const Morphism& f);
std::string dcm_text(const Algebra& A, const DCM& mu);  // eta{...} literal

json dcm_json(const Algebra& A, const DCM& mu);
json expansion_json(const Algebra& A, const Expansion& e);
std::string expansion_text(const Algebra& A, const Expansion& e);
json report_json(const Report& r);

}  // namespace fw
