#pragma once

// Structure constants as JSON:
// {"labels": ["p", "q", "z"], "brackets": [[0, 1, 2, "1"], ...]}
// each entry [i, j, k, c] with i < j sets c(i,j,k) = c (rational string) and c(j,i,k) = -c.

#include "modnet/classical.hpp"
#include "modnet/spindler.hpp"

#include <json.hpp>

namespace modnet {

struct AlgebraParseError : std::runtime_error {
    std::size_t line = 0, column = 0;  // 1-based; 0 when the error is structural
    std::string pointer;               // JSON pointer of the offending value

    AlgebraParseError(const std::string& msg, std::size_t l, std::size_t c, std::string ptr)
        : std::runtime_error(msg), line(l), column(c), pointer(std::move(ptr)) {}

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["error"] = "malformed algebra";
        j["message"] = what();
        if (line) {
            j["line"] = line;
            j["column"] = column;
        }
        if (!pointer.empty()) j["pointer"] = pointer;
        return j;
    }
};

inline nlohmann::ordered_json algebra_to_json(const LieAlgebra& a) {
    nlohmann::ordered_json j;
    j["labels"] = a.labels();
    auto br = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t jj = i + 1; jj < a.dim(); ++jj)
            for (std::size_t k = 0; k < a.dim(); ++k) {
                Scalar c = a.constant(i, jj, k);
                if (sgn(c) != 0) br.push_back({i, jj, k, to_string(c)});
            }
    j["brackets"] = br;
    return j;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace detail

inline LieAlgebra algebra_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [l, c] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw AlgebraParseError(e.what(), l, c, "");
    }
    auto fail = [](const std::string& m, const std::string& p) { throw AlgebraParseError(m, 0, 0, p); };
    if (!j.is_object()) fail("top level must be an object", "");
    if (!j.contains("labels") || !j["labels"].is_array()) fail("missing array 'labels'", "/labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < j["labels"].size(); ++i) {
        if (!j["labels"][i].is_string()) fail("label must be a string", "/labels/" + std::to_string(i));
        labels.push_back(j["labels"][i]);
    }
    LieAlgebra a(labels);
    const std::size_t d = labels.size();
    if (!j.contains("brackets") || !j["brackets"].is_array()) fail("missing array 'brackets'", "/brackets");
    std::vector<char> seen(d * d * d);
    for (std::size_t e = 0; e < j["brackets"].size(); ++e) {
        const auto& b = j["brackets"][e];
        const std::string ptr = "/brackets/" + std::to_string(e);
        if (!b.is_array() || b.size() != 4) fail("entry must be [i, j, k, \"c\"]", ptr);
        for (int t = 0; t < 3; ++t)
            if (!b[t].is_number_unsigned() || b[t].get<std::size_t>() >= d)
                fail("index out of range", ptr + "/" + std::to_string(t));
        std::size_t i = b[0], jj = b[1], k = b[2];
        if (i >= jj) fail("entries need i < j", ptr);
        if (seen[(i * d + jj) * d + k]++) fail("duplicate entry", ptr);
        Scalar c;
        try {
            if (b[3].is_string()) c = parse_scalar(b[3].get<std::string>());
            else if (b[3].is_number_integer()) c = Scalar(b[3].get<long>());
            else fail("coefficient must be a rational string or integer", ptr + "/3");
        } catch (const AlgebraParseError&) {
            throw;
        } catch (const std::exception& ex) {
            fail(ex.what(), ptr + "/3");
        }
        a.set_constant(i, jj, k, c);
        a.set_constant(jj, i, k, -c);
    }
    return a;
}

// named constructions for the command line
inline LieAlgebra named_algebra(const std::string& name, std::size_t n) {
    if (name == "hsp") return hsp_algebra(n);
    if (name == "hcsp") return hcsp_algebra(n);
    if (name == "sp") return sp_algebra(n).algebra;
    if (name == "heis") return heis_algebra(n);
    if (name == "sl2") return sl2_algebra().algebra;
    throw std::invalid_argument("unknown algebra '" + name + "' (hsp, hcsp, sp, heis, sl2)");
}

}  // namespace modnet
