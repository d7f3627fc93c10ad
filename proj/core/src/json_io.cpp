#include "seqmerit/json_io.hpp"

#include <cctype>
#include <complex>
#include <vector>

#include <nlohmann/json.hpp>

#include "seqmerit/errors.hpp"

namespace seqmerit {

namespace {

std::string trimmed(const std::string& text)
{
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    return text.substr(begin, end - begin);
}

std::vector<std::complex<double>> parse_pairs(const nlohmann::json& values)
{
    std::vector<std::complex<double>> entries;
    entries.reserve(values.size());
    for (const auto& value : values) {
        if (!value.is_array() || value.size() != 2 || !value[0].is_number()
            || !value[1].is_number()) {
            throw ParseError("complex entries must be [re, im] pairs");
        }
        entries.emplace_back(value[0].get<double>(), value[1].get<double>());
    }
    return entries;
}

} // namespace

std::string sequence_to_json_text(const Sequence& s)
{
    nlohmann::json j;
    switch (s.alphabet()) {
    case Alphabet::PlusMinusOne: {
        j["alphabet"] = "pm1";
        j["values"] = s.signs();
        break;
    }
    case Alphabet::RootsOfUnity:
        j["alphabet"] = "roots:" + std::to_string(s.root_order());
        break;
    case Alphabet::Complex:
        j["alphabet"] = "complex";
        break;
    }
    if (s.alphabet() != Alphabet::PlusMinusOne) {
        auto values = nlohmann::json::array();
        for (const auto& entry : s.entries()) {
            values.push_back({entry.real(), entry.imag()});
        }
        j["values"] = std::move(values);
    }
    return j.dump();
}

Sequence sequence_from_json_text(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("alphabet") || !j.contains("values")) {
        throw ParseError("sequence JSON must be an object with 'alphabet' and 'values'");
    }
    if (!j["alphabet"].is_string() || !j["values"].is_array()) {
        throw ParseError("'alphabet' must be a string and 'values' an array");
    }
    const std::string alphabet = j["alphabet"].get<std::string>();
    const auto& values = j["values"];
    if (values.empty()) {
        throw ParseError("'values' must be nonempty");
    }

    if (alphabet == "pm1") {
        std::vector<int> signs;
        signs.reserve(values.size());
        for (const auto& value : values) {
            if (!value.is_number()) {
                throw ParseError("pm1 values must be the numbers +1 or -1");
            }
            const double v = value.get<double>();
            if (v != 1.0 && v != -1.0) {
                throw ParseError("pm1 values must be the numbers +1 or -1");
            }
            signs.push_back(v > 0 ? 1 : -1);
        }
        return Sequence::binary(std::move(signs));
    }
    if (alphabet.starts_with("roots:")) {
        int order = 0;
        try {
            std::size_t consumed = 0;
            order = std::stoi(alphabet.substr(6), &consumed);
            if (consumed != alphabet.size() - 6) {
                throw std::invalid_argument("trailing text");
            }
        } catch (const std::exception&) {
            throw ParseError("roots alphabet must look like 'roots:m' with integer m");
        }
        return Sequence::roots_of_unity(parse_pairs(values), order);
    }
    if (alphabet == "complex") {
        return Sequence::complex_values(parse_pairs(values));
    }
    throw ParseError("unknown alphabet '" + alphabet + "' (expected pm1, roots:m, or complex)");
}

Sequence parse_sequence_text(const std::string& text)
{
    const std::string body = trimmed(text);
    if (body.empty()) {
        throw ParseError("empty sequence text");
    }
    if (body.front() == '{') {
        return sequence_from_json_text(body);
    }
    return parse_pm_string(body);
}

} // namespace seqmerit
