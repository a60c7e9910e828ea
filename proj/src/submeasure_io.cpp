#include "subchi/submeasure_io.hpp"

#include <sstream>

#include "subchi/errors.hpp"

namespace subchi {

using nlohmann::json;

Rational rational_from_json(const json& j) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    throw ParseError("expected a rational as \"a/b\" or an integer, got " + j.dump());
}

namespace {

const json& field(const json& j, const char* name) {
    if (!j.contains(name))
        throw ParseError(std::string("submeasure spec is missing \"") + name + "\"");
    return j.at(name);
}

std::vector<Rational> rational_list(const json& j, std::size_t expected) {
    if (!j.is_array() || j.size() != expected)
        throw ParseError("expected a list of " + std::to_string(expected) + " rationals");
    std::vector<Rational> out;
    out.reserve(expected);
    for (const auto& v : j)
        out.push_back(rational_from_json(v));
    return out;
}

std::uint64_t parse_hex_mask(const std::string& key) {
    std::string digits = key;
    if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X'))
        digits = digits.substr(2);
    if (digits.empty() || digits.size() > 16)
        throw ParseError("bad subset mask '" + key + "'");
    std::uint64_t mask = 0;
    for (char c : digits) {
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            v = c - 'A' + 10;
        else
            throw ParseError("bad subset mask '" + key + "'");
        mask = (mask << 4) | static_cast<std::uint64_t>(v);
    }
    return mask;
}

std::string hex_mask(std::uint64_t mask) {
    std::ostringstream os;
    os << "0x" << std::hex << mask;
    return os.str();
}

}  // namespace

FiniteSubmeasure submeasure_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("submeasure spec must be a JSON object");
    const json& atoms_field = field(j, "atoms");
    if (!atoms_field.is_number_integer() || atoms_field.get<long long>() < 1)
        throw ParseError("\"atoms\" must be a positive integer");
    const int n = atoms_field.get<int>();
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "uniform") {
        const Rational w = j.contains("weight") ? rational_from_json(j.at("weight")) : make_rational(1, n);
        return FiniteSubmeasure::uniform(n, w);
    }
    if (kind == "weighted")
        return FiniteSubmeasure::weighted(rational_list(field(j, "weights"), static_cast<std::size_t>(n)));
    if (kind == "capped") {
        const Rational cap = rational_from_json(field(j, "cap"));
        if (j.contains("weights"))
            return FiniteSubmeasure::capped(cap, rational_list(j.at("weights"), static_cast<std::size_t>(n)));
        return FiniteSubmeasure::capped_uniform(n, cap, rational_from_json(field(j, "c")));
    }
    if (kind == "table") {
        if (n > FiniteSubmeasure::kMaxTableAtoms)
            throw ParseError("table submeasures support at most 20 atoms");
        const json& values = field(j, "values");
        if (!values.is_object())
            throw ParseError("\"values\" must map hex subset masks to rationals");
        const std::size_t size = std::size_t{1} << n;
        std::vector<Rational> table(size);
        std::vector<char> given(size, 0);
        given[0] = 1;
        for (const auto& [key, value] : values.items()) {
            const std::uint64_t mask = parse_hex_mask(key);
            if (mask >= size)
                throw ParseError("subset mask " + key + " names atoms beyond " + std::to_string(n));
            table[mask] = rational_from_json(value);
            given[mask] = 1;
        }
        for (std::size_t m = 0; m < size; ++m)
            if (!given[m])
                throw ParseError("table is missing a value for subset " + hex_mask(m));
        return FiniteSubmeasure::table(n, std::move(table));
    }
    throw ParseError("unknown submeasure kind '" + kind + "'");
}

FiniteSubmeasure parse_submeasure(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    try {
        return submeasure_from_json(j);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad submeasure spec: ") + e.what());
    }
}

json submeasure_to_json(const FiniteSubmeasure& mu) {
    json j;
    j["atoms"] = mu.atom_count();
    j["kind"] = to_string(mu.kind());
    switch (mu.kind()) {
    case SubmeasureKind::Uniform:
        j["weight"] = to_string(mu.weights().front());
        break;
    case SubmeasureKind::Weighted:
    case SubmeasureKind::Capped: {
        json w = json::array();
        for (const auto& x : mu.weights())
            w.push_back(to_string(x));
        j["weights"] = w;
        if (mu.cap())
            j["cap"] = to_string(*mu.cap());
        break;
    }
    case SubmeasureKind::Table: {
        json values = json::object();
        const auto& t = mu.table_values();
        for (std::size_t m = 1; m < t.size(); ++m)
            values[hex_mask(m)] = to_string(t[m]);
        j["values"] = values;
        break;
    }
    }
    return j;
}

Partition partition_from_json(std::size_t universe, const json& j) {
    if (!j.is_array())
        throw ParseError("partition must be a list of lists of atoms");
    std::vector<std::vector<int>> blocks;
    for (const auto& block : j) {
        if (!block.is_array())
            throw ParseError("partition block must be a list of atoms");
        std::vector<int> atoms;
        for (const auto& a : block) {
            if (!a.is_number_integer())
                throw ParseError("atoms must be integers");
            atoms.push_back(a.get<int>());
        }
        blocks.push_back(std::move(atoms));
    }
    return Partition::from_lists(universe, blocks);
}

Partition parse_partition(std::size_t universe, std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed partition: ") + e.what());
    }
    return partition_from_json(universe, j);
}

json partition_to_json(const Partition& p) {
    return json(p.to_lists());
}

}  // namespace subchi
