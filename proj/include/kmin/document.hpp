#pragma once

/**
 * @file document.hpp
 * @brief On-disk automaton documents.
 *
 * A document is a JSON object; every scalar is a string in the ring's text
 * syntax so that arbitrary precision survives:
 *
 *     {
 *       "ring": "int",
 *       "alphabet": ["a"],
 *       "dim": 2,
 *       "lambda": ["1", "0"],
 *       "mu": { "a": [["0", "2"], ["0", "0"]] },
 *       "gamma": ["0", "1"]
 *     }
 *
 * ring is one of "int", "rat", "poly", "fracpoly".
 */

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "automaton.hpp"
#include "errors.hpp"
#include "fracpoly.hpp"
#include "fraction.hpp"
#include "integer.hpp"
#include "polynomial.hpp"

namespace kmin {

using StringMatrix = std::vector<std::vector<std::string>>;

struct AutomatonDocument {
    std::string ring;
    std::vector<std::string> alphabet;
    std::size_t dim = 0;
    std::vector<std::string> lambda;
    std::map<std::string, StringMatrix> mu;
    std::vector<std::string> gamma;

    friend bool operator==(const AutomatonDocument&, const AutomatonDocument&) = default;
};

inline bool known_ring(std::string_view tag) {
    return tag == ring_tag<Integer> || tag == ring_tag<Rational> || tag == ring_tag<Polynomial> ||
           tag == ring_tag<FracPoly>;
}

/// Calls f.template operator()<R>() with R the ring named by tag.
template <class F>
decltype(auto) with_ring(std::string_view tag, F&& f) {
    if (tag == ring_tag<Integer>)
        return f.template operator()<Integer>();
    if (tag == ring_tag<Rational>)
        return f.template operator()<Rational>();
    if (tag == ring_tag<Polynomial>)
        return f.template operator()<Polynomial>();
    if (tag == ring_tag<FracPoly>)
        return f.template operator()<FracPoly>();
    throw ParseError("unknown ring '" + std::string(tag) + "'");
}

namespace detail {

inline std::vector<std::string> string_list(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array())
        throw ParseError("'" + what + "' must be an array");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string())
            throw ParseError("entries of '" + what + "' must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

inline const nlohmann::json& field(const nlohmann::json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

} // namespace detail

/// Parses and shape-checks a document. Scalars are not interpreted here.
inline AutomatonDocument parse_document(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("document must be a JSON object");

    AutomatonDocument doc;
    const auto& ring = detail::field(j, "ring");
    if (!ring.is_string() || !known_ring(ring.get<std::string>()))
        throw ParseError("'ring' must be one of int, rat, poly, fracpoly");
    doc.ring = ring.get<std::string>();

    doc.alphabet = detail::string_list(detail::field(j, "alphabet"), "alphabet");
    try {
        Alphabet check(doc.alphabet);
    } catch (const ShapeMismatch& e) {
        throw ParseError(e.what());
    }

    const auto& dim = detail::field(j, "dim");
    if (!dim.is_number_unsigned())
        throw ParseError("'dim' must be a non-negative integer");
    doc.dim = dim.get<std::size_t>();

    doc.lambda = detail::string_list(detail::field(j, "lambda"), "lambda");
    doc.gamma = detail::string_list(detail::field(j, "gamma"), "gamma");
    if (doc.lambda.size() != doc.dim || doc.gamma.size() != doc.dim)
        throw ParseError("'lambda' and 'gamma' must have dim entries");

    const auto& mu = detail::field(j, "mu");
    if (!mu.is_object())
        throw ParseError("'mu' must be an object keyed by symbol");
    for (const auto& [symbol, m] : mu.items()) {
        if (std::find(doc.alphabet.begin(), doc.alphabet.end(), symbol) == doc.alphabet.end())
            throw ParseError("'mu' has a matrix for unknown symbol '" + symbol + "'");
        if (!m.is_array() || m.size() != doc.dim)
            throw ParseError("mu['" + symbol + "'] must have dim rows");
        StringMatrix rows;
        for (const auto& row : m) {
            auto r = detail::string_list(row, "mu['" + symbol + "']");
            if (r.size() != doc.dim)
                throw ParseError("mu['" + symbol + "'] must have dim columns");
            rows.push_back(std::move(r));
        }
        doc.mu.emplace(symbol, std::move(rows));
    }
    if (doc.mu.size() != doc.alphabet.size())
        throw ParseError("'mu' needs one matrix per alphabet symbol");
    return doc;
}

/// Deterministic text: fixed key order, mu in alphabet order, one matrix row
/// per line.
inline std::string serialize_document(const AutomatonDocument& doc) {
    auto quoted = [](const std::string& x) { return nlohmann::json(x).dump(); };
    auto inline_list = [&](const std::vector<std::string>& xs) {
        std::string out = "[";
        for (std::size_t i = 0; i < xs.size(); ++i)
            out += (i ? ", " : "") + quoted(xs[i]);
        return out + "]";
    };
    std::string out = "{\n";
    out += "  \"ring\": " + quoted(doc.ring) + ",\n";
    out += "  \"alphabet\": " + inline_list(doc.alphabet) + ",\n";
    out += "  \"dim\": " + std::to_string(doc.dim) + ",\n";
    out += "  \"lambda\": " + inline_list(doc.lambda) + ",\n";
    out += "  \"mu\": {";
    for (std::size_t s = 0; s < doc.alphabet.size(); ++s) {
        const auto& rows = doc.mu.at(doc.alphabet[s]);
        out += (s ? ",\n" : "\n");
        out += "    " + quoted(doc.alphabet[s]) + ": [";
        for (std::size_t i = 0; i < rows.size(); ++i)
            out += (i ? ",\n      " : "\n      ") + inline_list(rows[i]);
        out += rows.empty() ? "]" : "\n    ]";
    }
    out += "\n  },\n";
    out += "  \"gamma\": " + inline_list(doc.gamma) + "\n";
    out += "}\n";
    return out;
}

inline AutomatonDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

inline void save_document(const AutomatonDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << serialize_document(doc);
}

namespace detail {

template <BezoutDomain R>
R parse_scalar(const std::string& s) {
    try {
        return R::parse(s);
    } catch (const ParseError& e) {
        throw ParseError(std::string("bad ") + std::string(ring_tag<R>) + " scalar '" + s + "': " + e.what());
    } catch (const DivisionByZero&) {
        throw ParseError("bad scalar '" + s + "': zero denominator");
    }
}

} // namespace detail

template <BezoutDomain R>
LinearRepresentation<R> to_representation(const AutomatonDocument& doc) {
    if (doc.ring != ring_tag<R>)
        throw RingMismatch();
    const std::size_t n = doc.dim;
    Matrix<R> lambda(1, n), gamma(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        lambda(0, i) = detail::parse_scalar<R>(doc.lambda.at(i));
        gamma(i, 0) = detail::parse_scalar<R>(doc.gamma.at(i));
    }
    std::vector<Matrix<R>> mu;
    for (const auto& s : doc.alphabet) {
        Matrix<R> m(n, n);
        const auto& rows = doc.mu.at(s);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = detail::parse_scalar<R>(rows.at(i).at(j));
        mu.push_back(std::move(m));
    }
    try {
        return LinearRepresentation<R>(Alphabet(doc.alphabet), std::move(lambda), std::move(mu), std::move(gamma));
    } catch (const ShapeMismatch& e) {
        throw ParseError(e.what());
    }
}

template <BezoutDomain R>
AutomatonDocument to_document(const LinearRepresentation<R>& rep) {
    AutomatonDocument doc;
    doc.ring = std::string(ring_tag<R>);
    doc.alphabet = rep.alphabet().symbols();
    doc.dim = rep.dim();
    for (std::size_t i = 0; i < rep.dim(); ++i) {
        doc.lambda.push_back(to_string(rep.lambda()(0, i)));
        doc.gamma.push_back(to_string(rep.gamma()(i, 0)));
    }
    for (std::size_t s = 0; s < rep.alphabet().size(); ++s) {
        StringMatrix rows(rep.dim());
        for (std::size_t i = 0; i < rep.dim(); ++i)
            for (std::size_t j = 0; j < rep.dim(); ++j)
                rows[i].push_back(to_string(rep.mu(s)(i, j)));
        doc.mu.emplace(rep.alphabet()[s], std::move(rows));
    }
    return doc;
}

/// Every scalar is written in canonical form and the document survives a
/// serialize/parse round trip unchanged. Throws ParseError otherwise.
template <BezoutDomain R>
void verify_document(const AutomatonDocument& doc) {
    auto rep = to_representation<R>(doc);
    if (!(to_document(rep) == doc))
        throw ParseError("document scalars are not in canonical form");
    if (!(parse_document(serialize_document(doc)) == doc))
        throw ParseError("document does not survive a serialization round trip");
}

} // namespace kmin
