#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace kmin {

/// A word is a sequence of symbol indices; the empty word is epsilon.
using Word = std::vector<std::size_t>;

/// Length first, then lexicographic by symbol index.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

using WordSet = std::set<Word, ShortLex>;

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline Word append(Word a, std::size_t symbol) {
    a.push_back(symbol);
    return a;
}

/// Ordered, nonempty list of distinct symbol names.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty())
            throw ShapeMismatch("alphabet is empty");
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (symbols_[i].empty())
                throw ShapeMismatch("empty symbol name");
            for (std::size_t j = 0; j < i; ++j)
                if (symbols_[i] == symbols_[j])
                    throw ShapeMismatch("duplicate symbol '" + symbols_[i] + "'");
        }
    }

    std::size_t size() const { return symbols_.size(); }
    const std::string& operator[](std::size_t i) const { return symbols_.at(i); }
    const std::vector<std::string>& symbols() const { return symbols_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = std::find(symbols_.begin(), symbols_.end(), name);
        if (it == symbols_.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - symbols_.begin());
    }

    bool single_characters() const {
        return std::all_of(symbols_.begin(), symbols_.end(), [](const auto& s) { return s.size() == 1; });
    }

    /// Concatenated single characters when every symbol is one character,
    /// otherwise comma-separated names. "" is the empty word.
    Word parse_word(std::string_view text) const {
        Word w;
        if (text.empty())
            return w;
        if (single_characters()) {
            for (char c : text)
                w.push_back(lookup(std::string_view(&c, 1)));
            return w;
        }
        std::size_t start = 0;
        while (true) {
            std::size_t comma = text.find(',', start);
            w.push_back(lookup(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return w;
    }

    std::string format_word(const Word& w) const {
        std::string out;
        const char* sep = single_characters() ? "" : ",";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i)
                out += sep;
            out += (*this)[w[i]];
        }
        return out;
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::size_t lookup(std::string_view name) const {
        auto i = index_of(name);
        if (!i)
            throw UnknownSymbol("unknown symbol '" + std::string(name) + "'");
        return *i;
    }

    std::vector<std::string> symbols_;
};

/// All words of length <= max_length over `alphabet_size` symbols in
/// short-lex order.
inline std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (std::size_t s = 0; s < alphabet_size; ++s)
                out.push_back(append(out[i], s));
        level_begin = level_end;
    }
    return out;
}

} // namespace kmin
