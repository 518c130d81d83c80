#pragma once

/**
 * @file commands.hpp
 * @brief The kmin command-line operations, independent of argument parsing.
 *
 * Each command writes its result to `out`, diagnostics to `err`, and returns
 * the process exit code:
 *
 *   0   success / equivalent / isomorphic
 *   1   negative verdict (different, not isomorphic)
 *   2   parse error (bad document, unreadable file, bad arguments)
 *   3   unknown symbol in a word
 *   4   step budget exceeded
 *   5   precondition violation (ring or alphabet mismatch, non-minimal input)
 *   70  internal error
 */

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "automaton.hpp"
#include "document.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "minimize.hpp"

namespace kmin::cli {

enum ExitCode : int {
    kSuccess = 0,
    kNegative = 1,
    kParseError = 2,
    kUnknownSymbol = 3,
    kBudgetExceeded = 4,
    kPrecondition = 5,
    kInternal = 70,
};

struct Options {
    std::size_t max_steps = 10000;
    bool ring_check = false;
};

namespace detail {

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const UnknownSymbol& e) {
        err << "error: " << e.what() << '\n';
        return kUnknownSymbol;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const PreconditionViolation& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

inline AutomatonDocument load(const std::string& path, const Options& opts) {
    auto doc = load_document(path);
    if (opts.ring_check)
        with_ring(doc.ring, [&]<class R>() { verify_document<R>(doc); });
    return doc;
}

template <class R>
void emit(const LinearRepresentation<R>& rep, const std::optional<std::string>& path, const Options& opts,
          std::ostream& out) {
    auto doc = to_document(rep);
    if (opts.ring_check)
        verify_document<R>(doc);
    if (path)
        save_document(doc, *path);
    else
        out << serialize_document(doc);
}

inline void require_same_ring(const AutomatonDocument& a, const AutomatonDocument& b) {
    if (a.ring != b.ring)
        throw RingMismatch();
}

inline std::string format_word(const Alphabet& sigma, const Word& w) {
    return w.empty() ? "ε" : sigma.format_word(w);
}

template <class T>
void print_matrix(std::ostream& out, const Matrix<T>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? ", " : "") << to_string(m(i, j));
        out << "]\n";
    }
}

} // namespace detail

/// Prints the coefficient of `word` in the series.
inline int cmd_eval(const std::string& file, const std::string& word, const Options& opts, std::ostream& out,
                    std::ostream& err) {
    return detail::guarded(err, [&] {
        auto doc = detail::load(file, opts);
        return with_ring(doc.ring, [&]<class R>() {
            auto rep = to_representation<R>(doc);
            out << to_string(behavior(rep, rep.alphabet().parse_word(word))) << '\n';
            return int(kSuccess);
        });
    });
}

/// mode is "left", "right" or "full". Prints "old -> new"; the reduced
/// document goes to out_file, or after the summary line when absent.
inline int cmd_minimize(const std::string& file, const std::optional<std::string>& out_file, const std::string& mode,
                        const Options& opts, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        if (mode != "left" && mode != "right" && mode != "full")
            throw ParseError("mode must be left, right or full");
        auto doc = detail::load(file, opts);
        return with_ring(doc.ring, [&]<class R>() {
            auto rep = to_representation<R>(doc);
            StepBudget budget{opts.max_steps};
            auto reduced = mode == "left"    ? left_reduction(rep, budget)
                           : mode == "right" ? right_reduction(rep, budget)
                                             : minimize(rep, budget);
            out << rep.dim() << " -> " << reduced.dim() << '\n';
            detail::emit(reduced, out_file, opts, out);
            return int(kSuccess);
        });
    });
}

inline int cmd_equiv(const std::string& file_a, const std::string& file_b, const Options& opts, std::ostream& out,
                     std::ostream& err) {
    return detail::guarded(err, [&] {
        auto a = detail::load(file_a, opts);
        auto b = detail::load(file_b, opts);
        detail::require_same_ring(a, b);
        return with_ring(a.ring, [&]<class R>() {
            auto ra = to_representation<R>(a);
            auto rb = to_representation<R>(b);
            auto w = distinguishing_word(ra, rb);
            if (!w) {
                out << "equivalent\n";
                return int(kSuccess);
            }
            out << "different\n";
            out << "witness: \"" << ra.alphabet().format_word(*w) << "\"\n";
            out << "values: " << to_string(behavior(ra, *w)) << " vs " << to_string(behavior(rb, *w)) << '\n';
            return int(kNegative);
        });
    });
}

inline int cmd_iso(const std::string& file_a, const std::string& file_b, const Options& opts, std::ostream& out,
                   std::ostream& err) {
    return detail::guarded(err, [&] {
        auto a = detail::load(file_a, opts);
        auto b = detail::load(file_b, opts);
        detail::require_same_ring(a, b);
        return with_ring(a.ring, [&]<class R>() {
            auto ra = to_representation<R>(a);
            auto rb = to_representation<R>(b);
            if (!is_minimal_over_fractions(ra))
                throw PreconditionViolation("'" + file_a + "' is not minimal over the fraction field");
            if (!is_minimal_over_fractions(rb))
                throw PreconditionViolation("'" + file_b + "' is not minimal over the fraction field");
            auto s = conjugator(ra, rb);
            if (!s) {
                out << "not isomorphic over K (no conjugator over F)\n";
                return int(kNegative);
            }
            bool iso = k_isomorphic(ra, rb);
            out << (iso ? "isomorphic over K\n" : "not isomorphic over K (conjugator requires fractions)\n");
            out << "conjugator:\n";
            detail::print_matrix(out, *s);
            out << "inverse:\n";
            detail::print_matrix(out, *inverse_over_field(*s));
            return int(iso ? kSuccess : kNegative);
        });
    });
}

inline int cmd_hadamard(const std::string& file_a, const std::string& file_b,
                        const std::optional<std::string>& out_file, const Options& opts, std::ostream& out,
                        std::ostream& err) {
    return detail::guarded(err, [&] {
        auto a = detail::load(file_a, opts);
        auto b = detail::load(file_b, opts);
        detail::require_same_ring(a, b);
        return with_ring(a.ring, [&]<class R>() {
            auto product = hadamard(to_representation<R>(a), to_representation<R>(b));
            detail::emit(product, out_file, opts, out);
            return int(kSuccess);
        });
    });
}

/// Ring, alphabet, dimension and the prefix set; X and Z are listed when
/// dim <= 6.
inline int cmd_info(const std::string& file, const Options& opts, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        auto doc = detail::load(file, opts);
        return with_ring(doc.ring, [&]<class R>() {
            auto rep = to_representation<R>(doc);
            auto pr = prefix(rep, StepBudget{opts.max_steps});
            out << "ring: " << doc.ring << '\n';
            out << "alphabet:";
            for (const auto& s : doc.alphabet)
                out << ' ' << s;
            out << '\n';
            out << "dim: " << rep.dim() << '\n';
            out << "|X|: " << pr.X.size() << '\n';
            out << "|Z|: " << pr.Z.size() << '\n';
            if (rep.dim() <= 6) {
                auto list = [&](auto first, auto last) {
                    out << '{';
                    for (auto it = first; it != last; ++it)
                        out << (it == first ? "" : ", ") << detail::format_word(rep.alphabet(), *it);
                    out << "}\n";
                };
                out << "X: ";
                list(pr.X.begin(), pr.X.end());
                out << "Z: ";
                list(pr.Z.begin(), pr.Z.end());
            }
            return int(kSuccess);
        });
    });
}

} // namespace kmin::cli
