#include "wfcsc/orlib.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace wfcsc {

std::string_view to_string(OrlibFormat f) {
    return f == OrlibFormat::row_major ? "row-major" : "column-major";
}

namespace {

// Whitespace-separated integer stream that remembers where each token began.
class TokenReader {
public:
    explicit TokenReader(std::string_view text) : text_(text) {}

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::size_t pos() const { return pos_; }

    long next(const char* what) {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError(std::string("truncated stream: expected ") + what, pos_);
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        long value = 0;
        const auto [ptr, ec] =
            std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{} || ptr != text_.data() + pos_)
            throw ParseError("token is not an integer: '" +
                                 std::string(text_.substr(start, pos_ - start)) + "'",
                             start);
        return value;
    }

    long next_in(const char* what, long lo, long hi) {
        skip_ws();
        const std::size_t tok_pos = pos_;
        const long v = next(what);
        if (v < lo || v > hi) {
            std::ostringstream msg;
            msg << what << " out of range [" << lo << ".." << hi << "]: " << v;
            throw ParseError(msg.str(), tok_pos);
        }
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Raw 1-based column -> row lists, before Instance construction.
struct ParsedSets {
    long rows = 0;
    long cols = 0;
    std::vector<std::vector<int>> sets;  // per column, 1-based row ids
};

ParsedSets parse_variant(std::string_view text, OrlibFormat format) {
    TokenReader in(text);
    ParsedSets out;
    // A real file spends at least one token per row and per column, so the
    // text length bounds plausible header values.
    const long dim_cap = static_cast<long>(
        std::min<std::size_t>(text.size(), std::numeric_limits<int>::max()));
    out.rows = in.next_in("row count", 1, dim_cap);
    out.cols = in.next_in("column count", 1, dim_cap);
    out.sets.assign(static_cast<std::size_t>(out.cols), {});

    if (format == OrlibFormat::row_major) {
        for (long j = 0; j < out.cols; ++j) in.next("column cost");
        for (long i = 1; i <= out.rows; ++i) {
            const long count = in.next_in("cover count", 0, out.cols);
            for (long c = 0; c < count; ++c) {
                const long col = in.next_in("column index", 1, out.cols);
                out.sets[static_cast<std::size_t>(col - 1)].push_back(static_cast<int>(i));
            }
        }
    } else {
        for (long j = 0; j < out.cols; ++j) {
            in.next("column cost");
            const long count = in.next_in("row count for column", 0, out.rows);
            for (long c = 0; c < count; ++c) {
                const long row = in.next_in("row index", 1, out.rows);
                out.sets[static_cast<std::size_t>(j)].push_back(static_cast<int>(row));
            }
        }
    }

    if (!in.at_end())
        throw ParseError("leftover tokens after a complete " + std::string(to_string(format)) +
                             " instance",
                         in.pos());
    return out;
}

}  // namespace

OrlibFormat detect_format(std::string_view text) {
    std::optional<std::string> row_err, col_err;
    try {
        parse_variant(text, OrlibFormat::row_major);
    } catch (const ParseError& e) {
        row_err = e.what();
    }
    try {
        parse_variant(text, OrlibFormat::column_major);
    } catch (const ParseError& e) {
        col_err = e.what();
    }
    if (!row_err && !col_err)
        throw ParseError(
            "ambiguous encoding: both row-major and column-major parse cleanly; "
            "pass an explicit format hint",
            0);
    if (!row_err) return OrlibFormat::row_major;
    if (!col_err) return OrlibFormat::column_major;
    throw ParseError("not a recognizable scp file; row-major: [" + *row_err +
                         "], column-major: [" + *col_err + "]",
                     0);
}

Instance parse_orlib(std::string_view text, std::string name,
                     std::optional<OrlibFormat> hint, BuildStats* stats) {
    const OrlibFormat format = hint ? *hint : detect_format(text);
    ParsedSets parsed = parse_variant(text, format);
    return build_instance(static_cast<std::size_t>(parsed.rows), parsed.sets, std::move(name),
                          stats);
}

std::string write_orlib(const Instance& instance, OrlibFormat format) {
    std::ostringstream out;
    const std::size_t n = instance.universe_size();
    const std::size_t m = instance.num_sets();
    out << n << ' ' << m << '\n';

    if (format == OrlibFormat::row_major) {
        for (std::size_t j = 0; j < m; ++j) out << 1 << (j + 1 == m ? '\n' : ' ');
        for (std::size_t x = 0; x < n; ++x) {
            const auto sets = instance.element_sets(static_cast<ElemId>(x));
            out << sets.size() << '\n';
            for (std::size_t i = 0; i < sets.size(); ++i)
                out << (sets[i] + 1) << (i + 1 == sets.size() ? '\n' : ' ');
        }
    } else {
        for (std::size_t s = 0; s < m; ++s) {
            const auto elems = instance.set_elements(static_cast<SetId>(s));
            out << 1 << ' ' << elems.size() << '\n';
            for (std::size_t i = 0; i < elems.size(); ++i)
                out << (elems[i] + 1) << (i + 1 == elems.size() ? '\n' : ' ');
        }
    }
    return out.str();
}

VerifyReport verify_solution(const Instance& instance, const Cover& cover) {
    VerifyReport report;
    report.coverage.assign(instance.universe_size(), 0);

    std::vector<std::uint8_t> seen(instance.num_sets(), 0);
    for (SetId s : cover.selected) {
        if (!instance.valid_set_id(s)) {
            report.invalid_ids.push_back(s);
            continue;
        }
        if (seen[static_cast<std::size_t>(s)]) {
            report.duplicate_ids.push_back(s);
            continue;
        }
        seen[static_cast<std::size_t>(s)] = 1;
        for (ElemId x : instance.set_elements(s)) ++report.coverage[static_cast<std::size_t>(x)];
    }
    for (std::size_t x = 0; x < report.coverage.size(); ++x)
        if (report.coverage[x] == 0)
            report.uncovered_elements.push_back(static_cast<ElemId>(x + 1));

    report.k = cover.size();
    report.feasible =
        report.uncovered_elements.empty() && report.invalid_ids.empty();
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream out;
    out << (report.feasible ? "feasible" : "infeasible") << ", k=" << report.k << '\n';
    if (!report.invalid_ids.empty()) {
        out << "invalid set ids:";
        for (SetId s : report.invalid_ids) out << ' ' << (s + 1);
        out << '\n';
    }
    if (!report.duplicate_ids.empty()) {
        out << "duplicate selections:";
        for (SetId s : report.duplicate_ids) out << ' ' << (s + 1);
        out << '\n';
    }
    if (!report.uncovered_elements.empty()) {
        out << report.uncovered_elements.size() << " uncovered element(s):";
        for (ElemId x : report.uncovered_elements) out << ' ' << x;
        out << '\n';
    }
    std::size_t over = 0;
    for (auto c : report.coverage)
        if (c > 1) ++over;
    out << "elements covered more than once: " << over << '\n';
    return out.str();
}

}  // namespace wfcsc
