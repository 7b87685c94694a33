#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chronovec/rng.hpp"
#include "chronovec/text_stream.hpp"

namespace chronovec {

// One line of an ngram TSV corpus:
//   ngram TAB year TAB match_count TAB volume_count
// with the ngram tokens separated by single ASCII spaces. Token case is
// preserved at parse time; lowercasing happens when sentences are sampled.
struct NgramRecord {
    std::vector<std::string> tokens;
    int year = 0;
    std::uint64_t match_count = 0;
    std::uint64_t volume_count = 0;

    bool operator==(const NgramRecord&) const = default;
};

NgramRecord parse_ngram_line(std::string_view line);

// Inverse of parse_ngram_line: canonical records round-trip byte-for-byte.
std::string format_ngram_line(const NgramRecord& record);

// Training sentence; all tokens lowercase, at least one token.
struct Sentence {
    std::vector<std::string> tokens;

    bool operator==(const Sentence&) const = default;
};

// ASCII lowering; non-ASCII bytes pass through untouched.
std::string ascii_lower(std::string_view s);

enum class ParseMode { strict, lenient };

// Streams the records of one year, in file order, from plain or gzipped TSV.
// Lenient mode skips malformed lines with a warning on `warn`; strict mode
// throws ParseError at the first malformed line.
class YearRecordStream {
public:
    YearRecordStream(std::istream& in, int year, ParseMode mode = ParseMode::strict,
                     std::ostream* warn = nullptr);

    std::optional<NgramRecord> next();

private:
    TextLineStream lines_;
    int year_;
    ParseMode mode_;
    std::ostream* warn_;
};

// Single pass over a TSV stream, grouping records by year. Years outside
// [first_year, last_year] are dropped.
std::map<int, std::vector<NgramRecord>> read_records_by_year(std::istream& in, int first_year,
                                                             int last_year, ParseMode mode,
                                                             std::ostream* warn = nullptr);

// n draws with replacement, record probability proportional to match_count;
// each drawn record becomes one lowercase sentence. Deterministic given rng.
std::vector<Sentence> sample_sentences(const std::vector<NgramRecord>& records, std::size_t n,
                                       Rng& rng);

} // namespace chronovec
