#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chronovec/corpus.hpp"

namespace chronovec {

// Accumulates total and per-year token counts. Builders accumulated on
// disjoint slices of the corpus can be merged (associative, commutative).
class VocabBuilder {
public:
    void add_sentence(const Sentence& sentence, int year);
    void merge(const VocabBuilder& other);

    std::uint64_t total(std::string_view word) const;
    std::uint64_t year_total(int year, std::string_view word) const;
    std::size_t distinct_words() const { return totals_.size(); }

private:
    friend class Vocab;

    struct StringHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };
    template <typename V>
    using StringMap = std::unordered_map<std::string, V, StringHash, std::equal_to<>>;

    StringMap<std::uint64_t> totals_;
    std::map<int, StringMap<std::uint64_t>> per_year_;
};

// Closed word <-> id mapping, fixed across all years. Words are ordered by
// descending total count, ties broken lexicographically.
class Vocab {
public:
    Vocab() = default;

    // Retains words with total count >= min_count; throws Error if empty.
    static Vocab build(const VocabBuilder& builder, std::uint64_t min_count);

    // Words and counts already in vocabulary order (used by load()).
    static Vocab from_counts(std::vector<std::string> words, std::vector<std::uint64_t> totals);

    std::size_t size() const { return words_.size(); }
    const std::vector<std::string>& words() const { return words_; }
    const std::string& word(std::uint32_t id) const { return words_[id]; }
    std::optional<std::uint32_t> id_of(std::string_view word) const;

    std::uint64_t total_count(std::uint32_t id) const { return counts_[id]; }
    std::uint64_t year_count(int year, std::uint32_t id) const;
    std::vector<std::uint64_t> year_count_vector(int year) const;
    const std::map<int, std::vector<std::uint64_t>>& per_year_counts() const { return per_year_; }
    void set_year_counts(int year, std::vector<std::uint64_t> counts);

    // In-vocabulary tokens map to their ids; OOV tokens are dropped and the
    // positions close up.
    std::vector<std::uint32_t> encode(const Sentence& sentence) const;
    std::vector<std::string> decode(const std::vector<std::uint32_t>& ids) const;

    // Text format: one line per word, "word SPACE total_count", in order.
    void save(std::ostream& out) const;
    static Vocab load(std::istream& in);

    // Sidecar with per-year counts: "year TAB word TAB count" lines.
    void save_year_counts(std::ostream& out) const;
    void load_year_counts(std::istream& in);

private:
    std::vector<std::string> words_;
    std::vector<std::uint64_t> counts_;
    VocabBuilder::StringMap<std::uint32_t> ids_;
    std::map<int, std::vector<std::uint64_t>> per_year_;

    void rebuild_index();
};

} // namespace chronovec
