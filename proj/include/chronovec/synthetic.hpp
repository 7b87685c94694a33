#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "chronovec/corpus.hpp"
#include "chronovec/rng.hpp"

namespace chronovec {

// Recipe for a synthetic diachronic corpus with known usage shifts. Each
// pivot word co-occurs with pool_a tokens before its shift year and with
// pool_b tokens from that year on; everything else is filler drawn from a
// year-stable background pool. The four word sets must be pairwise disjoint.
struct SyntheticSpec {
    int first_year = 0;
    int last_year = 0;
    std::vector<std::string> pool_a;
    std::vector<std::string> pool_b;
    std::vector<std::string> background;
    std::map<std::string, int> pivots; // word -> shift year
    std::size_t sentences_per_year = 0;
    int sentence_length = 5;

    // Throws ConfigError naming the offending field.
    void validate() const;
};

struct SyntheticCorpus {
    std::map<int, std::vector<Sentence>> years;
    std::map<std::string, int> pivots; // ground truth: pivot -> shift year
};

// Each sentence carries one subject word, uniformly chosen over pivots and
// background words, at a uniform position; the remaining positions come from
// the subject's context pool. Deterministic given rng.
SyntheticCorpus generate_synthetic_corpus(const SyntheticSpec& spec, Rng& rng);

// Ground-truth manifest: {"pivots": {word: shift_year}, "seed": n, "spec": {...}}.
nlohmann::json synthetic_manifest_json(const SyntheticSpec& spec, std::uint64_t seed);

} // namespace chronovec
