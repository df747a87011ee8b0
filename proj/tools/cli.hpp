#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nek::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kViolation = 2;
inline constexpr int kInconclusive = 3;

enum class Command { Classify, Check, States, Embed, Enumerate, Verify };

struct RunConfig {
    Command command = Command::Classify;
    std::vector<std::string> inputs;

    bool autoclose = false;
    bool machine = false;        // --format machine
    std::string property = "all";  // check: P | T | U | SJ | all
    std::uint64_t clique_cap = 1'000'000;
    int enumerate_n = 0;         // enumerate: list structures on 2..n elements
    int n_max = 10;              // refusal threshold for enumeration size
    std::optional<std::string> out_dir;  // enumerate: write .poset files here

    // verify corpus knobs
    bool with_fixtures = false;
    int enumerate_corpus_max = 0;  // add all structures with <= n elements
    int random_count = 0;
    int random_states = 3;
    int random_pairs = 3;
    int random_den = 6;
    std::uint64_t seed = 1;  // NEK_SEED overrides
};

// Runs one command against the given streams; returns the exit code. The
// environment variable NEK_SEED, when set, overrides config.seed.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv-level entry used by main(); parses flags into a RunConfig.
int main_entry(int argc, char** argv);

}  // namespace nek::cli
