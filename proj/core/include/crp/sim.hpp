#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "crp/graph.hpp"
#include "crp/rng.hpp"

namespace crp {

/// One O(log n)-bit message unit. Any integer within the engine's word
/// bound (default [-n^3*W, n^3*W]) plus the two sentinels counts as one word.
using Word = int64_t;

class SimError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BandwidthViolation : public SimError {
public:
    BandwidthViolation(int64_t round, Vertex a, Vertex b, int words, int budget)
        : SimError("bandwidth violation at round " + std::to_string(round) + " on link (" +
                   std::to_string(a) + "," + std::to_string(b) + "): " + std::to_string(words) +
                   " words > budget " + std::to_string(budget)),
          round(round), link_a(a), link_b(b), words(words) {}
    int64_t round;
    Vertex link_a, link_b;
    int words;
};

class NonHaltingError : public SimError {
public:
    explicit NonHaltingError(int64_t max_rounds)
        : SimError("program did not halt within " + std::to_string(max_rounds) + " rounds") {}
};

struct Metrics {
    int64_t rounds_used = 0;
    int64_t total_words_sent = 0;
    int64_t max_words_on_link = 0;
    std::vector<std::pair<std::string, int64_t>> phases;

    void absorb(const Metrics& other);
    std::string to_string() const;
};

/// What a simulated vertex is allowed to see at start of a run: its own id,
/// its incident links (peer id, weight, direction, membership in P), and the
/// source/target flags. Anything else must arrive via messages or an
/// explicit knowledge grant.
struct IncidentLink {
    int link = -1;       // communication link id == base edge id
    Vertex peer = -1;
    Weight weight = 1;
    bool outgoing = false;  // true iff the underlying directed edge leaves this vertex
    bool on_path = false;
};

struct LocalView {
    Vertex id = -1;
    int n = 0;
    bool is_source = false;
    bool is_target = false;
    std::vector<IncidentLink> links;
};

struct InMessage {
    int link = -1;
    Vertex from = -1;
    std::span<const Word> words;
};

using Inbox = std::span<const InMessage>;

class Outbox {
public:
    /// Queue `words` for delivery over `link` next round (direction: away
    /// from the sending vertex). Budget is enforced per link per direction
    /// per round.
    void send(int link, std::initializer_list<Word> words) {
        send(link, std::span<const Word>(words.begin(), words.size()));
    }
    void send(int link, std::span<const Word> words);

private:
    friend class RoundEngine;
    struct Pending {
        int link;
        Vertex from;
        uint32_t offset, len;
    };
    Vertex sender_ = -1;
    std::vector<Pending>* queue_ = nullptr;
    std::vector<Word>* arena_ = nullptr;
};

/// A synchronous vertex program. `init` runs once (its sends occupy the
/// round-1 link capacity); `on_round` runs every round for non-halted
/// vertices with the messages sent in the previous round. Return true to
/// halt. A halted vertex never acts again.
class VertexProgram {
public:
    virtual ~VertexProgram() = default;
    virtual bool init(const LocalView& self, Rng& rng, Outbox& out) = 0;
    virtual bool on_round(const LocalView& self, int64_t round, Inbox inbox, Rng& rng,
                          Outbox& out) = 0;
};

struct EngineOptions {
    int budget = 2;                // words per link per direction per round
    uint64_t seed = 0;
    int64_t max_rounds = -1;       // -1: 50 * (ceil(n^(2/3)) + n)
    Word word_bound = -1;          // -1: n^3 * W
};

struct RunResult {
    Metrics metrics;
    uint64_t transcript_hash = 0;  // order-sensitive hash of every delivery
};

/// Deterministic round-synchronous executor over the instance's link graph.
/// Communication links are bidirectional (one link per directed edge); the
/// budget applies to each traversal direction independently.
class RoundEngine {
public:
    RoundEngine(const AnnotatedGraph& g, EngineOptions opts = {});

    RunResult run(VertexProgram& program, const std::string& phase_name);

    const AnnotatedGraph& graph() const { return *g_; }
    const LocalView& local_view(Vertex v) const { return views_[v]; }
    int budget() const { return opts_.budget; }
    int64_t max_rounds() const { return opts_.max_rounds; }

private:
    const AnnotatedGraph* g_;
    EngineOptions opts_;
    std::vector<LocalView> views_;
};

/// Integer ceil(n^(2/3)).
int ceil_n23(int n);

/// Phase-composition audit. Facts computed by one simulated phase may be
/// granted as initial knowledge to a later phase; granting anything whose
/// producer never completed is an error in strict mode.
class KnowledgeLedger {
public:
    explicit KnowledgeLedger(bool strict = true) : strict_(strict) {}

    void complete_phase(const std::string& phase);
    void grant(const std::string& fact, const std::string& producer,
               const std::string& consumer);

    struct Entry {
        enum Kind { Grant, Complete } kind;
        std::string fact, producer, consumer;
    };
    const std::vector<Entry>& log() const { return log_; }
    bool strict() const { return strict_; }

private:
    bool strict_;
    std::set<std::string> completed_{"initial-knowledge", "local"};
    std::vector<Entry> log_;
};

class AuditError : public SimError {
public:
    using SimError::SimError;
};

}  // namespace crp
