#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptflip/pseudo_polygon.hpp"
#include "ptflip/pseudo_triangulation.hpp"

namespace ptflip {

enum class FlipKind { Exchange, Insert, Delete };

inline const char* flip_kind_name(FlipKind k) {
    switch (k) {
        case FlipKind::Exchange: return "exchange";
        case FlipKind::Insert: return "insert";
        case FlipKind::Delete: return "delete";
    }
    return "?";
}

struct FlipEvent {
    FlipKind kind = FlipKind::Exchange;
    std::optional<Edge> removed;
    std::optional<Edge> inserted;
    int label = 0;

    friend bool operator==(const FlipEvent&, const FlipEvent&) = default;
};

// Replayable sequence of flips; the universal proof object of the pipelines.
struct FlipTrace {
    LabelledPT initial;
    std::vector<FlipEvent> events;

    int size() const { return static_cast<int>(events.size()); }
    bool exchanges_only() const {
        for (const FlipEvent& e : events)
            if (e.kind != FlipKind::Exchange) return false;
        return true;
    }
};

// --- geometric probes ---------------------------------------------------

// Replacement edge of an exchanging flip: the unique other bitangent of the
// merged pseudo-quadrilateral, if it exists.
inline std::optional<Edge> try_exchange_replacement(const PseudoTriangulation& T, Edge e) {
    if (!T.has_edge(e) || T.is_hull_edge(e)) return std::nullopt;
    PseudoPolygon X = face_merge(T, e);
    if (X.k != 4) return std::nullopt;
    std::vector<Edge> B = bitangents(X);
    if (B.size() != 2) return std::nullopt;
    if (B[0] == e) return B[1];
    if (B[1] == e) return B[0];
    return std::nullopt;
}

inline bool can_delete(const PseudoTriangulation& T, Edge e) {
    if (!T.has_edge(e) || T.is_hull_edge(e)) return false;
    Face merged = detail::merged_face_after_removal(T, {e});
    return merged.corner_count == 3 && merged.simple;
}

// uv must split one bounded face into two pseudo-triangles.
inline bool can_insert(const PseudoTriangulation& T, Edge uv) {
    const PointSet& ps = T.point_set();
    if (uv.u < 0 || uv.v >= ps.n() || uv.u == uv.v) return false;
    if (T.has_edge(uv)) return false;
    for (const Edge& e : T.edges())
        if (segments_properly_cross(ps.at(uv.u), ps.at(uv.v), ps.at(e.u), ps.at(e.v)))
            return false;
    PseudoTriangulation probe = T;
    probe.add_edge(uv);
    const FaceSet& fs = probe.face_set();
    for (int fi : {fs.face_of_dart(uv.u, uv.v), fs.face_of_dart(uv.v, uv.u)}) {
        if (fi < 0) return false;
        const Face& f = fs.faces[static_cast<std::size_t>(fi)];
        if (f.outer || f.corner_count != 3 || !f.simple) return false;
    }
    return true;
}

// --- labelled flips -----------------------------------------------------

inline FlipEvent exchanging_flip(LabelledPT& T, Edge e) {
    if (!T.pt.has_edge(e))
        throw Error(ErrorCode::InvalidInput, "edge " + to_string(e) + " not present");
    if (T.pt.is_hull_edge(e))
        throw Error(ErrorCode::NotFlippable, "hull edge " + to_string(e) + " cannot flip");
    std::optional<Edge> other = try_exchange_replacement(T.pt, e);
    if (!other)
        throw Error(ErrorCode::NotExchangeable,
                    "merged face of " + to_string(e) + " is not a two-bitangent pseudo-quadrilateral");
    int label = T.labels.label_of(e);
    T.pt.remove_edge(e);
    T.pt.add_edge(*other);
    T.labels.transfer(e, *other);
    return FlipEvent{FlipKind::Exchange, e, *other, label};
}

inline FlipEvent deletion_flip(LabelledPT& T, Edge e) {
    if (!T.pt.has_edge(e))
        throw Error(ErrorCode::InvalidInput, "edge " + to_string(e) + " not present");
    if (T.pt.is_hull_edge(e))
        throw Error(ErrorCode::NotFlippable, "hull edge " + to_string(e) + " cannot flip");
    if (!can_delete(T.pt, e))
        throw Error(ErrorCode::NotDeletable, "merged face of " + to_string(e) + " is not a pseudo-triangle");
    int label = T.labels.release(e);
    T.pt.remove_edge(e);
    return FlipEvent{FlipKind::Delete, e, std::nullopt, label};
}

inline FlipEvent insertion_flip(LabelledPT& T, Edge uv, int label) {
    if (!T.labels.is_free(label))
        throw Error(ErrorCode::LabelInUse, "label " + std::to_string(label) + " is not free");
    if (!can_insert(T.pt, uv))
        throw Error(ErrorCode::NotInsertable, to_string(uv) + " is not a valid splitting diagonal");
    T.pt.add_edge(uv);
    T.labels.assign(uv, label);
    return FlipEvent{FlipKind::Insert, std::nullopt, uv, label};
}

// --- traces ---------------------------------------------------------------

inline FlipEvent inverted(const FlipEvent& ev) {
    switch (ev.kind) {
        case FlipKind::Exchange: return FlipEvent{FlipKind::Exchange, ev.inserted, ev.removed, ev.label};
        case FlipKind::Insert: return FlipEvent{FlipKind::Delete, ev.inserted, std::nullopt, ev.label};
        case FlipKind::Delete: return FlipEvent{FlipKind::Insert, std::nullopt, ev.removed, ev.label};
    }
    return ev;
}

// Reverse a trace: events inverted, order reversed. `final` must be the
// state the trace replays to.
inline FlipTrace inverted(const FlipTrace& trace, const LabelledPT& final_state) {
    FlipTrace out;
    out.initial = final_state;
    for (auto it = trace.events.rbegin(); it != trace.events.rend(); ++it)
        out.events.push_back(inverted(*it));
    return out;
}

struct ReplayStats {
    int exchanges = 0;
    int inserts = 0;
    int deletes = 0;
    int total() const { return exchanges + inserts + deletes; }
};

struct ReplayResult {
    LabelledPT final;
    ReplayStats stats;
};

struct ReplayOptions {
    bool validate_each_step = false; // full face validation after every event
};

inline bool label_mismatch(const LabelledPT& T, Edge e, int label) {
    return !T.labels.has_label(e) || T.labels.label_of(e) != label;
}

inline ReplayResult replay(const FlipTrace& trace, ReplayOptions opt = {}) {
    LabelledPT cur = trace.initial;
    ReplayStats stats;
    for (std::size_t i = 0; i < trace.events.size(); ++i) {
        const FlipEvent& ev = trace.events[i];
        try {
            switch (ev.kind) {
                case FlipKind::Exchange: {
                    if (!ev.removed || !ev.inserted)
                        throw Error(ErrorCode::ReplayError, "exchange event missing edges");
                    if (label_mismatch(cur, *ev.removed, ev.label))
                        throw Error(ErrorCode::ReplayError, "label mismatch");
                    FlipEvent got = exchanging_flip(cur, *ev.removed);
                    if (got.inserted != ev.inserted)
                        throw Error(ErrorCode::ReplayError, "exchange inserted unexpected edge");
                    ++stats.exchanges;
                    break;
                }
                case FlipKind::Insert: {
                    if (!ev.inserted)
                        throw Error(ErrorCode::ReplayError, "insert event missing edge");
                    insertion_flip(cur, *ev.inserted, ev.label);
                    ++stats.inserts;
                    break;
                }
                case FlipKind::Delete: {
                    if (!ev.removed)
                        throw Error(ErrorCode::ReplayError, "delete event missing edge");
                    if (label_mismatch(cur, *ev.removed, ev.label))
                        throw Error(ErrorCode::ReplayError, "label mismatch");
                    deletion_flip(cur, *ev.removed);
                    ++stats.deletes;
                    break;
                }
            }
            if (!cur.labels.conserved())
                throw Error(ErrorCode::ReplayError, "ledger not conserved");
            if (opt.validate_each_step && !validate(cur.pt).clean())
                throw Error(ErrorCode::ReplayError, "invalid pseudo-triangulation");
        } catch (const Error& err) {
            throw Error(ErrorCode::ReplayError,
                        "step " + std::to_string(i) + ": " + err.what());
        }
    }
    return ReplayResult{std::move(cur), stats};
}

// Applies flips to a working state while accumulating the event list, with
// named phase boundaries for per-phase statistics.
class TraceRecorder {
public:
    explicit TraceRecorder(LabelledPT& state) : state_(&state) {}

    LabelledPT& state() { return *state_; }
    const LabelledPT& state() const { return *state_; }

    FlipEvent exchange(Edge e) {
        FlipEvent ev = exchanging_flip(*state_, e);
        events_.push_back(ev);
        return ev;
    }
    FlipEvent insert_edge(Edge e, int label) {
        FlipEvent ev = insertion_flip(*state_, e, label);
        events_.push_back(ev);
        return ev;
    }
    FlipEvent delete_edge(Edge e) {
        FlipEvent ev = deletion_flip(*state_, e);
        events_.push_back(ev);
        return ev;
    }

    void mark_phase(std::string name) { phases_.emplace_back(std::move(name), size()); }

    int size() const { return static_cast<int>(events_.size()); }
    const std::vector<FlipEvent>& events() const { return events_; }
    std::vector<FlipEvent> take_events() { return std::move(events_); }

    // (phase name, flip count) pairs derived from the marks.
    std::vector<std::pair<std::string, int>> phase_counts() const {
        std::vector<std::pair<std::string, int>> out;
        for (std::size_t i = 0; i < phases_.size(); ++i) {
            int end = i + 1 < phases_.size() ? phases_[i + 1].second : size();
            out.emplace_back(phases_[i].first, end - phases_[i].second);
        }
        return out;
    }

private:
    LabelledPT* state_;
    std::vector<FlipEvent> events_;
    std::vector<std::pair<std::string, int>> phases_;
};

} // namespace ptflip
