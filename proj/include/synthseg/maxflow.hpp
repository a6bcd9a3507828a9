#pragma once

#include <cstdint>
#include <vector>

namespace synthseg {

// Max-flow / min-cut on a graph with implicit source and sink terminals,
// Boykov-Kolmogorov search-tree algorithm. Terminal capacities fold into a
// per-node residual; nodes left disconnected after the cut are reported on
// the sink side.
class FlowGraph {
public:
    explicit FlowGraph(int node_count);

    // Accumulates capacities node<->terminals across repeated calls.
    void add_terminal(int node, double source_cap, double sink_cap);

    // Directed pair a->b with `cap` and b->a with `rev_cap`.
    void add_edge(int a, int b, double cap, double rev_cap);

    // Returns the max-flow value (== min-cut capacity). Call once.
    double solve();

    // Valid after solve().
    bool in_source_side(int node) const;

    int node_count() const { return static_cast<int>(tr_cap_.size()); }

private:
    struct Arc {
        int head;
        int next;    // next arc out of the same tail, -1 terminates
        int sister;
        double r_cap;
    };

    enum : int8_t { kFree = 0, kSource = 1, kSink = 2 };
    static constexpr int kNoParent = -1;
    static constexpr int kTerminal = -2;
    static constexpr int kOrphan = -3;

    int tail_of(int arc) const { return arcs_[arcs_[arc].sister].head; }
    void set_active(int v);
    int grow();                    // returns middle arc or -1
    double augment(int middle_arc);
    void adopt();
    bool rooted(int v, int& dist_out); // walks to a terminal, caches via timestamps

    std::vector<Arc> arcs_;
    std::vector<int> first_arc_;
    std::vector<double> tr_cap_;
    std::vector<int> parent_arc_;
    std::vector<int8_t> tree_;
    std::vector<uint32_t> ts_;
    std::vector<int> dist_;
    std::vector<uint8_t> queued_;
    std::vector<int> active_;
    size_t active_head_ = 0;
    std::vector<int> orphans_;
    uint32_t time_ = 0;
    double flow_ = 0.0;
    bool solved_ = false;
};

} // namespace synthseg
